// Copyright 2026 The Veriagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <sodium.h>

#include <array>
#include <compare>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "veriagg/common.hpp"

namespace veriagg {

inline void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialisation failed");
}

// 32-byte wire digest (SHA-256 everywhere on the wire).
struct Digest {
  std::array<u8, 32> bytes{};

  auto operator<=>(const Digest&) const = default;

  std::string hex() const { return to_hex(bytes); }
  std::span<const u8> span() const { return {bytes.data(), bytes.size()}; }
};

class Sha256 {
 public:
  Sha256() {
    ensure_sodium();
    crypto_hash_sha256_init(&state_);
  }
  Sha256& update(std::span<const u8> data) {
    crypto_hash_sha256_update(&state_, data.data(), data.size());
    return *this;
  }
  Sha256& update(const Digest& d) { return update(d.span()); }
  Sha256& update_u64(u64 v) {
    std::vector<u8> b;
    put_u64_le(b, v);
    return update(b);
  }
  Sha256& update_str(const std::string& s) {
    return update({reinterpret_cast<const u8*>(s.data()), s.size()});
  }
  Digest finish() {
    Digest d;
    crypto_hash_sha256_final(&state_, d.bytes.data());
    return d;
  }

 private:
  crypto_hash_sha256_state state_;
};

inline Digest sha256(std::span<const u8> data) {
  return Sha256().update(data).finish();
}

}  // namespace veriagg
