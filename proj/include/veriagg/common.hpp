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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace veriagg {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 u128_from(u64 hi, u64 lo) {
  return (static_cast<u128>(hi) << 64) | lo;
}

inline u64 lo64(u128 v) { return static_cast<u64>(v); }
inline u64 hi64(u128 v) { return static_cast<u64>(v >> 64); }

inline int bit_length(u128 v) {
  if (v == 0) return 0;
  u64 hi = hi64(v);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  return 64 - __builtin_clzll(lo64(v));
}

// Moduli are restricted to < 2^126 so that a+b never wraps u128.
inline u128 add_mod(u128 a, u128 b, u128 m) {
  u128 s = a + b;
  return s >= m ? s - m : s;
}

inline u128 sub_mod(u128 a, u128 b, u128 m) {
  return a >= b ? a - b : a + (m - b);
}

inline u128 neg_mod(u128 a, u128 m) { return a == 0 ? 0 : m - a; }

// 256-bit value in little-endian 64-bit limbs.
struct U256 {
  u64 w[4] = {0, 0, 0, 0};
};

inline U256 mul_wide(u128 a, u128 b) {
  u64 a0 = lo64(a), a1 = hi64(a);
  u64 b0 = lo64(b), b1 = hi64(b);
  u128 p00 = static_cast<u128>(a0) * b0;
  u128 p01 = static_cast<u128>(a0) * b1;
  u128 p10 = static_cast<u128>(a1) * b0;
  u128 p11 = static_cast<u128>(a1) * b1;

  U256 r;
  r.w[0] = lo64(p00);
  u128 t = static_cast<u128>(hi64(p00)) + lo64(p01) + lo64(p10);
  r.w[1] = lo64(t);
  u128 t2 = static_cast<u128>(hi64(t)) + hi64(p01) + hi64(p10) + lo64(p11);
  r.w[2] = lo64(t2);
  r.w[3] = hi64(t2) + hi64(p11);
  return r;
}

inline int bit_length(const U256& v) {
  for (int i = 3; i >= 0; --i) {
    if (v.w[i] != 0) return i * 64 + 64 - __builtin_clzll(v.w[i]);
  }
  return 0;
}

inline bool u256_bit(const U256& v, int k) {
  return (v.w[k >> 6] >> (k & 63)) & 1;
}

inline U256 u256_shl(u128 v, int k) {
  U256 r;
  r.w[0] = lo64(v);
  r.w[1] = hi64(v);
  int limb = k >> 6, off = k & 63;
  U256 s;
  for (int i = 3; i >= 0; --i) {
    u64 cur = (i - limb >= 0) ? r.w[i - limb] : 0;
    u64 prev = (off && i - limb - 1 >= 0) ? r.w[i - limb - 1] : 0;
    s.w[i] = (off ? (cur << off) | (prev >> (64 - off)) : cur);
  }
  return s;
}

inline bool u256_ge(const U256& a, const U256& b) {
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] > b.w[i];
  }
  return true;
}

inline void u256_sub_inplace(U256& a, const U256& b) {
  u64 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    u128 d = static_cast<u128>(a.w[i]) - b.w[i] - borrow;
    a.w[i] = lo64(d);
    borrow = (d >> 64) ? 1 : 0;
  }
}

// Shift-subtract division of a 256-bit value by a 128-bit modulus.
// Returns the remainder; quot (if non-null) receives the quotient, which
// must fit in 128 bits for the uses in this library.
inline u128 u256_divmod(U256 v, u128 m, u128* quot = nullptr) {
  if (m == 0) throw std::domain_error("division by zero");
  u128 q = 0;
  int shift = bit_length(v) - bit_length(m);
  for (int k = shift; k >= 0; --k) {
    U256 sm = u256_shl(m, k);
    if (u256_ge(v, sm)) {
      u256_sub_inplace(v, sm);
      if (k < 128) q |= static_cast<u128>(1) << k;
    }
  }
  if (quot) *quot = q;
  return u128_from(v.w[1], v.w[0]);
}

inline u128 mul_mod(u128 a, u128 b, u128 m) {
  if (hi64(m) == 0) {
    // Operands already reduced; the product fits in 128 bits.
    return (a % m) * (b % m) % m;
  }
  return u256_divmod(mul_wide(a % m, b % m), m);
}

inline u128 pow_mod(u128 base, u128 exp, u128 m) {
  u128 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline u128 inv_mod(u128 a, u128 m) {
  // Extended Euclid; coefficients stay below m < 2^126 in magnitude.
  i128 t = 0, new_t = 1;
  i128 r = static_cast<i128>(m), new_r = static_cast<i128>(a % m);
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: element not invertible");
  if (t < 0) t += static_cast<i128>(m);
  return static_cast<u128>(t);
}

inline bool is_probable_prime(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for 64-bit inputs; 24 fixed bases beyond that.
  for (u64 a : {2ULL,  3ULL,  5ULL,  7ULL,  11ULL, 13ULL, 17ULL, 19ULL,
                23ULL, 29ULL, 31ULL, 37ULL, 41ULL, 43ULL, 47ULL, 53ULL,
                59ULL, 61ULL, 67ULL, 71ULL, 73ULL, 79ULL, 83ULL, 89ULL}) {
    if (a % n == 0) continue;
    u128 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Signed representative in [-q/2, q/2).
inline i128 centered(u128 a, u128 q) {
  u128 v = a % q;
  if (2 * v > q) return static_cast<i128>(v) - static_cast<i128>(q);
  return static_cast<i128>(v);
}

// round(centered(v) * t / q) mod t, rounding half up on the centered
// representative (ties break toward +infinity).
inline u64 scale_round_centered(u128 v, u64 t, u128 q) {
  v %= q;
  // floor((2vt + q) / 2q) equals floor(x + 1/2) for x = vt/q >= 0;
  // the centered (negative) case shifts the result by exactly t.
  U256 num = mul_wide(2 * v, t);
  u128 carry = static_cast<u128>(num.w[0]) + lo64(q);
  num.w[0] = lo64(carry);
  carry = static_cast<u128>(num.w[1]) + hi64(q) + hi64(carry);
  num.w[1] = lo64(carry);
  carry = static_cast<u128>(num.w[2]) + hi64(carry);
  num.w[2] = lo64(carry);
  num.w[3] += hi64(carry);
  u128 m_raw;
  u256_divmod(num, 2 * q, &m_raw);
  i128 m = static_cast<i128>(m_raw);
  if (2 * v > q) m -= t;
  i128 red = m % static_cast<i128>(t);
  if (red < 0) red += t;
  return static_cast<u64>(red);
}

// --- little-endian byte helpers -------------------------------------------

inline void put_u64_le(std::vector<u8>& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<u8>(v >> (8 * i)));
}

inline void put_u128_le(std::vector<u8>& out, u128 v) {
  for (int i = 0; i < 16; ++i) out.push_back(static_cast<u8>(v >> (8 * i)));
}

inline void put_bytes(std::vector<u8>& out, std::span<const u8> b) {
  out.insert(out.end(), b.begin(), b.end());
}

inline u64 get_u64_le(std::span<const u8> in, std::size_t off) {
  if (off + 8 > in.size()) throw std::out_of_range("get_u64_le");
  u64 v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[off + i];
  return v;
}

inline u128 get_u128_le(std::span<const u8> in, std::size_t off) {
  if (off + 16 > in.size()) throw std::out_of_range("get_u128_le");
  u128 v = 0;
  for (int i = 15; i >= 0; --i) v = (v << 8) | in[off + i];
  return v;
}

inline std::string to_hex(std::span<const u8> b) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (u8 c : b) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 15]);
  }
  return s;
}

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline u128 u128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal");
    v = v * 10 + static_cast<u128>(c - '0');
  }
  return v;
}

}  // namespace veriagg
