#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Overflow in an integer product is a hard error, never wraparound.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a) {
    throw OverflowError("checked_mul: 64-bit overflow in " + std::to_string(a) +
                        " * " + std::to_string(b));
  }
  return a * b;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin; the witness set below decides primality for
/// every 64-bit integer.
inline bool is_prime(u64 n) {
  constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 p : witnesses) {
    if (n % p == 0) return n == p;
  }
  const int s = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> s;
  for (u64 a : witnesses) {
    u64 x = pow_mod(a, d, n);
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

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime decomposition: primes strictly increasing, exponents >= 1,
/// empty exactly for n = 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  u32 distinct_primes() const { return static_cast<u32>(factors.size()); }
  bool is_prime_power() const { return factors.size() == 1; }
  bool square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
  }
  u64 radical() const {
    u64 r = 1;
    for (const auto& pp : factors) r = checked_mul(r, pp.prime);
    return r;
  }
  u32 odd_exponent_count() const {
    u32 k = 0;
    for (const auto& pp : factors) k += pp.exponent % 2;
    return k;
  }
};

inline Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  u64 rest = n;
  auto strip = [&](u64 p) {
    if (rest % p != 0) return;
    u32 e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  // 2-3-5 wheel; Miller-Rabin short-circuits once the cofactor is prime.
  static constexpr u64 gaps[] = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 p = 7;
  int g = 0;
  while (rest > 1) {
    if (p > rest / p || is_prime(rest)) {
      f.factors.push_back({rest, 1});
      break;
    }
    strip(p);
    p += gaps[g];
    g = (g + 1) & 7;
  }
  return f;
}

inline u64 ipow(u64 base, u32 exp) {
  u64 r = 1;
  for (u32 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// All divisors of n including 1 and n, ascending.
inline std::vector<u64> divisors(u64 n) {
  const Factorization f = factorize(n);
  std::vector<u64> divs{1};
  for (const auto& pp : f.factors) {
    const std::size_t count = divs.size();
    u64 power = 1;
    for (u32 e = 1; e <= pp.exponent; ++e) {
      power = checked_mul(power, pp.prime);
      for (std::size_t i = 0; i < count; ++i) divs.push_back(checked_mul(divs[i], power));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline u64 divisor_count(u64 n) {
  u64 c = 1;
  for (const auto& pp : factorize(n).factors) c *= pp.exponent + 1;
  return c;
}

/// n_star = prod p^ceil(a/2), n_substar = prod p^floor(a/2).
/// ceil(a/2) + floor(a/2) = a, so star * substar == n identically.
struct StarPair {
  u64 star = 1;
  u64 substar = 1;
};

inline StarPair star_pair(u64 n) {
  if (n < 2) throw std::invalid_argument("star_pair: n must be >= 2");
  StarPair sp;
  for (const auto& pp : factorize(n).factors) {
    sp.star = checked_mul(sp.star, ipow(pp.prime, (pp.exponent + 1) / 2));
    sp.substar = checked_mul(sp.substar, ipow(pp.prime, pp.exponent / 2));
  }
  return sp;
}

inline u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  u64 phi = 1;
  for (const auto& pp : factorize(n).factors) {
    phi = checked_mul(phi, ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1));
  }
  return phi;
}

/// Exponent multiset of a factorization, sorted descending; invariant under
/// any bijective renaming of the primes.
using PrimeSignature = std::vector<u32>;

inline PrimeSignature prime_signature(u64 n) {
  PrimeSignature sig;
  for (const auto& pp : factorize(n).factors) sig.push_back(pp.exponent);
  std::sort(sig.begin(), sig.end(), std::greater<>());
  return sig;
}

/// Exponent signature of m1 * ... * mk after relabeling each dim's primes to
/// be globally distinct: the multiset union of all per-dim signatures.
inline PrimeSignature combined_signature(std::span<const u64> dims) {
  if (dims.empty()) throw std::invalid_argument("combined_signature: dims must be nonempty");
  PrimeSignature sig;
  for (u64 d : dims) {
    if (d < 2) throw std::invalid_argument("combined_signature: every dim must be >= 2");
    for (const auto& pp : factorize(d).factors) sig.push_back(pp.exponent);
  }
  std::sort(sig.begin(), sig.end(), std::greater<>());
  return sig;
}

}  // namespace zdg
