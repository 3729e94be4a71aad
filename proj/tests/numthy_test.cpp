#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "zdg/numthy.hpp"

using namespace zdg;

namespace {

u64 product_of(const Factorization& f) {
  u64 r = 1;
  for (const auto& pp : f.factors) r = checked_mul(r, ipow(pp.prime, pp.exponent));
  return r;
}

// Independent divisor oracle: trial scan up to sqrt(n).
std::vector<u64> divisors_brute(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 phi_brute(u64 n) {
  u64 c = 0;
  for (u64 x = 1; x <= n; ++x) c += std::gcd(x, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("factorize on known decompositions") {
  CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(2310).factors ==
        std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}});
  CHECK(factorize(97).factors == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(1024).factors == std::vector<PrimePower>{{2, 10}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n and keeps primes sorted, n <= 10^6") {
  for (u64 n = 2; n <= 1000000; ++n) {
    const Factorization f = factorize(n);
    u64 prev = 0;
    for (const auto& pp : f.factors) {
      REQUIRE(pp.prime > prev);
      REQUIRE(pp.exponent >= 1);
      prev = pp.prime;
    }
    if (product_of(f) != n) {
      REQUIRE(product_of(f) == n);  // fail loudly with the offending n visible
    }
  }
}

TEST_CASE("is_prime agrees with trial division on small range") {
  for (u64 n = 0; n <= 20000; ++n) {
    bool brute = n >= 2;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        brute = false;
        break;
      }
    }
    REQUIRE(is_prime(n) == brute);
  }
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK(!is_prime(2305843009213693953ULL));
}

TEST_CASE("divisors: examples, order, count") {
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(9) == std::vector<u64>{1, 3, 9});
  CHECK(divisors(30) == std::vector<u64>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(divisors(1) == std::vector<u64>{1});
  for (u64 n = 1; n <= 3000; ++n) {
    const auto divs = divisors(n);
    REQUIRE(divs == divisors_brute(n));
    u64 expected = 1;
    for (const auto& pp : factorize(n).factors) expected *= pp.exponent + 1;
    REQUIRE(divs.size() == expected);
  }
}

TEST_CASE("star_pair examples") {
  const auto sp72 = star_pair(72);
  CHECK(sp72.star == 12);
  CHECK(sp72.substar == 6);
  const auto sp30 = star_pair(30);
  CHECK(sp30.star == 30);
  CHECK(sp30.substar == 1);
  const auto sp12 = star_pair(12);
  CHECK(sp12.star == 6);
  CHECK(sp12.substar == 2);
  CHECK_THROWS_AS(star_pair(1), std::invalid_argument);
  CHECK_THROWS_AS(star_pair(0), std::invalid_argument);
}

TEST_CASE("star_pair multiplicative reconstruction, n <= 10^5") {
  for (u64 n = 2; n <= 100000; ++n) {
    const auto sp = star_pair(n);
    REQUIRE(checked_mul(sp.star, sp.substar) == n);
    REQUIRE(sp.star % sp.substar == 0);  // ceil >= floor per prime
  }
}

TEST_CASE("euler_phi examples and brute agreement") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  for (u64 p : {2, 3, 5, 7, 11, 13, 97}) CHECK(euler_phi(p) == p - 1);
  for (u64 n = 1; n <= 2000; ++n) REQUIRE(euler_phi(n) == phi_brute(n));
}

TEST_CASE("combined_signature examples") {
  CHECK(combined_signature(std::vector<u64>{12, 2}) == PrimeSignature{2, 1, 1});
  CHECK(combined_signature(std::vector<u64>{4, 9}) == PrimeSignature{2, 2});
  CHECK(combined_signature(std::vector<u64>{2, 2, 2, 2, 2}) ==
        PrimeSignature{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(combined_signature(std::vector<u64>{4, 1}), std::invalid_argument);
}

TEST_CASE("combined_signature is invariant under permutation of dims") {
  const std::vector<std::vector<u64>> tuples = {
      {12, 2}, {2, 12}, {4, 9, 10}, {10, 4, 9}, {9, 10, 4}, {6, 6, 8}, {8, 6, 6}};
  std::map<std::multiset<u64>, PrimeSignature> seen;
  for (const auto& dims : tuples) {
    std::multiset<u64> key(dims.begin(), dims.end());
    const auto sig = combined_signature(dims);
    auto [it, inserted] = seen.emplace(key, sig);
    if (!inserted) REQUIRE(it->second == sig);
    PrimeSignature sorted = sig;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    REQUIRE(sig == sorted);
  }
}

TEST_CASE("checked_mul overflow is an error") {
  CHECK(checked_mul(1ULL << 32, 1ULL << 31) == (1ULL << 63));
  CHECK_THROWS_AS(checked_mul(1ULL << 32, 1ULL << 32), OverflowError);
  CHECK_THROWS_AS(ipow(10, 20), OverflowError);
}

TEST_CASE("prime_signature basics") {
  CHECK(prime_signature(72) == PrimeSignature{3, 2});
  CHECK(prime_signature(30) == PrimeSignature{1, 1, 1});
  CHECK(prime_signature(2).size() == 1);
  CHECK(factorize(36).square_free() == false);
  CHECK(factorize(30).square_free() == true);
  CHECK(factorize(360).radical() == 30);
  CHECK(factorize(360).odd_exponent_count() == 2);  // 2^3 * 3^2 * 5
}
