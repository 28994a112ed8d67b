#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"

using namespace bv::exactmath;

namespace {

// Independent oracle: expand prod (x - zeta) over primitive k-th roots in
// complex arithmetic and round.
IntPoly cyclotomic_by_roots(unsigned k)
{
  std::vector<std::complex<double>> c{1.0};
  for (unsigned j = 1; j <= k; ++j) {
    if (std::gcd(j, k) != 1)
      continue;
    std::complex<double> const z = std::polar(1.0, 2.0 * M_PI * j / k);
    std::vector<std::complex<double>> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= z * c[i];
    }
    c = std::move(next);
  }
  std::vector<BigInt> out;
  for (auto const &v : c)
    out.emplace_back(static_cast<long long>(std::llround(v.real())));
  return IntPoly(std::move(out));
}

unsigned long phi_sieve_value(std::vector<unsigned long> const &sieve, unsigned long n)
{ return sieve[n]; }

std::vector<unsigned long> phi_sieve(unsigned long limit)
{
  std::vector<unsigned long> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0ul);
  for (unsigned long p = 2; p <= limit; ++p) {
    if (phi[p] != p)
      continue;
    for (unsigned long m = p; m <= limit; m += p)
      phi[m] -= phi[m] / p;
  }
  return phi;
}

IntPoly random_poly(std::mt19937_64 &rng, int max_degree)
{
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
  int const d = deg(rng);
  std::vector<BigInt> c(static_cast<std::size_t>(d + 1));
  for (auto &v : c)
    v = coef(rng);
  if (c.back() == 0)
    c.back() = 1;
  return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);

  for (unsigned k = 1; k <= 40; ++k)
    CHECK_MESSAGE(cyclotomic(k) == cyclotomic_by_roots(k), "k = " << k);
}

TEST_CASE("cyclotomic degree equals euler phi")
{
  for (unsigned k = 1; k <= 200; ++k) {
    CHECK(cyclotomic(k).is_monic());
    CHECK(BigInt(cyclotomic(k).degree()) == euler_phi(BigInt(k)));
  }
}

TEST_CASE("product of Phi_d over divisors is x^k - 1")
{
  for (unsigned k = 1; k <= 100; ++k) {
    IntPoly prod = IntPoly::constant(1);
    for (auto d : divisors(k))
      prod *= cyclotomic(d);
    CHECK(prod == IntPoly::binomial(k, 1));
  }
}

TEST_CASE("resultant examples")
{
  CHECK(resultant(IntPoly{-1, 1}, IntPoly{1, 1}) == 2);
  CHECK(resultant(cyclotomic(8), cyclotomic(12)) == 1);
  CHECK(resultant(cyclotomic(24), cyclotomic(30)) == 1);
  CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), std::invalid_argument);

  // Constant against degree-n polynomial: c^n.
  CHECK(resultant(IntPoly{3}, IntPoly{1, 0, 1}) == 9);
}

TEST_CASE("cyclotomic resultant closed form")
{
  CHECK(cyclotomic_resultant(1, 2) == 2);
  CHECK(cyclotomic_resultant(2, 6) == 3);
  CHECK(cyclotomic(6).eval(BigInt(-1)) == 3);
  CHECK(cyclotomic_resultant(8, 12) == 1);
  CHECK(cyclotomic_resultant(12, 8) == 1);
  CHECK_THROWS_AS(cyclotomic_resultant(5, 5), std::invalid_argument);

  // Exponent phi(min(a, b)) shows up once the smaller index exceeds 2.
  CHECK(cyclotomic_resultant(3, 6) == 4);
  CHECK(cyclotomic_resultant(4, 12) == 9);
  CHECK(cyclotomic_resultant(5, 10) == 16);

  for (unsigned a = 1; a <= 12; ++a)
    for (unsigned b = a + 1; b <= 12; ++b)
      CHECK(cyclotomic_resultant(a, b) == resultant(cyclotomic(a), cyclotomic(b)));
}

TEST_CASE("resultant is multiplicative in each argument")
{
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly const p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
    CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
    CHECK(resultant(r, p * q) == resultant(r, p) * resultant(r, q));
  }
}

TEST_CASE("evaluation")
{
  CHECK(eval_poly(cyclotomic(1), 2) == 1);
  CHECK(eval_poly(cyclotomic(12), 2) == 13);
  CHECK(eval_poly(cyclotomic(2).pow(2), 3) == 16);
  CHECK(eval_poly(IntPoly{}, 5) == 0);
}

TEST_CASE("cyclotomic factor recovery")
{
  IntPoly const p = cyclotomic(1).pow(2) * cyclotomic(2).pow(2) * cyclotomic(12);
  CHECK(cyclotomic_factors(p) == std::vector<std::uint64_t>{1, 1, 2, 2, 12});
  CHECK(cyclotomic_factors(-cyclotomic(30)) == std::vector<std::uint64_t>{30});
  CHECK_THROWS_AS(cyclotomic_factors(IntPoly{2, 1}), std::domain_error);
}

TEST_CASE("factorization")
{
  CHECK(factorize(1).prime_powers.empty());
  CHECK(factorize(793).prime_powers == std::vector<PrimePower>{{13, 1}, {61, 1}});
  CHECK(factorize(37).prime_powers == std::vector<PrimePower>{{37, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t const n = rng() % 1000000000000ull + 1;
    auto const f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t j = 0; j < f.prime_powers.size(); ++j) {
      CHECK(is_prime(f.prime_powers[j].prime));
      if (j)
        CHECK(f.prime_powers[j - 1].prime < f.prime_powers[j].prime);
    }
  }

  // Semiprime with two factors above the trial-division limit, and a value above 2^64.
  CHECK(factorize(BigInt(1000000007ull) * 998244353ull).prime_powers ==
        std::vector<PrimePower>{{998244353, 1}, {1000000007, 1}});
  BigInt const big = BigInt(1000000007ull) * 998244353ull * 1000000009ull * 1000000009ull;
  auto const fb = factorize(big);
  CHECK(fb.value() == big);
  CHECK(fb.prime_powers.size() == 3);
  CHECK(fb.prime_powers[2] == PrimePower{1000000009, 2});
}

TEST_CASE("euler phi")
{
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(1321) == 1320);
  CHECK(euler_phi(793) == 720);

  auto const sieve = phi_sieve(100000);
  for (unsigned long n = 1; n <= 100000; ++n) {
    BigInt const phi = euler_phi(n);
    REQUIRE(phi == phi_sieve_value(sieve, n));
    if (n > 6)
      REQUIRE(phi * phi >= n);
  }
}
