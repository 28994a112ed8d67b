#include "exactmath/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "exactmath/numtheory.hpp"

namespace bv::exactmath {

namespace {

std::mutex cache_mutex;
std::map<std::uint64_t, IntPoly> cache;

} // namespace

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
  std::size_t const n = m.size();
  if (n == 0)
    return 1;

  BigInt prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0)
        ++swap;
      if (swap == n)
        return 0;
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return negate ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

IntPoly cyclotomic(std::uint64_t k)
{
  if (k == 0)
    throw std::invalid_argument("cyclotomic: k must be >= 1");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(k); it != cache.end())
      return it->second;
  }

  IntPoly phi = IntPoly::binomial(static_cast<unsigned>(k), 1);
  for (std::uint64_t d : divisors(k)) {
    if (d != k)
      phi = phi.exact_div(cyclotomic(d));
  }

  std::lock_guard lock(cache_mutex);
  cache.emplace(k, phi);
  return phi;
}

BigInt resultant(IntPoly const &p, IntPoly const &q)
{
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant: zero polynomial");

  auto const m = static_cast<std::size_t>(p.degree());
  auto const n = static_cast<std::size_t>(q.degree());
  std::size_t const size = m + n;
  std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size));

  // Rows hold coefficients in descending degree order.
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i)
      syl[row][row + i] = p.coeffs()[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i)
      syl[n + row][row + i] = q.coeffs()[n - i];

  BigInt det = determinant(std::move(syl));
  return det < 0 ? BigInt(-det) : det;
}

BigInt cyclotomic_resultant(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0)
    throw std::invalid_argument("cyclotomic_resultant: indices must be >= 1");
  if (a == b)
    throw std::invalid_argument("cyclotomic_resultant: equal indices are not covered");

  std::uint64_t const lo = std::min(a, b), hi = std::max(a, b);
  if (hi % lo != 0)
    return 1;
  if (auto pp = as_prime_power(hi / lo))
    return boost::multiprecision::pow(BigInt(pp->first),
                                      static_cast<unsigned>(euler_phi(BigInt(lo))));
  return 1;
}

BigInt cyclotomic_product_resultant(std::vector<std::uint64_t> const &lhs,
                                    std::vector<std::uint64_t> const &rhs)
{
  BigInt r = 1;
  for (auto a : lhs) {
    for (auto b : rhs) {
      if (a == b)
        return 0;
      r *= cyclotomic_resultant(a, b);
    }
  }
  return r;
}

BigInt eval_poly(IntPoly const &p, BigInt const &q)
{ return p.eval(q); }

std::vector<std::uint64_t> cyclotomic_factors(IntPoly const &p)
{
  if (p.is_zero())
    throw std::domain_error("cyclotomic_factors: zero polynomial");

  IntPoly rest = p;
  if (rest.leading() < 0)
    rest = -rest;
  std::vector<std::uint64_t> found;

  // Every root of unity of degree <= d has order k with phi(k) <= d, hence k <= 2 d^2 is a safe bound.
  std::uint64_t const bound = 2 * static_cast<std::uint64_t>(std::max(1, rest.degree())) *
                              static_cast<std::uint64_t>(std::max(1, rest.degree())) + 2;
  for (std::uint64_t k = 1; k <= bound && rest.degree() > 0; ++k) {
    IntPoly const phi = cyclotomic(k);
    if (phi.degree() > rest.degree())
      continue;
    for (;;) {
      auto [quot, rem] = rest.divmod_monic(phi);
      if (!rem.is_zero())
        break;
      found.push_back(k);
      rest = std::move(quot);
    }
  }
  if (rest != IntPoly::constant(1))
    throw std::domain_error("cyclotomic_factors: not a product of cyclotomic polynomials");
  return found;
}

IntPoly cyclotomic_product(std::vector<std::uint64_t> const &indices)
{
  IntPoly r = IntPoly::constant(1);
  for (auto k : indices)
    r *= cyclotomic(k);
  return r;
}

} // namespace bv::exactmath
