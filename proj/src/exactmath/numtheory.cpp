#include "exactmath/numtheory.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace bv::exactmath {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1000000;

u64 mulmod(u64 a, u64 b, u64 m)
{ return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m)
{
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s)
{
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1)
    return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1)
      return false;
  }
  return true;
}

u64 pollard_brent(u64 n, u64 seed)
{
  if (n % 2 == 0)
    return 2;
  std::mt19937_64 rng(seed);
  for (;;) {
    u64 const c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i)
        y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_rec_u64(u64 n, std::map<u64, unsigned> &out, u64 seed)
{
  if (n == 1)
    return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 const d = pollard_brent(n, seed);
  factor_rec_u64(d, out, seed + 1);
  factor_rec_u64(n / d, out, seed + 2);
}

BigInt powmod_big(BigInt base, BigInt e, BigInt const &m)
{
  BigInt r = 1;
  base %= m;
  while (e > 0) {
    if ((e & 1) != 0)
      r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

BigInt pollard_big(BigInt const &n, u64 seed)
{
  std::mt19937_64 rng(seed);
  for (;;) {
    BigInt const c = BigInt(rng()) % (n - 1) + 1;
    BigInt x = BigInt(rng()) % n, y = x, g = 1;
    auto f = [&](BigInt const &v) { return (v * v + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = x > y ? BigInt(x - y) : BigInt(y - x);
      g = gcd(diff, n);
    }
    if (g != n)
      return g;
  }
}

void factor_rec_big(BigInt const &n, std::map<BigInt, unsigned> &out, u64 seed)
{
  if (n == 1)
    return;
  if (n <= std::numeric_limits<u64>::max()) {
    std::map<u64, unsigned> small;
    factor_rec_u64(static_cast<u64>(n), small, seed);
    for (auto const &[p, e] : small)
      out[BigInt(p)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt const d = pollard_big(n, seed);
  factor_rec_big(d, out, seed + 1);
  factor_rec_big(n / d, out, seed + 2);
}

} // namespace

u64 gcd_u64(u64 a, u64 b)
{
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt gcd(BigInt a, BigInt b)
{
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

bool is_prime_u64(u64 n)
{
  if (n < 2)
    return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s))
      return false;
  }
  return true;
}

bool is_prime(BigInt const &n)
{
  if (n < 2)
    return false;
  if (n <= std::numeric_limits<u64>::max())
    return is_prime_u64(static_cast<u64>(n));

  for (u64 p = 2; p < 1000; ++p) {
    if (n % p == 0)
      return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::mt19937_64 rng(0x5eedULL);
  for (int round = 0; round < 64; ++round) {
    BigInt const a = BigInt(rng()) % (n - 3) + 2;
    BigInt x = powmod_big(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

BigInt Factorization::value() const
{
  BigInt v = 1;
  for (auto const &pp : prime_powers)
    v *= boost::multiprecision::pow(pp.prime, pp.exponent);
  return v;
}

Factorization factorize_u64(u64 n)
{
  if (n == 0)
    throw std::invalid_argument("factorize: n must be positive");

  std::map<u64, unsigned> found;
  for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_rec_u64(n, found, 1);

  Factorization f;
  for (auto const &[p, e] : found)
    f.prime_powers.push_back({BigInt(p), e});
  return f;
}

Factorization factorize(BigInt const &n)
{
  if (n < 1)
    throw std::invalid_argument("factorize: n must be positive");
  if (n <= std::numeric_limits<u64>::max())
    return factorize_u64(static_cast<u64>(n));

  std::map<BigInt, unsigned> found;
  BigInt m = n;
  for (u64 p = 2; p <= kTrialLimit && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++found[BigInt(p)];
      m /= p;
    }
  }
  factor_rec_big(m, found, 1);

  Factorization f;
  for (auto const &[p, e] : found)
    f.prime_powers.push_back({p, e});
  return f;
}

BigInt euler_phi(BigInt const &n)
{
  BigInt phi = 1;
  for (auto const &[p, e] : factorize(n).prime_powers)
    phi *= (p - 1) * boost::multiprecision::pow(p, e - 1);
  return phi;
}

std::vector<u64> divisors(u64 n)
{
  std::vector<u64> out{1};
  for (auto const &[p, e] : factorize_u64(n).prime_powers) {
    u64 const pv = static_cast<u64>(p);
    std::size_t const base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= pv;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<u64, unsigned>> as_prime_power(u64 n)
{
  if (n < 2)
    return std::nullopt;
  auto const f = factorize_u64(n);
  if (f.prime_powers.size() != 1)
    return std::nullopt;
  return std::make_pair(static_cast<u64>(f.prime_powers[0].prime), f.prime_powers[0].exponent);
}

} // namespace bv::exactmath
