#include "gf/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "common/errors.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::gf {

namespace {

using Poly = std::vector<unsigned>; // ascending, over F_p

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p)
{
  // p is prime: a^(p-2)
  unsigned long long r = 1, b = a % p;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

Poly poly_mod(Poly a, Poly const &m, unsigned p)
{
  trim(a);
  int const dm = static_cast<int>(m.size()) - 1;
  unsigned const lead_inv = inv_mod(m.back(), p);
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    unsigned const c = static_cast<unsigned>(
        static_cast<unsigned long long>(a[static_cast<std::size_t>(i)]) * lead_inv % p);
    if (!c)
      continue;
    for (int j = 0; j <= dm; ++j) {
      auto &slot = a[static_cast<std::size_t>(i - dm + j)];
      slot = static_cast<unsigned>((slot + static_cast<unsigned long long>(p - c) * m[static_cast<std::size_t>(j)]) % p);
    }
  }
  trim(a);
  return a;
}

Poly poly_mul(Poly const &a, Poly const &b, unsigned p)
{
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<unsigned>((out[i + j] + static_cast<unsigned long long>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, Poly const &m, unsigned p)
{
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1)
      r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(Poly const &f, unsigned p)
{
  unsigned const d = static_cast<unsigned>(f.size()) - 1;
  if (d <= 1)
    return d == 1;
  Poly xpow{0, 1};
  for (unsigned i = 1; i <= d / 2; ++i) {
    xpow = poly_powmod(xpow, p, f, p);
    Poly diff = xpow;
    if (diff.size() < 2)
      diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty() || poly_gcd(f, diff, p).size() > 1)
      return false;
  }
  return true;
}

Poly decode(Elem a, unsigned p, unsigned e)
{
  Poly out(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = a % p;
    a /= p;
  }
  trim(out);
  return out;
}

Elem encode(Poly const &a, unsigned p)
{
  Elem v = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    v = v * p + a[i];
  return v;
}

} // namespace

Field::Field(unsigned p, unsigned e)
: p_(p), e_(e)
{
  if (e == 0)
    throw std::invalid_argument("make_field: degree must be >= 1");
  if (!exactmath::is_prime_u64(p))
    throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(e) +
                        " exceeds the field cap " + std::to_string(kMaxFieldOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  for (Elem enc = 0; enc < q_; ++enc) {
    Poly cand = decode(enc, p, e);
    cand.resize(e + 1, 0);
    cand[e] = 1;
    if (is_irreducible(cand, p)) {
      modulus_ = std::move(cand);
      break;
    }
  }

  auto const order_factors = exactmath::factorize_u64(q_ - 1).prime_powers;
  if (q_ > 2) {
    for (Elem cand = 1; cand < q_; ++cand) {
      Poly const c = decode(cand, p, e);
      bool primitive = true;
      for (auto const &pp : order_factors) {
        auto const ell = static_cast<std::uint64_t>(pp.prime);
        if (poly_powmod(c, (q_ - 1) / ell, modulus_, p) == Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        primitive_ = cand;
        break;
      }
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Poly const g = decode(primitive_, p, e);
  Poly cur{1};
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    Elem const v = encode(cur, p);
    exp_[k] = v;
    log_[v] = k;
    cur = poly_mod(poly_mul(cur, g, p), modulus_, p);
  }
}

std::string Field::name() const
{ return "GF(" + std::to_string(q_) + ")"; }

Elem Field::add(Elem a, Elem b) const
{
  if (e_ == 1)
    return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const
{
  if (e_ == 1)
    return (p_ - a) % p_;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const
{ return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const
{
  if (a == 0 || b == 0)
    return 0;
  std::uint64_t const k = static_cast<std::uint64_t>(log_[a]) + log_[b];
  return exp_[k % (q_ - 1)];
}

Elem Field::inv(Elem a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t n) const
{
  if (n == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * n) % (q_ - 1)];
}

Elem Field::from_int(long long v) const
{
  long long const m = static_cast<long long>(p_);
  return static_cast<Elem>(((v % m) + m) % m);
}

std::uint32_t Field::log(Elem a) const
{
  if (a == 0)
    throw std::domain_error("log of zero in " + name());
  return log_[a];
}

std::uint64_t Field::order(Elem a) const
{
  if (a == 0)
    throw std::domain_error("multiplicative order of zero");
  std::uint64_t const n = q_ - 1;
  return n / exactmath::gcd_u64(n, log_[a]);
}

FieldPtr make_field(unsigned p, unsigned e)
{
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;

  std::lock_guard lock(mutex);
  auto const key = std::make_pair(p, e);
  if (auto it = cache.find(key); it != cache.end())
    return it->second;
  auto field = std::make_shared<Field const>(p, e);
  cache.emplace(key, field);
  return field;
}

FieldPtr make_field_of_order(std::uint64_t q)
{
  auto const pp = exactmath::as_prime_power(q);
  if (!pp)
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make_field(static_cast<unsigned>(pp->first), pp->second);
}

FieldElement::FieldElement(FieldPtr field, Elem value)
: field_(std::move(field)), value_(value)
{
  if (!field_ || !field_->contains(value_))
    throw std::invalid_argument("field element out of range");
}

void FieldElement::check_same(FieldElement const &rhs) const
{
  if (field_ != rhs.field_)
    throw std::invalid_argument("cross-field operation: " + field_->name() + " vs " + rhs.field_->name());
}

FieldElement FieldElement::operator+(FieldElement const &rhs) const
{
  check_same(rhs);
  return {field_, field_->add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(FieldElement const &rhs) const
{
  check_same(rhs);
  return {field_, field_->sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(FieldElement const &rhs) const
{
  check_same(rhs);
  return {field_, field_->mul(value_, rhs.value_)};
}

FieldElement FieldElement::operator/(FieldElement const &rhs) const
{
  check_same(rhs);
  return {field_, field_->div(value_, rhs.value_)};
}

FieldElement FieldElement::pow(std::uint64_t n) const
{ return {field_, field_->pow(value_, n)}; }

FieldElement FieldElement::inverse() const
{ return {field_, field_->inv(value_)}; }

std::uint64_t FieldElement::order() const
{ return field_->order(value_); }

} // namespace bv::gf
