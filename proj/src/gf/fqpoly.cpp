#include "gf/fqpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "exactmath/numtheory.hpp"

namespace bv::gf {

FqPoly::FqPoly(FieldPtr field, std::vector<Elem> coeffs)
: field_(std::move(field)), coeffs_(std::move(coeffs))
{
  if (!field_)
    throw std::invalid_argument("FqPoly: null field");
  trim();
}

FqPoly FqPoly::monomial(FieldPtr field, Elem c, unsigned degree)
{
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return FqPoly(std::move(field), std::move(v));
}

FqPoly FqPoly::linear(FieldPtr field, Elem a)
{
  Elem const na = field->neg(a);
  return FqPoly(std::move(field), {na, 1});
}

void FqPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Elem FqPoly::eval(Elem x) const
{
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

FqPoly FqPoly::monic() const
{
  if (is_zero())
    return *this;
  Elem const li = field_->inv(coeffs_.back());
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = field_->mul(coeffs_[i], li);
  return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::derivative() const
{
  if (coeffs_.size() <= 1)
    return FqPoly(field_);
  std::vector<Elem> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), coeffs_[i]);
  return FqPoly(field_, std::move(d));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(FqPoly const &d) const
{
  if (d.field_ != field_)
    throw std::invalid_argument("FqPoly::divmod: field mismatch");
  if (d.is_zero())
    throw std::domain_error("FqPoly::divmod: division by zero polynomial");

  std::vector<Elem> rem = coeffs_;
  int const dd = d.degree();
  if (degree() < dd)
    return {FqPoly(field_), *this};

  Elem const li = field_->inv(d.coeffs_.back());
  std::vector<Elem> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int i = degree(); i >= dd; --i) {
    Elem const c = field_->mul(rem[static_cast<std::size_t>(i)], li);
    if (!c)
      continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto &slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = field_->sub(slot, field_->mul(c, d.coeffs_[static_cast<std::size_t>(j)]));
    }
  }
  return {FqPoly(field_, std::move(quot)), FqPoly(field_, std::move(rem))};
}

bool FqPoly::is_squarefree() const
{
  if (degree() <= 0)
    return true;
  return gcd(*this, derivative()).degree() == 0;
}

bool FqPoly::is_irreducible() const
{
  int const d = degree();
  if (d <= 0)
    return false;
  if (d == 1)
    return true;
  FqPoly const f = monic();
  FqPoly const x = monomial(field_, 1, 1);
  FqPoly xpow = x;
  for (int i = 1; i <= d / 2; ++i) {
    xpow = powmod(xpow, field_->q(), f);
    if (gcd(f, xpow - x).degree() != 0)
      return false;
  }
  return true;
}

std::string FqPoly::to_string(char var) const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Elem const c = coeffs_[static_cast<std::size_t>(i)];
    if (!c)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (c != 1 || i == 0)
      os << c;
    if (i >= 1)
      os << var;
    if (i >= 2)
      os << '^' << i;
  }
  return os.str();
}

FqPoly operator+(FqPoly const &a, FqPoly const &b)
{
  auto const &f = a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f->add(a.coeff(i), b.coeff(i));
  return FqPoly(f, std::move(c));
}

FqPoly operator-(FqPoly const &a, FqPoly const &b)
{
  auto const &f = a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f->sub(a.coeff(i), b.coeff(i));
  return FqPoly(f, std::move(c));
}

FqPoly operator*(FqPoly const &a, FqPoly const &b)
{
  auto const &f = a.field_;
  if (a.is_zero() || b.is_zero())
    return FqPoly(f);
  std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = f->add(c[i + j], f->mul(a.coeffs_[i], b.coeffs_[j]));
  return FqPoly(f, std::move(c));
}

FqPoly gcd(FqPoly a, FqPoly b)
{
  while (!b.is_zero()) {
    FqPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPoly powmod(FqPoly base, std::uint64_t e, FqPoly const &m)
{
  FqPoly r(m.field(), {1});
  base = base.divmod(m).second;
  while (e) {
    if (e & 1)
      r = (r * base).divmod(m).second;
    base = (base * base).divmod(m).second;
    e >>= 1;
  }
  return r;
}

Embedding::Embedding(FieldPtr small, FieldPtr big)
: small_(std::move(small)), big_(std::move(big))
{
  if (small_->p() != big_->p() || big_->e() % small_->e() != 0)
    throw std::invalid_argument("no embedding of " + small_->name() + " into " + big_->name());

  // Root of the small modulus inside the big field.
  std::vector<Elem> mod_big;
  for (unsigned c : small_->modulus())
    mod_big.push_back(big_->from_int(c));
  FqPoly const m(big_, mod_big);
  Elem root = 0;
  bool found = false;
  for (Elem cand = 0; cand < big_->q(); ++cand) {
    if (m.eval(cand) == 0) {
      root = cand;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::logic_error("embedding: modulus has no root in the extension");

  forward_.resize(small_->q());
  backward_.assign(big_->q(), -1);
  unsigned const p = small_->p();
  for (Elem a = 0; a < small_->q(); ++a) {
    Elem acc = 0, power = 1, digits = a;
    for (unsigned i = 0; i < small_->e(); ++i) {
      acc = big_->add(acc, big_->mul(big_->from_int(digits % p), power));
      power = big_->mul(power, root);
      digits /= p;
    }
    forward_[a] = acc;
    backward_[acc] = a;
  }
}

std::optional<Elem> Embedding::to_small(Elem b) const
{
  if (b >= backward_.size() || backward_[b] < 0)
    return std::nullopt;
  return static_cast<Elem>(backward_[b]);
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

FieldElement relative_norm(FieldElement const &a, unsigned sub_degree)
{
  auto const &f = a.field();
  if (sub_degree == 0 || f->e() % sub_degree != 0)
    throw std::invalid_argument("relative_norm: subfield degree " + std::to_string(sub_degree) +
                                " does not divide " + std::to_string(f->e()));
  std::uint64_t const q = ipow(f->p(), sub_degree);
  return a.pow((std::uint64_t{f->q()} - 1) / (q - 1));
}

FieldElement relative_norm(FieldElement const &a, Embedding const &emb)
{
  if (a.field() != emb.big())
    throw std::invalid_argument("relative_norm: element not in the embedding's extension field");
  FieldElement const n = relative_norm(a, emb.small()->e());
  auto const back = emb.to_small(n.value());
  if (!back)
    throw std::logic_error("relative_norm: norm outside the subfield");
  return {emb.small(), *back};
}

unsigned degree_over(FieldElement const &a, std::uint64_t q)
{
  auto const &f = a.field();
  Elem x = a.value();
  for (unsigned d = 1; d <= f->e(); ++d) {
    x = f->pow(x, q);
    if (x == a.value())
      return d;
  }
  throw std::invalid_argument("degree_over: q is not the order of a subfield");
}

FieldElement norm_one_generator(std::uint64_t q, unsigned n)
{
  if (n < 2)
    throw std::invalid_argument("norm_one_generator: extension degree must be >= 2");
  auto const pp = exactmath::as_prime_power(q);
  if (!pp)
    throw std::invalid_argument("norm_one_generator: " + std::to_string(q) + " is not a prime power");

  auto const big = make_field(static_cast<unsigned>(pp->first), pp->second * n);
  std::uint64_t const big_order = big->q() - 1;
  for (Elem gamma = 1; gamma < big->q(); ++gamma) {
    if (big->order(gamma) != big_order)
      continue;
    FieldElement const alpha(big, big->pow(gamma, q - 1));
    if (degree_over(alpha, q) == n)
      return alpha;
  }
  throw std::runtime_error("norm_one_generator: exhausted primitive elements of " + big->name());
}

FqPoly minimal_polynomial(FieldElement const &a, FieldPtr const &base)
{
  Embedding const emb(base, a.field());
  auto const &big = a.field();
  unsigned const d = degree_over(a, base->q());

  FqPoly prod(big, {1});
  Elem conj = a.value();
  for (unsigned i = 0; i < d; ++i) {
    prod = prod * FqPoly::linear(big, conj);
    conj = big->pow(conj, base->q());
  }

  std::vector<Elem> small;
  small.reserve(prod.coeffs().size());
  for (Elem c : prod.coeffs()) {
    auto const s = emb.to_small(c);
    if (!s)
      throw std::logic_error("minimal_polynomial: coefficient outside the base field");
    small.push_back(*s);
  }
  return FqPoly(base, std::move(small));
}

} // namespace bv::gf
