#include "exactmath/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace bv::exactmath {

IntPoly::IntPoly(std::vector<BigInt> coeffs)
: coeffs_(std::move(coeffs))
{ normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs)
{
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs)
    coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(BigInt c)
{ return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, unsigned degree)
{
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(unsigned k, BigInt c)
{
  std::vector<BigInt> v(k + 1);
  v[k] += 1;
  v[0] -= c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const
{ return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt const &IntPoly::leading() const
{
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const
{ return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPoly::eval(BigInt const &x) const
{
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::pow(unsigned e) const
{
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

IntPoly IntPoly::reflect() const
{
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2)
    r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPoly IntPoly::derivative() const
{
  if (coeffs_.size() <= 1)
    return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(IntPoly const &divisor) const
{
  if (!divisor.is_monic())
    throw std::invalid_argument("divmod_monic: divisor must be monic");

  std::vector<BigInt> rem = coeffs_;
  int const dd = divisor.degree();
  if (degree() < dd)
    return {IntPoly{}, *this};

  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    BigInt const c = rem[static_cast<std::size_t>(i)];
    if (c == 0)
      continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::exact_div(IntPoly const &divisor) const
{
  auto [q, r] = divmod_monic(divisor);
  if (!r.is_zero())
    throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

std::string IntPoly::to_string(char var) const
{
  if (coeffs_.empty())
    return "0";

  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0)
      continue;
    bool const neg = c < 0;
    if (neg)
      c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    if (i == 0 || c != 1)
      os << c;
    if (i >= 1)
      os << var;
    if (i >= 2)
      os << '^' << i;
  }
  return os.str();
}

IntPoly &IntPoly::operator+=(IntPoly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly &IntPoly::operator-=(IntPoly const &rhs)
{
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(IntPoly const &lhs, IntPoly const &rhs)
{
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly &IntPoly::operator*=(IntPoly const &rhs)
{ return *this = *this * rhs; }

IntPoly IntPoly::operator-() const
{
  IntPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

} // namespace bv::exactmath
