#include "tori/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "common/errors.hpp"
#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::tori {

SignedPerm::SignedPerm(std::vector<unsigned> perm, std::vector<int> signs)
: perm_(std::move(perm)), signs_(std::move(signs))
{
  if (perm_.size() != signs_.size())
    throw std::invalid_argument("SignedPerm: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || seen[perm_[i]])
      throw std::invalid_argument("SignedPerm: not a permutation");
    if (signs_[i] != 1 && signs_[i] != -1)
      throw std::invalid_argument("SignedPerm: signs must be +-1");
    seen[perm_[i]] = true;
  }
}

SignedPerm SignedPerm::identity(unsigned r)
{
  std::vector<unsigned> p(r);
  std::iota(p.begin(), p.end(), 0u);
  return SignedPerm(std::move(p), std::vector<int>(r, 1));
}

SignedPerm SignedPerm::parse(std::string_view text, unsigned r)
{
  // Points 0..r-1 are i, r..2r-1 are i'.
  std::vector<unsigned> img(2 * r);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(2 * r, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("signed cycle notation: unexpected token '" + std::string(text.substr(i, 1)) + "'");
    ++i;
    std::vector<unsigned> cyc;
    for (;;) {
      skip();
      if (i >= text.size())
        throw ParseError("signed cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw ParseError("signed cycle notation: bad point '" + std::string(text.substr(i, 1)) + "'");
      unsigned const v = static_cast<unsigned>(std::stoul(std::string(text.substr(i, j - i))));
      bool const primed = j < text.size() && text[j] == '\'';
      std::string const token(text.substr(i, j - i + (primed ? 1 : 0)));
      if (v == 0 || v > r)
        throw ParseError("signed cycle notation: point '" + token + "' out of range");
      unsigned const pt = v - 1 + (primed ? r : 0);
      if (used[pt])
        throw ParseError("signed cycle notation: point '" + token + "' repeated");
      used[pt] = true;
      cyc.push_back(pt);
      i = j + (primed ? 1 : 0);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip();
  }

  std::vector<unsigned> perm(r);
  std::vector<int> signs(r);
  for (unsigned a = 0; a < r; ++a) {
    unsigned const b = img[a];
    unsigned const b_bar = b < r ? b + r : b - r;
    if (img[a + r] != b_bar)
      throw ParseError("signed cycle notation: '" + std::string(text) + "' does not respect the pairs {i, i'}");
    perm[a] = b % r;
    signs[a] = b < r ? 1 : -1;
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

bool SignedPerm::is_even() const
{
  return std::count(signs_.begin(), signs_.end(), -1) % 2 == 0;
}

std::vector<SignedPerm::Cycle> SignedPerm::cycles() const
{
  std::vector<Cycle> out;
  std::vector<bool> seen(perm_.size(), false);
  for (unsigned i = 0; i < perm_.size(); ++i) {
    if (seen[i])
      continue;
    Cycle c{0, 1};
    for (unsigned j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++c.length;
      c.sign *= signs_[j];
    }
    out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> SignedPerm::matrix() const
{
  std::size_t const r = perm_.size();
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    m[i][perm_[i]] = signs_[i];
  return m;
}

std::string SignedPerm::to_string() const
{
  unsigned const r = rank();
  auto name = [&](unsigned pt) { return std::to_string(pt % r + 1) + (pt >= r ? "'" : ""); };
  auto image = [&](unsigned pt) {
    unsigned const base = pt % r;
    bool const flip = (pt >= r) != (signs_[base] < 0);
    return perm_[base] + (flip ? r : 0);
  };
  std::ostringstream os;
  std::vector<bool> seen(2 * r, false);
  for (unsigned pt = 0; pt < 2 * r; ++pt) {
    if (seen[pt] || image(pt) == pt)
      continue;
    os << '(';
    bool first = true;
    for (unsigned j = pt; !seen[j]; j = image(j)) {
      seen[j] = true;
      os << (first ? "" : ",") << name(j);
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

SignedPerm operator*(SignedPerm const &a, SignedPerm const &b)
{
  if (a.rank() != b.rank())
    throw std::invalid_argument("SignedPerm product: rank mismatch");
  SignedPerm r;
  r.perm_.resize(a.rank());
  r.signs_.resize(a.rank());
  for (unsigned i = 0; i < a.rank(); ++i) {
    r.perm_[i] = b.perm_[a.perm_[i]];
    r.signs_[i] = a.signs_[i] * b.signs_[a.perm_[i]];
  }
  return r;
}

IntPoly cycle_polynomial(SignedPerm const &w)
{
  IntPoly p{1};
  for (auto const &c : w.cycles())
    p *= IntPoly::binomial(c.length, c.sign);
  return p;
}

BigInt torus_det(SignedPerm const &w, BigInt const &q, int twist)
{
  auto const m = w.matrix();
  std::size_t const r = m.size();
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      a[i][j] = q * twist * m[i][j] - (i == j ? 1 : 0);
  BigInt d = exactmath::determinant(std::move(a));
  return d < 0 ? BigInt(-d) : d;
}

BigInt centralizer_order(SignedPerm const &w, Ambient ambient)
{
  // Cycles of equal (length, sign) type: (2L)^m m! in the hyperoctahedral
  // group, L^m m! in S_r.
  std::map<std::pair<unsigned, int>, unsigned> mult;
  for (auto const &c : w.cycles())
    ++mult[{c.length, ambient == Ambient::Symmetric ? 1 : c.sign}];
  BigInt order = 1;
  bool has_odd = false;
  for (auto const &[type, m] : mult) {
    auto const [len, sign] = type;
    BigInt const base = ambient == Ambient::Symmetric ? len : 2 * len;
    for (unsigned k = 1; k <= m; ++k)
      order *= base * k;
    // A negative cycle or a positive odd cycle supplies an odd sign change.
    if (sign < 0 || len % 2 == 1)
      has_odd = true;
  }
  if (ambient == Ambient::D && has_odd)
    order /= 2;
  return order;
}

std::vector<SignedPerm> centralizer_elements(SignedPerm const &w, Ambient ambient)
{
  unsigned const r = w.rank();
  if (r > 8)
    throw CapExceeded("centralizer enumeration is limited to rank 8");
  std::vector<unsigned> base(r);
  std::iota(base.begin(), base.end(), 0u);
  std::vector<SignedPerm> out;
  std::vector<unsigned> p = base;
  do {
    // Permutation parts must commute with the permutation part of w.
    bool ok = true;
    for (unsigned i = 0; i < r && ok; ++i)
      ok = p[w.perm(i)] == w.perm(p[i]);
    if (!ok)
      continue;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> s(r);
      for (unsigned i = 0; i < r; ++i)
        s[i] = (mask >> i) & 1 ? -1 : 1;
      SignedPerm const x(p, s);
      if (ambient == Ambient::D && !x.is_even())
        continue;
      if (ambient == Ambient::Symmetric && mask)
        break;
      if (x * w == w * x)
        out.push_back(x);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t element_order(SignedPerm const &w)
{
  std::uint64_t ord = 1;
  for (auto const &c : w.cycles()) {
    std::uint64_t const len = c.sign < 0 ? 2 * c.length : c.length;
    ord = ord / exactmath::gcd_u64(ord, len) * len;
  }
  return ord;
}

std::vector<std::uint64_t> invariant_factors(std::vector<std::uint64_t> const &orders)
{
  std::uint64_t const n = orders.size();
  // For each prime p, |{x : x^(p^k) = 1}| = p^(sum_i min(k, e_i)) determines
  // the p-part exponents e_i.
  std::vector<std::vector<std::uint64_t>> prime_parts; // per prime, descending p-powers
  for (auto const &pp : exactmath::factorize_u64(n).prime_powers) {
    std::uint64_t const p = static_cast<std::uint64_t>(pp.prime);
    std::vector<unsigned> at_least; // at_least[k-1] = #factors with e_i >= k
    std::uint64_t prev = 1, pk = 1;
    for (unsigned k = 1; k <= pp.exponent; ++k) {
      pk *= p;
      std::uint64_t cnt = 0;
      for (auto o : orders)
        cnt += pk % o == 0 ? 1 : 0;
      unsigned rank_k = 0;
      for (std::uint64_t ratio = cnt / prev; ratio > 1; ratio /= p)
        ++rank_k;
      if (rank_k == 0)
        break;
      at_least.push_back(rank_k);
      prev = cnt;
    }
    std::vector<std::uint64_t> powers;
    for (unsigned i = 0; i < (at_least.empty() ? 0 : at_least[0]); ++i) {
      std::uint64_t v = 1;
      for (unsigned k = 0; k < at_least.size() && at_least[k] > i; ++k)
        v *= p;
      powers.push_back(v);
    }
    prime_parts.push_back(std::move(powers));
  }
  std::size_t len = 0;
  for (auto const &pw : prime_parts)
    len = std::max(len, pw.size());
  std::vector<std::uint64_t> out(len, 1);
  for (auto const &pw : prime_parts)
    for (std::size_t i = 0; i < pw.size(); ++i)
      out[len - 1 - i] *= pw[i];
  return out;
}

} // namespace bv::tori
