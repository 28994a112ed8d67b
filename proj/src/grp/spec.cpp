#include "grp/spec.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "common/errors.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::grp {

Level parse_level(std::string_view text)
{
  if (text == "group")
    return Level::Group;
  if (text == "quotient")
    return Level::Quotient;
  throw ParseError("level: expected 'group' or 'quotient', got '" + std::string(text) + "'");
}

std::string to_string(Level level)
{
  return level == Level::Group ? "group" : "quotient";
}

GroupSpec GroupSpec::parse(std::string_view text)
{
  std::string const s(text);
  GroupSpec spec;
  if (!s.empty() && s[0] == '@') {
    if (s.size() == 1)
      throw ParseError("group spec: '@' needs a file name");
    spec.kind = GroupKind::File;
    spec.path = s.substr(1);
    return spec;
  }

  static std::regex const perm_re(R"(([AS])(\d{1,3}))");
  static std::regex const lie_re(R"((SL|PSL|SU)\(\s*(\d{1,3})\s*,\s*(\d{1,7})\s*\))");
  std::smatch m;
  if (std::regex_match(s, m, perm_re)) {
    spec.kind = m[1] == "A" ? GroupKind::Alternating : GroupKind::Symmetric;
    spec.n = static_cast<unsigned>(std::stoul(m[2]));
    if (spec.n == 0)
      throw ParseError("group spec: degree '0' in '" + s + "'");
    return spec;
  }
  if (std::regex_match(s, m, lie_re)) {
    spec.kind = m[1] == "SL" ? GroupKind::SL : m[1] == "PSL" ? GroupKind::PSL : GroupKind::SU;
    spec.n = static_cast<unsigned>(std::stoul(m[2]));
    spec.q = static_cast<unsigned>(std::stoul(m[3]));
    if (spec.n < 2)
      throw ParseError("group spec: dimension '" + m[2].str() + "' must be at least 2");
    if (!exactmath::as_prime_power(spec.q))
      throw ParseError("group spec: '" + m[3].str() + "' is not a prime power");
    if (spec.kind == GroupKind::SU && spec.n != 3)
      throw ParseError("group spec: only SU(3,q) is supported, got dimension '" + m[2].str() + "'");
    return spec;
  }
  throw ParseError("group spec: cannot parse '" + s + "'");
}

std::string GroupSpec::canonical() const
{
  switch (kind) {
  case GroupKind::Alternating: return "A" + std::to_string(n);
  case GroupKind::Symmetric: return "S" + std::to_string(n);
  case GroupKind::SL: return "SL(" + std::to_string(n) + "," + std::to_string(q) + ")";
  case GroupKind::PSL: return "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")";
  case GroupKind::SU: return "SU(" + std::to_string(n) + "," + std::to_string(q) + ")";
  case GroupKind::File: return "@" + path;
  }
  return {};
}

namespace {

std::uint64_t factorial_capped(unsigned n, std::uint64_t limit)
{
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    f *= i;
    if (f > limit)
      return limit + 1;
  }
  return f;
}

Perm cycle_on(unsigned first, unsigned last, unsigned degree)
{
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i)
    img[i] = static_cast<Point>(i);
  for (unsigned i = first; i < last; ++i)
    img[i] = static_cast<Point>(i + 1);
  img[last] = static_cast<Point>(first);
  return Perm(std::move(img));
}

GroupPtr symmetric_or_alternating(GroupSpec const &spec, std::size_t cap)
{
  unsigned const n = spec.n;
  bool const alt = spec.kind == GroupKind::Alternating;
  std::uint64_t order = factorial_capped(n, cap * 2);
  if (alt && n >= 2)
    order /= 2;
  if (order > cap)
    throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements (" +
                      spec.canonical() + ")");
  std::vector<Perm> gens;
  if (alt) {
    if (n >= 3) {
      gens.push_back(n % 2 ? cycle_on(0, n - 1, n) : cycle_on(1, n - 1, n));
      gens.push_back(cycle_on(0, 2, n));
    }
  } else if (n >= 2) {
    gens.push_back(cycle_on(0, n - 1, n));
    gens.push_back(cycle_on(0, 1, n));
  }
  if (gens.empty())
    gens.push_back(Perm::identity(n));
  return FiniteGroup::generate(gens, cap, spec.canonical());
}

GroupPtr from_file(GroupSpec const &spec, std::size_t cap)
{
  std::ifstream in(spec.path);
  if (!in)
    throw ParseError("group spec: cannot open '" + spec.path + "'");
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto const start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    gens.push_back(Perm::from_cycles(line.substr(start)));
  }
  if (gens.empty())
    throw ParseError("group spec: no generators in '" + spec.path + "'");
  std::size_t degree = 1;
  for (auto const &g : gens)
    degree = std::max(degree, g.degree());
  for (auto &g : gens)
    g = g.padded(degree);
  return FiniteGroup::generate(gens, cap, spec.canonical());
}

std::vector<Matrix> sl_generators(gf::Field const &f, unsigned n)
{
  // Elementary transvections I + c E_ij with c running over an additive basis.
  std::vector<Matrix> gens;
  for (unsigned k = 0; k < f.e(); ++k) {
    gf::Elem const c = f.pow(f.primitive(), k);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        if (i == j)
          continue;
        Matrix m = Matrix::identity(n);
        m(i, j) = c;
        gens.push_back(std::move(m));
      }
  }
  return gens;
}

std::uint64_t sl_order(std::uint64_t n, std::uint64_t q)
{
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t qn = 1, qi = 1;
    for (std::uint64_t k = 0; k < n; ++k)
      qn *= q;
    for (std::uint64_t k = 0; k < i; ++k)
      qi *= q;
    order *= qn - qi;
    if (order > (std::uint64_t{1} << 40))
      return order;
  }
  return order / (q - 1);
}

// Unitary matrices of determinant one preserving the antidiagonal Hermitian
// form over F_{q^2}. Root subgroups first, then the diagonal torus.
std::vector<Matrix> su3_candidates(gf::Field const &f, unsigned q)
{
  unsigned const qq = f.q();
  Matrix j{3, {0, 0, 1, 0, 1, 0, 1, 0, 0}};
  auto unitary = [&](Matrix const &m) {
    Matrix const bar = transpose(entrywise_pow(f, m, q));
    return mat_mul(f, mat_mul(f, m, j), bar) == j && determinant(f, m) == 1;
  };

  std::vector<Matrix> out;
  for (gf::Elem a = 0; a < qq; ++a)
    for (gf::Elem b = 0; b < qq; ++b)
      for (gf::Elem c = 0; c < qq; ++c) {
        if (!a && !b && !c)
          continue;
        Matrix up{3, {1, a, b, 0, 1, c, 0, 0, 1}};
        if (unitary(up))
          out.push_back(up);
      }
  std::size_t const upper = out.size();
  for (std::size_t k = 0; k < upper; ++k)
    out.push_back(transpose(out[k]));
  for (gf::Elem a = 1; a < qq; ++a)
    for (gf::Elem b = 1; b < qq; ++b) {
      gf::Elem const c = f.inv(f.mul(a, b));
      Matrix d{3, {a, 0, 0, 0, b, 0, 0, 0, c}};
      if (unitary(d))
        out.push_back(d);
    }
  return out;
}

} // namespace

GroupPtr matrix_group(gf::FieldPtr const &f, unsigned n, std::vector<Matrix> const &gens, bool projective,
                      std::string name, std::size_t cap)
{
  auto action = std::make_shared<MatrixAction const>(f, n, projective);
  std::vector<Perm> perms;
  for (auto const &m : gens)
    perms.push_back(action->perm_of(m));
  if (perms.empty())
    perms.push_back(Perm::identity(action->degree()));
  return FiniteGroup::generate(perms, cap, std::move(name), std::move(action));
}

GroupPtr build_group(GroupSpec const &spec, Level level, std::size_t cap)
{
  switch (spec.kind) {
  case GroupKind::Alternating:
  case GroupKind::Symmetric:
  case GroupKind::File: {
    GroupPtr g = spec.kind == GroupKind::File ? from_file(spec, cap) : symmetric_or_alternating(spec, cap);
    return level == Level::Group ? g : quotient_by_center(g).group;
  }
  case GroupKind::SL:
  case GroupKind::PSL: {
    std::uint64_t const order = sl_order(spec.n, spec.q);
    bool const projective = spec.kind == GroupKind::PSL || level == Level::Quotient;
    if (!projective && order > cap)
      throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements (" +
                        spec.canonical() + " has order " + std::to_string(order) + ")");
    auto const f = gf::make_field_of_order(spec.q);
    std::string name = spec.canonical();
    if (spec.kind == GroupKind::SL && level == Level::Quotient)
      name = "P" + name;
    return matrix_group(f, spec.n, sl_generators(*f, spec.n), projective, name, cap);
  }
  case GroupKind::SU: {
    std::uint64_t const q = spec.q;
    std::uint64_t const order = q * q * q * (q * q - 1) * (q * q * q + 1);
    bool const projective = level == Level::Quotient;
    std::uint64_t const target = projective ? order / exactmath::gcd_u64(3, q + 1) : order;
    if (target > cap)
      throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements (" +
                        spec.canonical() + " has order " + std::to_string(target) + ")");
    auto const f = gf::make_field_of_order(q * q);
    std::string const name = (projective ? "P" : "") + spec.canonical();
    std::vector<Matrix> gens;
    GroupPtr g = matrix_group(f, 3, gens, projective, name, cap);
    for (auto const &cand : su3_candidates(*f, spec.q)) {
      if (g->order() == target)
        break;
      if (g->index_of(g->action()->perm_of(cand)))
        continue;
      gens.push_back(cand);
      g = matrix_group(f, 3, gens, projective, name, cap);
    }
    if (g->order() != target)
      throw std::logic_error("SU(3,q) construction reached order " + std::to_string(g->order()) + ", expected " +
                             std::to_string(target));
    return g;
  }
  }
  throw std::logic_error("build_group: unknown kind");
}

std::string format_element(FiniteGroup const &g, Index x)
{
  if (g.action() && !g.action()->projective())
    return format_matrix(g.action()->matrix_of(g.element(x)));
  return g.element(x).to_cycles();
}

Index parse_element(FiniteGroup const &g, std::string_view text)
{
  auto const start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos)
    throw ParseError("element: empty text");
  text = text.substr(start);
  std::optional<Index> idx;
  if (text[0] == '[') {
    if (!g.action() || g.action()->projective())
      throw ParseError("element: matrix notation '" + std::string(text) + "' used for a permutation group");
    Matrix const m = parse_matrix(text, *g.action()->field());
    if (m.n != g.action()->dimension())
      throw ParseError("element: matrix '" + std::string(text) + "' has the wrong dimension");
    idx = g.index_of(g.action()->perm_of(m));
  } else {
    Perm const p = Perm::from_cycles(text);
    idx = g.index_of(p);
  }
  if (!idx)
    throw ParseError("element: '" + std::string(text) + "' is not in " + (g.name().empty() ? "the group" : g.name()));
  return *idx;
}

} // namespace bv::grp
