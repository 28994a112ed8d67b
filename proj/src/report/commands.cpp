#include "report/commands.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "chars/softbound.hpp"
#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"
#include "grp/subgroups.hpp"
#include "ree/ree.hpp"
#include "tori/singer.hpp"
#include "tori/torus_pairs.hpp"

namespace bv::report {

namespace {

std::string str(exactmath::BigInt const &n) { return n.str(); }
std::string str(std::uint64_t n) { return std::to_string(n); }

std::string real(double x)
{
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }
std::string yes(bool b) { return b ? "true" : "false"; }

template <class T>
std::string joined(std::vector<T> const &v, char const *sep = ",")
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? sep : "") << v[i];
  return os.str();
}

std::string structure(std::optional<std::vector<std::uint64_t>> const &s)
{
  if (!s)
    return "n/a";
  if (s->empty())
    return "1";
  std::vector<std::string> parts;
  for (auto f : *s)
    parts.push_back("Z" + std::to_string(f));
  return joined(parts, " x ");
}

void add_group(Section &s, beauville::Target const &t)
{
  s.add("group", t.spec.canonical());
  s.add("level", grp::to_string(t.level));
  s.add("order", str(t.group->order()));
}

Verdict from(beauville::SearchStatus s)
{
  switch (s) {
  case beauville::SearchStatus::Found:
    return Verdict::Pass;
  case beauville::SearchStatus::Nonexistent:
    return Verdict::Nonexistent;
  case beauville::SearchStatus::Inconclusive:
    return Verdict::Inconclusive;
  }
  return Verdict::Fail;
}

void append_certificate(Report &r, beauville::BeauvilleCertificate const &c)
{
  for (auto &s : parse_sections(beauville::serialize(c)))
    r.sections.push_back(std::move(s));
}

} // namespace

Report cmd_search(beauville::Target const &t, beauville::SearchStrategy const &s)
{
  auto const rep = beauville::search_structure(t, s);
  Report r{"search", from(rep.status), {}};
  Section &sec = r.section("search");
  add_group(sec, t);
  sec.add("mode", beauville::to_string(s.mode));
  sec.add("seed", str(s.seed));
  sec.add("budget", str(s.budget));
  sec.add("status", beauville::to_string(rep.status));
  sec.add("candidates", str(rep.candidates));
  sec.add("generating_pairs", str(rep.generating_pairs));
  sec.add("sigma_types", str(rep.sigma_types));
  sec.add("type_pairs_checked", str(rep.type_pairs_checked));
  if (!rep.note.empty())
    sec.add("note", rep.note);
  if (rep.certificate)
    append_certificate(r, *rep.certificate);
  return r;
}

Report cmd_verify(std::string const &certificate_text, std::size_t cap)
{
  auto const cert = beauville::parse_certificate(certificate_text);
  auto const out = beauville::reverify(cert, cap);
  Report r{"verify", out.certificate ? Verdict::Pass : Verdict::Fail, {}};
  Section &sec = r.section("verify");
  sec.add("group", cert.group);
  sec.add("level", grp::to_string(cert.level));
  sec.add("result", out.certificate ? "verified" : "refused");
  if (!out.reason.empty())
    sec.add("reason", out.reason);
  append_certificate(r, cert);
  return r;
}

Report cmd_tori(std::string const &type, unsigned rank, std::uint64_t q_lo, std::uint64_t q_hi)
{
  if (q_lo > q_hi)
    throw std::invalid_argument("tori: empty q range " + str(q_lo) + ".." + str(q_hi));
  auto const pair = tori::torus_pair_for(type, rank);
  Report r{"tori", Verdict::Pass, {}};
  Section &sec = r.section("tori");
  sec.add("type", pair.type);
  sec.add("case", tori::case_name(pair.type_case));
  sec.add("rank", str(rank));
  sec.add("order1", pair.order1.to_string('q'));
  sec.add("order2", pair.order2.to_string('q'));
  sec.add("cyclotomic1", joined(exactmath::cyclotomic_factors(pair.order1)));
  sec.add("cyclotomic2", joined(exactmath::cyclotomic_factors(pair.order2)));
  sec.add("resultant", str(exactmath::resultant(pair.order1, pair.order2)));
  for (auto [name, w] : {std::pair{"w1", &pair.w1}, std::pair{"w2", &pair.w2}}) {
    if (!*w)
      continue;
    sec.add(name, (*w)->w.to_string());
    sec.add(std::string(name) + "_centralizer", str((*w)->centralizer_order));
    sec.add(std::string(name) + "_structure", structure((*w)->structure));
  }

  bool all = true;
  std::size_t rows = 0;
  for (std::uint64_t q = std::max<std::uint64_t>(q_lo, 2); q <= q_hi; ++q) {
    if (!exactmath::as_prime_power(q))
      continue;
    auto const c = tori::gcd_divides_center(pair, q);
    std::string weyl = "n/a";
    bool ok = c.divides && c.resultant_divides;
    if (pair.w1) {
      bool const match = tori::torus_order_from_weyl(pair, 1, q) == c.order1 &&
                         tori::torus_order_from_weyl(pair, 2, q) == c.order2;
      weyl = match ? "match" : "mismatch";
      ok = ok && match;
    }
    all = all && ok;
    ++rows;
    r.row()
        .add("q", str(q))
        .add("T1", str(c.order1))
        .add("T2", str(c.order2))
        .add("gcd", str(c.gcd))
        .add("center", str(c.center))
        .add("weyl", weyl)
        .add("result", pass(ok));
  }
  if (rows == 0)
    throw std::invalid_argument("tori: no prime power in " + str(q_lo) + ".." + str(q_hi));
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report cmd_singer(unsigned rank, std::uint64_t q, bool check_intersection, std::size_t cap)
{
  auto const d = tori::singer_pair(rank, q);
  auto const reg = tori::count_regular_in_torus(d);
  Report r{"singer", Verdict::Pass, {}};
  r.section("singer").add("r", str(rank)).add("q", str(q)).add("group", "SL(" + str(rank + 1) + "," + str(q) + ")");
  bool ok = reg.t1.within_bound && reg.t2.within_bound;
  struct Side
  {
    char const *name;
    grp::Matrix const &m;
    gf::FqPoly const &cp;
    std::uint64_t order;
    tori::RegularCount const &count;
  };
  for (Side const &s : {Side{"torus1", d.t1, d.charpoly1, d.order1, reg.t1},
                        Side{"torus2", d.t2, d.charpoly2, d.order2, reg.t2}}) {
    r.section(s.name)
        .add("generator", grp::format_matrix(s.m))
        .add("charpoly", s.cp.to_string())
        .add("order", str(s.order))
        .add("regular", str(s.count.regular))
        .add("non_regular", str(s.count.non_regular))
        .add("bound", real(s.count.bound))
        .add("within_bound", yes(s.count.within_bound));
  }
  r.sections[1].add("non_generating", str(reg.t1_non_generating));
  r.sections[1].add("normalizer_index", str(d.normalizer_index1));
  r.sections[2].add("normalizer_index", str(d.normalizer_index2));

  if (check_intersection) {
    auto const in = tori::verify_torus_intersection(rank, q, cap);
    r.section("intersection")
        .add("group_order", str(in.group_order))
        .add("center_order", str(in.center_order))
        .add("conjugates_checked", str(in.conjugates_checked))
        .add("failures", str(in.failures))
        .add("t1_self_centralizing", yes(in.t1_self_centralizing))
        .add("t2_regular", yes(in.t2_regular))
        .add("t2_self_centralizing", yes(in.t2_self_centralizing))
        .add("certified", yes(in.certified));
    ok = ok && in.certified;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report cmd_charbound(beauville::Target const &t, std::uint64_t seed)
{
  grp::FiniteGroup const &g = *t.group;
  auto const table = chars::character_table(g, seed);
  Report r{"charbound", Verdict::Pass, {}};
  Section &sec = r.section("table");
  add_group(sec, t);
  sec.add("classes", str(table.size()));
  sec.add("degrees", joined(table.degrees));
  sec.add("orthogonality_residual", real(table.orthogonality_residual));
  sec.add("seed", str(table.seed));
  sec.add("attempts", str(table.attempts));

  // Per class: the soft bound over every element of the class.
  std::size_t regular = 0, checked = 0, violations = 0, inapplicable = 0;
  double worst = 0;
  bool ok = true;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    auto const &cls = g.classes()[c];
    bool const ar = grp::is_abstractly_regular(g, cls.representative);
    auto &row = r.row();
    row.add("class", str(c))
        .add("order", str(cls.element_order))
        .add("size", str(cls.size()))
        .add("representative", grp::format_element(g, cls.representative))
        .add("abstractly_regular", yes(ar));
    if (!ar) {
      row.add("n", "-").add("index", "-").add("bound", "-").add("max_abs", "-").add("result", "-");
      continue;
    }
    chars::SoftBoundReport first;
    std::size_t cls_violations = 0;
    double cls_max = 0;
    bool applicable = true;
    for (grp::Index a : cls.members) {
      auto const rep = chars::verify_soft_bound(g, table, a);
      ++regular;
      if (!rep.applicable) {
        applicable = false;
        ++inapplicable;
        first = rep;
        break;
      }
      checked += rep.checked;
      cls_violations += rep.violations;
      cls_max = std::max(cls_max, rep.max_abs);
      worst = std::max(worst, rep.max_abs / rep.bound);
      if (a == cls.representative)
        first = rep;
    }
    violations += cls_violations;
    if (!applicable) {
      row.add("n", "-").add("index", "-").add("bound", "-").add("max_abs", "-").add("result", "n/a");
      continue;
    }
    ok = ok && cls_violations == 0;
    row.add("n", str(first.n))
        .add("index", str(first.index))
        .add("bound", real(first.bound))
        .add("max_abs", real(cls_max))
        .add("result", pass(cls_violations == 0));
  }
  r.section("soft")
      .add("abstractly_regular_elements", str(regular))
      .add("values_checked", str(checked))
      .add("violations", str(violations))
      .add("inapplicable", str(inapplicable))
      .add("max_ratio", real(worst))
      .add("margin", real(chars::kBoundMargin));

  if (t.spec.kind == grp::GroupKind::SL && t.level == grp::Level::Group) {
    auto const b = t.spec.n == 2 ? tori::sl2_regular_bound(t.spec.q, g.cap())
                                 : tori::singer_character_bound(t.spec.n - 1, t.spec.q, g.cap());
    r.section(t.spec.n == 2 ? "regular_semisimple" : "singer")
        .add("elements", str(b.elements))
        .add("max_abs", real(b.max_abs))
        .add("bound", real(b.bound))
        .add("holds", yes(b.holds));
    ok = ok && b.holds;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report cmd_ree(unsigned f_lo, unsigned f_hi)
{
  if (f_lo == 0 || f_lo > f_hi)
    throw std::invalid_argument("ree: f range must satisfy 1 <= a <= b, got " + str(f_lo) + ".." + str(f_hi));
  Report r{"ree", Verdict::Pass, {}};
  r.section("ree").add("f_range", str(f_lo) + ".." + str(f_hi)).add("fusion_bound", "12");
  bool all = true;
  for (unsigned f = f_lo; f <= f_hi; ++f) {
    auto const rep = ree::check_ree_lemma(f);
    all = all && rep.holds();
    r.row()
        .add("f", str(f))
        .add("q", str(rep.orders.q))
        .add("tau1", str(rep.orders.tau1))
        .add("tau2", str(rep.orders.tau2))
        .add("phi1", str(rep.phi1))
        .add("phi2", str(rep.phi2))
        .add("mod12", pass(rep.congruent_mod_12))
        .add("phi_bound", rep.phi_bound ? pass(*rep.phi_bound) : "n/a")
        .add("coprime", pass(rep.coprime))
        .add("identities", pass(rep.product_is_phi12 && rep.difference_identity && rep.coprime_to_12))
        .add("result", pass(rep.holds()));
  }
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report cmd_count(beauville::Target const &t, std::vector<std::size_t> const &classes, std::size_t lattice_cap,
                 std::uint64_t seed)
{
  grp::FiniteGroup const &g = *t.group;
  if (classes.empty())
    throw std::invalid_argument("count: no classes given");
  std::vector<bool> in_x(g.classes().size());
  for (std::size_t c : classes) {
    if (c >= g.classes().size())
      throw std::invalid_argument("count: class " + str(c) + " out of range (group has " +
                                  str(g.classes().size()) + " classes)");
    in_x[c] = true;
  }
  auto const table = chars::character_table(g, seed);
  std::uint64_t const quad = beauville::quad_sum_count(table, classes);

  // Direct enumeration over X x X.
  std::vector<grp::Index> xs;
  for (grp::Index e = 0; e < g.order(); ++e)
    if (in_x[g.class_of(e)])
      xs.push_back(e);
  std::uint64_t direct = 0;
  for (grp::Index x : xs)
    for (grp::Index y : xs)
      direct += in_x[g.class_of(g.mul(x, y))];

  auto const over = beauville::maximal_overcount_bound(g, classes, lattice_cap);
  Report r{"count", quad == direct ? Verdict::Pass : Verdict::Fail, {}};
  Section &sec = r.section("count");
  add_group(sec, t);
  sec.add("classes", joined(classes));
  sec.add("quad_sum", str(quad));
  sec.add("enumeration", str(direct));
  sec.add("maximal_subgroups", str(over.maximal_subgroups));
  sec.add("overcount_exact", str(over.exact));
  sec.add("overcount_coarse", str(over.coarse));
  for (std::size_t c : classes)
    r.row()
        .add("class", str(c))
        .add("order", str(g.classes()[c].element_order))
        .add("size", str(g.classes()[c].size()))
        .add("representative", grp::format_element(g, g.classes()[c].representative));
  return r;
}

Report cmd_resultant(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0)
    throw std::invalid_argument("resultant: indices must be positive");
  exactmath::BigInt const syl = exactmath::resultant(exactmath::cyclotomic(a), exactmath::cyclotomic(b));
  exactmath::BigInt const closed = a == b ? exactmath::BigInt(0) : exactmath::cyclotomic_resultant(a, b);
  Report r{"resultant", closed == syl ? Verdict::Pass : Verdict::Fail, {}};
  r.section("resultant")
      .add("a", str(a))
      .add("b", str(b))
      .add("value", str(closed))
      .add("sylvester", str(syl))
      .add("result", pass(closed == syl));
  return r;
}

Report cmd_zeta(beauville::Target const &t, double s, std::size_t lattice_cap, std::uint64_t seed)
{
  grp::FiniteGroup const &g = *t.group;
  auto const table = chars::character_table(g, seed);
  auto const maxes = grp::maximal_subgroups(g, lattice_cap);
  double idx = 0;
  for (auto const &m : maxes)
    idx += std::pow(static_cast<double>(g.order()) / static_cast<double>(m.order()), -s);
  Report r{"zeta", Verdict::Pass, {}};
  Section &sec = r.section("zeta");
  add_group(sec, t);
  sec.add("t", real(s));
  sec.add("character_zeta", real(chars::character_zeta(table, s)));
  sec.add("min_degree", g.order() > 1 ? str(chars::min_nontrivial_degree(table)) : "n/a");
  sec.add("maximal_subgroups", str(maxes.size()));
  sec.add("subgroup_index_zeta", real(idx));
  return r;
}

} // namespace bv::report
