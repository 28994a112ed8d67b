// Acceptance suite: one PASS/FAIL line per criterion. Every check pairs the
// engine with an oracle written here, and runs under a fixed time limit.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "beauville/beauville.h"
#include "beauville/beauville.hpp"
#include "chars/softbound.hpp"
#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"
#include "grp/spec.hpp"
#include "grp/subgroups.hpp"
#include "report/report.hpp"
#include "tori/singer.hpp"
#include "tori/torus_pairs.hpp"

namespace {

using BigInt = boost::multiprecision::cpp_int;
using bv::grp::FiniteGroup;
using bv::grp::Index;
using Img = std::vector<bv::grp::Point>;

// Tolerances and limits.
constexpr double kOrthogonalityTol = 1e-8;
constexpr double kSoftMargin = 1e-6;
constexpr double kSl2Tol = 1e-6;
constexpr double kRootTol = 1e-6;

struct Outcome
{
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const &what)
  {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bv::grp::GroupPtr group(char const *spec, bv::grp::Level level = bv::grp::Level::Group)
{ return bv::grp::build_group(bv::grp::GroupSpec::parse(spec), level); }

Img img_of(FiniteGroup const &g, Index x)
{
  auto s = g.images(x);
  return Img(s.begin(), s.end());
}

Img compose(Img const &s, Img const &t)
{
  Img r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    r[i] = t[s[i]];
  return r;
}

Img inverse(Img const &s)
{
  Img r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    r[s[i]] = static_cast<bv::grp::Point>(i);
  return r;
}

Img identity_img(std::size_t n)
{
  Img r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::set<Img> naive_closure(std::vector<Img> const &gens, std::size_t n)
{
  std::set<Img> seen{identity_img(n)};
  std::vector<Img> todo{identity_img(n)};
  while (!todo.empty()) {
    Img x = todo.back();
    todo.pop_back();
    for (auto const &s : gens) {
      Img y = compose(x, s);
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

std::set<Img> naive_sigma(std::vector<Img> const &all, Img const &x, Img const &y)
{
  std::set<Img> out;
  for (Img const &z : {x, y, compose(x, y)}) {
    Img p = identity_img(z.size());
    do {
      for (Img const &h : all)
        out.insert(compose(compose(inverse(h), p), h));
      p = compose(p, z);
    } while (p != identity_img(z.size()));
  }
  return out;
}

std::uint64_t phi_trial(std::uint64_t n)
{
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      r -= r / p;
    }
  if (n > 1)
    r -= r / n;
  return r;
}

// Fraction-free elimination on an integer matrix.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m)
{
  std::size_t const n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// res(Phi_a, Phi_b) as the product of Phi_b over primitive a-th roots of unity.
BigInt resultant_by_roots(std::uint64_t a, std::uint64_t b)
{
  auto const phib = bv::exactmath::cyclotomic(b);
  std::complex<long double> prod = 1;
  for (std::uint64_t k = 1; k <= a; ++k) {
    if (std::gcd(k, a) != 1)
      continue;
    long double const ang = 2 * M_PIl * static_cast<long double>(k) / static_cast<long double>(a);
    std::complex<long double> const z(std::cos(ang), std::sin(ang));
    std::complex<long double> v = 0, zp = 1;
    for (auto const &c : phib.coeffs()) {
      v += static_cast<long double>(c.convert_to<long long>()) * zp;
      zp *= z;
    }
    prod *= v;
  }
  long double const mag = std::abs(prod);
  return BigInt(static_cast<long long>(std::llround(mag)));
}

bool is_prime_power(std::uint64_t q)
{
  std::uint64_t p = 2;
  while (q % p)
    ++p;
  while (q % p == 0)
    q /= p;
  return q == 1;
}

std::string report_structured(bv_report *r) { return r ? bv_report_structured(r) : ""; }

// 1. Ree arithmetic through the public API.
Outcome ree()
{
  Outcome o;
  bv_report *r = nullptr;
  o.require(bv_ree(1, 6, &r) == BV_OK, std::string("bv_ree failed: ") + bv_last_error());
  if (!o.ok)
    return o;
  auto const rep = bv::report::parse_structured(report_structured(r));
  bv_report_destroy(r);
  auto const rows = rep.rows();
  o.require(rows.size() == 6, "expected six rows");
  for (unsigned f = 1; f <= rows.size() && o.ok; ++f) {
    std::uint64_t const q = 1ull << (2 * f + 1), s = 1ull << (f + 1);
    std::uint64_t const t1 = q * q + q * s + q + s + 1, t2 = q * q - q * s + q - s + 1;
    auto const *row = rows[f - 1];
    o.require(row->get("tau1") == std::to_string(t1) && row->get("tau2") == std::to_string(t2),
              "tau mismatch at f=" + std::to_string(f));
    o.require(row->get("phi1") == std::to_string(phi_trial(t1)) && row->get("phi2") == std::to_string(phi_trial(t2)),
              "phi mismatch at f=" + std::to_string(f));
    bool const lemma = t1 % 12 == 1 && t2 % 12 == 1 && std::gcd(t1, t2) == 1 &&
                       (f < 2 || (phi_trial(t1) >= 156 && phi_trial(t2) >= 156));
    o.require(lemma && row->get("result") == "PASS", "lemma fails at f=" + std::to_string(f));
  }
  o.require(rows[1]->get("tau1") == "1321" && rows[1]->get("tau2") == "793", "f=2 values");
  o.require(rows[2]->get("tau1") == "18577" && rows[2]->get("tau2") == "14449", "f=3 values");
  o.require(rep.verdict == bv::report::Verdict::Pass, "verdict");
  if (o.ok)
    o.detail = "f = 1..6, all checks hold";
  return o;
}

// 2. Closed-form resultants against Sylvester and a root-product oracle.
Outcome resultants()
{
  Outcome o;
  std::size_t pairs = 0;
  for (std::uint64_t a = 1; a <= 40 && o.ok; ++a)
    for (std::uint64_t b = a + 1; b <= 40 && o.ok; ++b) {
      BigInt const closed = bv::exactmath::cyclotomic_resultant(a, b);
      BigInt const syl = bv::exactmath::resultant(bv::exactmath::cyclotomic(a), bv::exactmath::cyclotomic(b));
      o.require(closed == syl, "closed form != Sylvester at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (bv::exactmath::cyclotomic(a).degree() <= 12)
        o.require(resultant_by_roots(a, b) == syl,
                  "root product != Sylvester at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      ++pairs;
    }
  std::vector<std::tuple<char const *, unsigned, int>> const exc{{"3D4", 4, 1}, {"E6", 6, 3}, {"2E6", 6, 3},
                                                                 {"E7", 7, 2},  {"E8", 8, 1}, {"F4", 4, 1},
                                                                 {"G2", 2, 1}};
  for (auto const &[type, r, want] : exc) {
    auto const p = bv::tori::torus_pair_for(type, r);
    BigInt const got = bv::exactmath::cyclotomic_product_resultant(bv::exactmath::cyclotomic_factors(p.order1),
                                                                   bv::exactmath::cyclotomic_factors(p.order2));
    o.require(got == want, std::string(type) + " resultant " + got.str());
    o.require(bv::exactmath::resultant(p.order1, p.order2) == want, std::string(type) + " Sylvester");
  }
  o.detail = o.ok ? std::to_string(pairs) + " pairs, 7 exceptional types" : o.detail;
  return o;
}

// 3. Torus pairs: gcd divides the center; classical orders from det(q w - 1).
Outcome torus_pairs()
{
  Outcome o;
  std::size_t checks = 0, dets = 0;
  auto type_of = [](bv::tori::TypeCase c) -> std::string {
    using T = bv::tori::TypeCase;
    if (c == T::D0mod4 || c == T::D2mod4 || c == T::Dodd)
      return "D";
    if (c == T::D2even || c == T::D2odd)
      return "2D";
    return bv::tori::case_name(c);
  };
  for (auto c : bv::tori::all_cases())
    for (unsigned r = bv::tori::min_rank(c); r <= 12 && o.ok; ++r) {
      if (!bv::tori::rank_allowed(c, r))
        continue;
      auto const p = bv::tori::torus_pair_for(type_of(c), r);
      for (std::uint64_t q = 2; q <= 100 && o.ok; ++q) {
        if (!is_prime_power(q))
          continue;
        BigInt const t1 = abs(p.order1.eval(q)), t2 = abs(p.order2.eval(q));
        BigInt const z = bv::tori::center_order(c, r, q);
        BigInt const g = boost::multiprecision::gcd(t1, t2);
        o.require(z % g == 0, bv::tori::case_name(c) + " r=" + std::to_string(r) + " q=" + std::to_string(q) +
                                  ": gcd " + g.str() + " does not divide " + z.str());
        ++checks;

        if (!p.w1 || r > 8)
          continue;
        bool const a_type = p.type_case == bv::tori::TypeCase::A || p.type_case == bv::tori::TypeCase::A2;
        for (int which : {1, 2}) {
          auto const &w = (which == 1 ? p.w1 : p.w2)->w;
          std::size_t const n = w.rank();
          BigInt const sq = p.twist * BigInt(q);
          std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
          for (std::size_t i = 0; i < n; ++i) {
            m[i][w.perm(static_cast<unsigned>(i))] = sq * w.sign(static_cast<unsigned>(i));
            m[i][i] -= 1;
          }
          BigInt d = abs(det_bareiss(m));
          ++dets;
          if (a_type)
            d /= abs(sq - 1);
          o.require(d == (which == 1 ? t1 : t2), bv::tori::case_name(c) + " r=" + std::to_string(r) + " q=" +
                                                     std::to_string(q) + ": det(qw-1) " + d.str());
        }
      }
    }
  if (o.ok)
    o.detail = std::to_string(checks) + " gcd checks, " + std::to_string(dets) + " Weyl determinants";
  return o;
}

// 4. Character tables and Frobenius counts.
Outcome characters()
{
  Outcome o;
  for (char const *spec : {"S3", "A4", "S4", "A5", "SL(2,3)", "SL(2,5)", "PSL(2,7)"}) {
    auto const g = group(spec);
    auto const t = bv::chars::character_table(*g);
    std::uint64_t sum = 0;
    for (auto d : t.degrees)
      sum += d * d;
    o.require(sum == g->order(), std::string(spec) + ": sum of squared degrees " + std::to_string(sum));
    o.require(t.orthogonality_residual < kOrthogonalityTol,
              std::string(spec) + ": residual " + std::to_string(t.orthogonality_residual));
  }
  std::size_t triples = 0;
  for (char const *spec : {"S3", "A4", "S4", "A5"}) {
    auto const g = group(spec);
    auto const t = bv::chars::character_table(*g);
    std::size_t const k = g->classes().size();
    // Brute force with the oracle's own composition and class lookup.
    std::map<Img, std::size_t> cls;
    for (std::size_t c = 0; c < k; ++c)
      for (Index m : g->classes()[c].members)
        cls[img_of(*g, m)] = c;
    std::vector<std::uint64_t> count(k * k * k);
    for (auto const &[x, cx] : cls)
      for (auto const &[y, cy] : cls)
        ++count[(cx * k + cy) * k + cls.at(compose(x, y))];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          o.require(bv::chars::frobenius_triple_count(t, i, j, l) == count[(i * k + j) * k + l],
                    std::string(spec) + ": Frobenius count mismatch");
          ++triples;
        }
  }
  if (o.ok)
    o.detail = "7 tables, " + std::to_string(triples) + " class triples";
  return o;
}

// 5. Soft bound over every abstractly regular element.
Outcome soft_bound()
{
  Outcome o;
  std::size_t elements = 0, values = 0;
  double worst = 0;
  for (char const *spec : {"S4", "A5", "SL(2,5)", "PSL(2,7)"}) {
    auto const g = group(spec);
    auto const t = bv::chars::character_table(*g);
    for (Index a = 0; a < g->order(); ++a) {
      // Oracle for abstract regularity: all centralizer elements commute.
      std::vector<Index> cent;
      for (Index h = 0; h < g->order(); ++h)
        if (compose(img_of(*g, h), img_of(*g, a)) == compose(img_of(*g, a), img_of(*g, h)))
          cent.push_back(h);
      bool abelian = true;
      for (std::size_t i = 0; i < cent.size() && abelian; ++i)
        for (std::size_t j = i + 1; j < cent.size() && abelian; ++j)
          abelian = compose(img_of(*g, cent[i]), img_of(*g, cent[j])) == compose(img_of(*g, cent[j]), img_of(*g, cent[i]));
      o.require(abelian == bv::grp::is_abstractly_regular(*g, a), std::string(spec) + ": regularity disagrees");
      if (!abelian)
        continue;
      auto const rep = bv::chars::verify_soft_bound(*g, t, a);
      o.require(rep.applicable, std::string(spec) + ": soft bound inapplicable: " + rep.reason);
      if (!rep.applicable)
        continue;
      // Recompute the maximum from the table.
      double mx = 0;
      for (Index x : rep.regular_part)
        for (auto const &row : t.values)
          mx = std::max(mx, std::abs(row[g->class_of(x)]));
      o.require(std::abs(mx - rep.max_abs) < 1e-9, std::string(spec) + ": max |chi| disagrees");
      o.require(mx <= rep.bound + kSoftMargin && rep.violations == 0, std::string(spec) + ": violation");
      worst = std::max(worst, mx / rep.bound);
      ++elements;
      values += rep.checked;
    }
  }
  if (o.ok) {
    std::ostringstream os;
    os << elements << " elements, " << values << " values, max ratio " << worst;
    o.detail = os.str();
  }
  return o;
}

// 6. |chi(t)| <= 2 on regular semisimple elements of SL2(q).
Outcome sl2_bound()
{
  Outcome o;
  double worst = 0;
  for (std::uint64_t q : {5, 7, 9, 11, 13}) {
    std::string const spec = "SL(2," + std::to_string(q) + ")";
    auto const g = bv::grp::build_group(bv::grp::GroupSpec::parse(spec));
    auto const t = bv::chars::character_table(*g);
    auto const &f = *g->action()->field();
    bv::gf::Elem const two = f.add(1, 1), mtwo = f.neg(two);
    // x^2 - tr x + 1 is squarefree exactly when tr != +-2 (q odd).
    std::size_t n = 0;
    double mx = 0;
    for (Index x = 0; x < g->order(); ++x) {
      auto const m = g->action()->matrix_of(g->element(x));
      bv::gf::Elem const tr = f.add(m.a[0], m.a[3]);
      if (tr == two || tr == mtwo)
        continue;
      ++n;
      for (auto const &row : t.values)
        mx = std::max(mx, std::abs(row[g->class_of(x)]));
    }
    auto const b = bv::tori::sl2_regular_bound(q);
    o.require(b.elements == n, spec + ": regular element count " + std::to_string(b.elements) + " vs " +
                                   std::to_string(n));
    o.require(std::abs(b.max_abs - mx) < kSl2Tol, spec + ": max disagrees");
    o.require(mx <= 2 + kSl2Tol && b.holds, spec + ": bound fails, max " + std::to_string(mx));
    worst = std::max(worst, mx);
  }
  if (o.ok)
    o.detail = "max |chi(t)| = " + std::to_string(worst);
  return o;
}

// 7. Singer tori: exhaustive intersection and non-regular counts.
Outcome singer()
{
  Outcome o;
  for (auto [r, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 3}, {1, 5}, {1, 7}, {2, 2}, {2, 3}}) {
    std::string const tag = "(" + std::to_string(r) + "," + std::to_string(q) + ")";
    auto const in = bv::tori::verify_torus_intersection(r, q);
    o.require(in.certified && in.failures == 0 && in.conjugates_checked == in.group_order,
              tag + ": intersection not certified");
    auto const d = bv::tori::singer_pair(r, q);
    auto const reg = bv::tori::count_regular_in_torus(d);
    o.require(reg.t1.within_bound && reg.t2.within_bound, tag + ": non-regular count over bound");
    if (r == 1) {
      // Oracle for SL2: non-regular powers of t1 are those with trace +-2.
      auto const &f = *d.field;
      bv::gf::Elem const two = f.add(1, 1), mtwo = f.neg(two);
      bv::grp::Matrix x = bv::grp::Matrix::identity(2);
      std::uint64_t nonreg = 0;
      for (std::uint64_t k = 0; k < d.order1; ++k) {
        bv::gf::Elem const tr = f.add(x.a[0], x.a[3]);
        nonreg += tr == two || tr == mtwo;
        x = bv::grp::mat_mul(f, x, d.t1);
      }
      o.require(nonreg == reg.t1.non_regular, tag + ": non-regular count disagrees");
      if (q == 7)
        o.require(nonreg <= 2, "SL2(7) T1 has " + std::to_string(nonreg) + " non-regular elements");
    }
  }
  if (o.ok)
    o.detail = "5 groups, every conjugate checked";
  return o;
}

// 8. Searches through the public API, certificates re-verified twice.
Outcome search(char const *spec, bv_verdict expect)
{
  Outcome o;
  bv_group *g = nullptr;
  o.require(bv_group_create(spec, BV_LEVEL_QUOTIENT, 20000, &g) == BV_OK, bv_last_error());
  if (!o.ok)
    return o;
  bv_search_options opts;
  bv_search_options_init(&opts);
  bv_report *r = nullptr;
  o.require(bv_search(g, &opts, &r) == BV_OK, bv_last_error());
  bv_group_destroy(g);
  if (!o.ok)
    return o;
  std::string const doc = report_structured(r);
  o.require(bv_report_verdict(r) == expect, std::string("verdict ") + std::to_string(bv_report_verdict(r)));
  bv_report_destroy(r);
  if (!o.ok || expect != BV_VERDICT_PASS)
    return o;

  bv_report *v = nullptr;
  o.require(bv_verify(doc.c_str(), 20000, &v) == BV_OK && bv_report_verdict(v) == BV_VERDICT_PASS,
            "certificate does not re-verify");
  bv_report_destroy(v);

  // Oracle: the definition, applied to the serialized elements.
  auto const cert = bv::beauville::parse_certificate(doc);
  auto const t = bv::beauville::Target::build(bv::grp::GroupSpec::parse(cert.group), cert.level);
  FiniteGroup const &grp = *t.group;
  std::vector<Img> all;
  for (Index i = 0; i < grp.order(); ++i)
    all.push_back(img_of(grp, i));
  auto el = [&](unsigned slot) { return img_of(grp, bv::grp::parse_element(grp, cert.elements[slot].text)); };
  Img const x1 = el(bv::beauville::X1), y1 = el(bv::beauville::Y1), x2 = el(bv::beauville::X2),
            y2 = el(bv::beauville::Y2);
  o.require(naive_closure({x1, y1}, grp.degree()).size() == grp.order(), "(x1, y1) does not generate");
  o.require(naive_closure({x2, y2}, grp.degree()).size() == grp.order(), "(x2, y2) does not generate");
  auto const s1 = naive_sigma(all, x1, y1), s2 = naive_sigma(all, x2, y2);
  std::size_t common = 0;
  for (auto const &x : s1)
    common += s2.count(x);
  o.require(common == 1, "Σ sets share " + std::to_string(common) + " elements");
  return o;
}

// 9. Triple counts for the two 5-classes of A5.
Outcome counting()
{
  Outcome o;
  auto const g = group("A5");
  auto const t = bv::chars::character_table(*g);
  std::vector<std::size_t> x;
  for (std::size_t c = 0; c < g->classes().size(); ++c)
    if (g->classes()[c].element_order == 5)
      x.push_back(c);
  o.require(x.size() == 2, "A5 should have two classes of 5-cycles");

  std::set<Img> xs;
  for (std::size_t c : x)
    for (Index m : g->classes()[c].members)
      xs.insert(img_of(*g, m));
  std::uint64_t brute = 0;
  for (auto const &a : xs)
    for (auto const &b : xs)
      brute += xs.count(compose(a, b));
  std::uint64_t const quad = bv::beauville::quad_sum_count(t, x);
  o.require(quad == brute, "quad sum " + std::to_string(quad) + " vs enumeration " + std::to_string(brute));

  auto const over = bv::beauville::maximal_overcount_bound(*g, x);
  auto const maxes = bv::grp::maximal_subgroups(*g);
  std::uint64_t exact = 0;
  for (auto const &m : maxes) {
    std::vector<Img> in;
    for (Index e : m.elements)
      if (xs.count(img_of(*g, e)))
        in.push_back(img_of(*g, e));
    for (auto const &a : in)
      for (auto const &b : in)
        exact += xs.count(compose(a, b));
  }
  o.require(maxes.size() == 21 && over.maximal_subgroups == 21, "expected 21 maximal subgroups");
  o.require(over.exact == exact, "overcount " + std::to_string(over.exact) + " vs " + std::to_string(exact));
  if (o.ok)
    o.detail = "N = " + std::to_string(quad) + ", overcount " + std::to_string(exact) + " (coarse " +
               std::to_string(over.coarse) + ")";
  return o;
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    char const *name;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "Ree arithmetic", 1, ree},
      {2, "resultant calculus", 10, resultants},
      {3, "torus pairs", 60, torus_pairs},
      {4, "character machinery", 120, characters},
      {5, "soft bound", 300, soft_bound},
      {6, "SL2 character bound", 300, sl2_bound},
      {7, "Singer tori", 600, singer},
      {8, "Beauville search",
       1800,
       [] {
         Outcome o;
         for (auto [spec, want] : {std::pair{"A5", BV_VERDICT_NONEXISTENT}, std::pair{"A6", BV_VERDICT_PASS},
                                   std::pair{"PSL(2,7)", BV_VERDICT_PASS}}) {
           auto const start = std::chrono::steady_clock::now();
           Outcome one = search(spec, want);
           double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
           one.require(s < 600, std::string(spec) + " over 600 s");
           o.require(one.ok, std::string(spec) + ": " + one.detail);
         }
         if (o.ok)
           o.detail = "A5 none; A6, PSL(2,7) certified";
         return o;
       }},
      {9, "counting comparison", 60, counting},
  };

  int failed = 0;
  for (auto const &c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && s > c.limit_s) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    failed += !o.ok;
    std::printf("%s %d %-22s %8.3f s (limit %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
