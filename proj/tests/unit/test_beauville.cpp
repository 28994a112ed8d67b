#include <doctest.h>

#include <algorithm>
#include <set>

#include "beauville/beauville.hpp"
#include "common/errors.hpp"
#include "grp/subgroups.hpp"

using namespace bv::beauville;
using namespace bv::grp;

namespace {

using Img = std::vector<Point>;

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
    r[s[i]] = static_cast<Point>(i);
  return r;
}

Img identity_img(std::size_t n)
{
  Img id(n);
  for (std::size_t i = 0; i < n; ++i)
    id[i] = static_cast<Point>(i);
  return id;
}

std::set<Img> naive_closure(std::vector<Img> const &gens, std::size_t degree)
{
  Img const id = identity_img(degree);
  std::set<Img> seen{id};
  std::vector<Img> todo{id};
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

Img img_of(FiniteGroup const &g, Index x)
{
  auto s = g.images(x);
  return Img(s.begin(), s.end());
}

std::vector<Img> all_elements(FiniteGroup const &g)
{
  std::vector<Img> out;
  for (Index i = 0; i < g.order(); ++i)
    out.push_back(img_of(g, i));
  return out;
}

// Conjugates of all powers of x, y and xy, straight from the definition.
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

bool meets_only_in_identity(std::set<Img> const &a, std::set<Img> const &b)
{
  std::size_t common = 0;
  for (auto const &x : a)
    common += b.count(x);
  return common == 1;
}

// Independent check of a certificate: parse the four elements and test the
// definition directly.
void check_naively(BeauvilleCertificate const &c)
{
  Target const t = Target::build(GroupSpec::parse(c.group), c.level);
  FiniteGroup const &g = *t.group;
  auto const all = all_elements(g);
  Img const x1 = img_of(g, parse_element(g, c.elements[X1].text));
  Img const y1 = img_of(g, parse_element(g, c.elements[Y1].text));
  Img const x2 = img_of(g, parse_element(g, c.elements[X2].text));
  Img const y2 = img_of(g, parse_element(g, c.elements[Y2].text));
  CHECK(naive_closure({x1, y1}, g.degree()).size() == g.order());
  CHECK(naive_closure({x2, y2}, g.degree()).size() == g.order());
  CHECK(meets_only_in_identity(naive_sigma(all, x1, y1), naive_sigma(all, x2, y2)));
}

Target target(char const *spec, Level level = Level::Quotient) { return Target::build(GroupSpec::parse(spec), level); }

} // namespace

TEST_CASE("A5 has no structure")
{
  Target const t = target("A5");
  auto const rep = search_structure(t, {});
  CHECK(rep.status == SearchStatus::Nonexistent);
  CHECK_FALSE(rep.certificate.has_value());
  CHECK(rep.generating_pairs > 0);

  // Brute force over all ordered pairs.
  FiniteGroup const &g = *t.group;
  auto const all = all_elements(g);
  std::set<std::set<Img>> sigmas;
  for (auto const &x : all)
    for (auto const &y : all)
      if (naive_closure({x, y}, g.degree()).size() == g.order())
        sigmas.insert(naive_sigma(all, x, y));
  std::vector<std::set<Img>> const v(sigmas.begin(), sigmas.end());
  CHECK(v.size() == rep.sigma_types);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      CHECK_FALSE(meets_only_in_identity(v[i], v[j]));

  // Spot refusals.
  Index const c5 = *g.index_of(Perm::from_cycles("(1,2,3,4,5)", g.degree()));
  Index const c3 = *g.index_of(Perm::from_cycles("(1,2,3)", g.degree()));
  auto const r = verify_structure(t, c5, c3, c3, c5);
  CHECK_FALSE(r.certificate.has_value());
  CHECK_FALSE(r.reason.empty());
  auto const e = verify_structure(t, 0, 0, c5, c3);
  CHECK_FALSE(e.certificate.has_value());
  CHECK(e.reason.find("(x1, y1)") != std::string::npos);
}

TEST_CASE("A6 and PSL(2,7) certificates")
{
  for (char const *spec : {"A6", "PSL(2,7)"}) {
    Target const t = target(spec);
    auto const rep = search_structure(t, {});
    REQUIRE(rep.status == SearchStatus::Found);
    auto const &c = *rep.certificate;
    CHECK(c.intersection == 1);
    CHECK(c.closure1 == t.group->order());

    std::string const text = serialize(c);
    BeauvilleCertificate const back = parse_certificate(text);
    CHECK(back == c);
    CHECK(serialize(back) == text);
    CHECK(reverify(back).certificate.has_value());
    check_naively(back);

    // The coprime shortcut, when taken, agrees with the explicit check.
    if (c.coprime_orders)
      CHECK(c.intersection == 1);
  }
}

TEST_CASE("certificate parsing rejects damage")
{
  auto const rep = search_structure(target("A6"), {});
  REQUIRE(rep.certificate);
  std::string const text = serialize(*rep.certificate);

  std::string missing = text;
  missing.erase(missing.find("closure_1"), missing.find('\n', missing.find("closure_1")) - missing.find("closure_1") + 1);
  CHECK_THROWS_AS(parse_certificate(missing), bv::ParseError);

  std::string conv = text;
  conv.replace(conv.find("left-to-right"), 13, "right-to-left");
  CHECK_THROWS_AS(parse_certificate(conv), bv::ParseError);

  BeauvilleCertificate forged = *rep.certificate;
  forged.sigma1 += 1;
  auto const v = reverify(forged);
  CHECK_FALSE(v.certificate.has_value());
  CHECK(v.reason.find("transcript") != std::string::npos);

  forged = *rep.certificate;
  forged.elements[Y2] = forged.elements[X2];
  CHECK_FALSE(reverify(forged).certificate.has_value());
}

TEST_CASE("random and threaded searches are deterministic")
{
  Target const t = target("A6");
  SearchStrategy s;
  s.mode = SearchMode::Random;
  s.seed = 7;
  s.budget = 20000;
  auto const a = search_structure(t, s);
  REQUIRE(a.status == SearchStatus::Found);
  s.threads = 4;
  auto const b = search_structure(t, s);
  REQUIRE(b.certificate);
  CHECK(serialize(*a.certificate) == serialize(*b.certificate));
  check_naively(*a.certificate);

  SearchStrategy ex;
  ex.threads = 3;
  CHECK(serialize(*search_structure(t, ex).certificate) == serialize(*search_structure(t, {}).certificate));

  SearchStrategy tiny;
  tiny.budget = 3;
  CHECK(search_structure(target("A5"), tiny).status == SearchStatus::Inconclusive);
}

TEST_CASE("torus-guided search")
{
  SearchStrategy s;
  s.mode = SearchMode::TorusGuided;
  s.budget = 200000;
  auto const sl32 = search_structure(target("SL(3,2)"), s);
  REQUIRE(sl32.status == SearchStatus::Found);
  CHECK(sl32.certificate->elements[Z1].order == 7);
  CHECK(reverify(*sl32.certificate).certificate.has_value());

  auto const psl27 = search_structure(target("PSL(2,7)"), s);
  REQUIRE(psl27.status == SearchStatus::Found);
  check_naively(*psl27.certificate);

  // At the level of SL2(5) itself -I lies in both sides; whatever the
  // outcome, a certificate must verify.
  auto const sl25 = search_structure(target("SL(2,5)", Level::Group), s);
  if (sl25.certificate)
    CHECK(reverify(*sl25.certificate).certificate.has_value());
  else
    CHECK(sl25.status == SearchStatus::Inconclusive);

  CHECK_THROWS_AS(search_structure(target("A6"), s), std::invalid_argument);
}

TEST_CASE("quad sum and maximal overcount")
{
  for (char const *spec : {"A5", "S4", "SL(2,5)"}) {
    auto const g = build_group(GroupSpec::parse(spec));
    auto const table = bv::chars::character_table(*g);
    std::vector<std::size_t> x;
    for (std::size_t c = 0; c < g->classes().size(); ++c) {
      auto const o = g->classes()[c].element_order;
      if (o == (std::string(spec) == "S4" ? 4u : 5u))
        x.push_back(c);
    }
    REQUIRE_FALSE(x.empty());
    std::set<std::size_t> xs(x.begin(), x.end());

    std::uint64_t brute = 0, generating = 0;
    std::vector<Index> members;
    for (Index e = 0; e < g->order(); ++e)
      if (xs.count(g->class_of(e)))
        members.push_back(e);
    for (Index a : members)
      for (Index b : members)
        if (xs.count(g->class_of(g->mul(a, b)))) {
          ++brute;
          if (naive_closure({img_of(*g, a), img_of(*g, b)}, g->degree()).size() == g->order())
            ++generating;
        }
    CHECK(quad_sum_count(table, x) == brute);

    auto const over = maximal_overcount_bound(*g, x);
    // Non-generating triples all lie in some maximal subgroup.
    CHECK(brute - generating <= over.exact);
    CHECK(over.exact <= over.coarse);

    // Oracle: enumerate inside each maximal subgroup.
    std::uint64_t exact = 0, coarse = 0;
    for (auto const &m : maximal_subgroups(*g)) {
      coarse += m.order() * m.order();
      for (Index a : m.elements)
        for (Index b : m.elements)
          if (xs.count(g->class_of(a)) && xs.count(g->class_of(b)) && xs.count(g->class_of(g->mul(a, b))))
            ++exact;
    }
    CHECK(over.exact == exact);
    CHECK(over.coarse == coarse);
  }

  auto const a5 = build_group(GroupSpec::parse("A5"));
  auto const t = bv::chars::character_table(*a5);
  CHECK(quad_sum_count(t, {0}) == 1);
  auto const triv = maximal_overcount_bound(*a5, {0});
  CHECK(triv.maximal_subgroups == 21);
  CHECK(triv.exact == 21);
  CHECK(triv.coarse == 5 * 144 + 6 * 100 + 10 * 36);

  std::vector<std::size_t> fives;
  for (std::size_t c = 0; c < a5->classes().size(); ++c)
    if (a5->classes()[c].element_order == 5)
      fives.push_back(c);
  // Six dihedral subgroups of order 10, each holding 4 elements of order 5:
  // 16 ordered pairs minus the 4 with xy = e.
  CHECK(maximal_overcount_bound(*a5, fives).exact == 6 * 12);
}
