#include "tori/singer.hpp"

#include <cmath>

#include "chars/softbound.hpp"
#include "exactmath/numtheory.hpp"
#include "grp/spec.hpp"

namespace bv::tori {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

// Minimal polynomial over the prime-power subfield F_q of an element of a
// larger field, with coefficients moved into F_q itself.
gf::FqPoly minpoly_over(gf::FieldElement const &a, gf::FieldPtr const &base)
{
  gf::FqPoly const big = gf::minimal_polynomial(a, base);
  if (big.field() == base)
    return big;
  gf::Embedding const emb(base, a.field());
  std::vector<gf::Elem> coeffs;
  for (gf::Elem c : big.coeffs())
    coeffs.push_back(*emb.to_small(c));
  return gf::FqPoly(base, coeffs);
}

gf::FieldElement primitive_of(gf::FieldPtr const &f) { return gf::FieldElement(f, f->primitive()); }

} // namespace

bool is_regular_semisimple(gf::FieldPtr const &f, grp::Matrix const &m)
{
  return grp::characteristic_polynomial(f, m).is_squarefree();
}

SingerTorusData singer_pair(unsigned r, std::uint64_t q)
{
  if (r < 1)
    throw std::invalid_argument("singer_pair: r must be at least 1");
  auto const pp = exactmath::as_prime_power(q);
  if (!pp)
    throw std::invalid_argument("singer_pair: " + std::to_string(q) + " is not a prime power");
  auto const [p, e] = *pp;

  auto field = gf::make_field(static_cast<unsigned>(p), e);
  SingerTorusData d{r, q, field, {}, {}, gf::FqPoly(field, {}), gf::FqPoly(field, {})};
  d.order1 = (ipow(q, r + 1) - 1) / (q - 1);
  d.order2 = ipow(q, r) - 1;
  d.normalizer_index1 = r + 1;
  d.normalizer_index2 = r;

  gf::FieldElement const alpha = gf::norm_one_generator(q, r + 1);
  d.charpoly1 = minpoly_over(alpha, d.field);
  d.t1 = grp::companion(d.charpoly1);

  gf::Field const &f = *d.field;
  if (r == 1) {
    gf::Elem const beta = f.primitive();
    d.t2 = grp::Matrix{2, {beta, 0, 0, f.inv(beta)}};
  } else {
    auto const big = gf::make_field(static_cast<unsigned>(p), e * r);
    gf::FieldElement const beta = primitive_of(big);
    gf::FqPoly const mp = minpoly_over(beta, d.field);
    // det of the companion block is the norm N(beta) = prod of the roots.
    gf::Elem const norm = r % 2 ? f.neg(mp.coeff(0)) : mp.coeff(0);
    d.t2 = grp::direct_sum(grp::companion(mp), grp::Matrix{1, {f.inv(norm)}});
  }
  d.charpoly2 = grp::characteristic_polynomial(d.field, d.t2);
  return d;
}

TorusRegularity count_regular_in_torus(SingerTorusData const &d)
{
  TorusRegularity out;
  gf::Field const &f = *d.field;
  double const q = static_cast<double>(d.q);

  auto sweep = [&](grp::Matrix const &t, std::uint64_t order, RegularCount &rc, double bound) {
    grp::Matrix x = grp::Matrix::identity(t.n);
    for (std::uint64_t k = 0; k < order; ++k) {
      if (is_regular_semisimple(d.field, x))
        ++rc.regular;
      else
        ++rc.non_regular;
      x = grp::mat_mul(f, x, t);
    }
    rc.bound = bound;
    rc.within_bound = static_cast<double>(rc.non_regular) < bound;
  };
  sweep(d.t1, d.order1, out.t1, 2 * std::pow(q, (d.r + 1) / 2.0));
  sweep(d.t2, d.order2, out.t2, 2 * std::pow(q, d.r / 2.0));

  gf::FieldElement const alpha = gf::norm_one_generator(d.q, d.r + 1);
  gf::FieldElement x = alpha.pow(0);
  for (std::uint64_t k = 0; k < d.order1; ++k) {
    if (gf::degree_over(x, d.q) != d.r + 1)
      ++out.t1_non_generating;
    x = x * alpha;
  }
  return out;
}

IntersectionReport verify_torus_intersection(unsigned r, std::uint64_t q, std::size_t cap)
{
  SingerTorusData const d = singer_pair(r, q);
  grp::GroupSpec spec;
  spec.kind = grp::GroupKind::SL;
  spec.n = r + 1;
  spec.q = static_cast<unsigned>(q);
  auto const g = grp::build_group(spec, grp::Level::Group, cap);
  auto const &act = *g->action();

  IntersectionReport rep;
  rep.group_order = g->order();
  grp::Index const t1 = *g->index_of(act.perm_of(d.t1));
  grp::Index const t2 = *g->index_of(act.perm_of(d.t2));
  grp::Subgroup const T1 = g->closure({t1});
  grp::Subgroup const T2 = g->closure({t2});
  grp::Subgroup const z = grp::center(*g);
  rep.center_order = z.order();
  rep.t1_order = T1.order();
  rep.t2_order = T2.order();
  rep.t1_self_centralizing = grp::centralizer(*g, t1) == T1;
  rep.t2_regular = is_regular_semisimple(d.field, d.t2);
  rep.t2_self_centralizing = grp::centralizer(*g, t2) == T2;

  for (grp::Index h = 0; h < g->order(); ++h) {
    grp::Bits meet(g->order());
    for (grp::Index x : T2.elements) {
      grp::Index const y = g->conj(x, h);
      if (T1.contains(y))
        meet.set(y);
    }
    ++rep.conjugates_checked;
    if (meet != z.members)
      ++rep.failures;
  }
  rep.certified = rep.failures == 0 && rep.t1_order == d.order1 && rep.t2_order == d.order2 &&
                  rep.t1_self_centralizing && (!rep.t2_regular || rep.t2_self_centralizing);
  return rep;
}

BoundCheck sl2_regular_bound(std::uint64_t q, std::size_t cap)
{
  grp::GroupSpec spec;
  spec.kind = grp::GroupKind::SL;
  spec.n = 2;
  spec.q = static_cast<unsigned>(q);
  auto const g = grp::build_group(spec, grp::Level::Group, cap);
  auto const t = chars::character_table(*g);
  auto const &act = *g->action();
  std::vector<grp::Index> regular;
  for (auto const &cls : g->classes())
    if (is_regular_semisimple(act.field(), act.matrix_of(g->element(cls.representative))))
      regular.insert(regular.end(), cls.members.begin(), cls.members.end());
  BoundCheck b;
  b.group_order = g->order();
  b.elements = regular.size();
  b.max_abs = chars::max_abs_value(*g, t, regular);
  b.bound = 2;
  b.holds = b.max_abs <= b.bound + chars::kBoundMargin;
  return b;
}

BoundCheck singer_character_bound(unsigned r, std::uint64_t q, std::size_t cap)
{
  SingerTorusData const d = singer_pair(r, q);
  grp::GroupSpec spec;
  spec.kind = grp::GroupKind::SL;
  spec.n = r + 1;
  spec.q = static_cast<unsigned>(q);
  auto const g = grp::build_group(spec, grp::Level::Group, cap);
  auto const t = chars::character_table(*g);
  auto const &act = *g->action();
  std::vector<grp::Index> regular;
  grp::Matrix x = grp::Matrix::identity(r + 1);
  for (std::uint64_t k = 0; k < d.order1; ++k) {
    if (is_regular_semisimple(d.field, x))
      regular.push_back(*g->index_of(act.perm_of(x)));
    x = grp::mat_mul(*d.field, x, d.t1);
  }
  BoundCheck b;
  b.group_order = g->order();
  b.elements = regular.size();
  b.max_abs = chars::max_abs_value(*g, t, regular);
  b.bound = 2.0 * (r + 1) * (r + 1) / std::sqrt(3.0);
  b.holds = b.max_abs <= b.bound + chars::kBoundMargin;
  return b;
}

} // namespace bv::tori
