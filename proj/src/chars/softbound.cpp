#include "chars/softbound.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "grp/subgroups.hpp"

namespace bv::chars {

namespace {

// Every subgroup of a small group H, by joining with single elements.
std::vector<grp::Subgroup> all_subgroups_of(grp::FiniteGroup const &g, grp::Subgroup const &h)
{
  std::unordered_set<grp::Bits, grp::BitsHash> seen;
  std::vector<grp::Subgroup> out{g.trivial()};
  seen.insert(out[0].members);
  for (std::size_t head = 0; head < out.size(); ++head) {
    grp::Subgroup const s = out[head];
    for (grp::Index x : h.elements) {
      if (s.contains(x))
        continue;
      auto gens = s.generators;
      gens.push_back(x);
      grp::Subgroup k = g.closure(gens);
      if (seen.insert(k.members).second)
        out.push_back(std::move(k));
    }
  }
  return out;
}

} // namespace

SoftBoundReport verify_soft_bound(grp::FiniteGroup const &g, CharacterTable const &t, grp::Index a)
{
  SoftBoundReport rep;
  rep.a = a;
  grp::Subgroup const za = grp::centralizer(g, a);
  if (!grp::is_abelian(g, za)) {
    rep.reason = "element is not abstractly regular";
    return rep;
  }
  rep.A = za;
  grp::Subgroup const n = grp::normalizer(g, rep.A);
  rep.index = n.order() / rep.A.order();

  std::vector<grp::Index> nonregular;
  for (grp::Index x : rep.A.elements)
    if (!grp::is_abstractly_regular(g, x))
      nonregular.push_back(x);

  grp::Bits uncovered(g.order());
  for (grp::Index x : nonregular)
    uncovered.set(x);
  std::vector<grp::Subgroup> candidates;
  for (auto &s : all_subgroups_of(g, rep.A))
    if (s.order() < rep.A.order())
      candidates.push_back(std::move(s));

  while (uncovered.any()) {
    std::size_t best = candidates.size(), best_cover = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t const cover = (candidates[c].members & uncovered).count();
      if (cover > best_cover || (cover == best_cover && cover > 0 && candidates[c].order() > candidates[best].order())) {
        best = c;
        best_cover = cover;
      }
    }
    if (best == candidates.size()) {
      rep.reason = "a generator of A has a nonabelian centralizer; no proper subgroups cover the non-regular part";
      rep.excluded.clear();
      return rep;
    }
    uncovered -= candidates[best].members;
    rep.excluded.push_back(candidates[best]);
  }

  rep.applicable = true;
  rep.n = rep.excluded.size();
  rep.bound = std::pow(4.0 / std::sqrt(3.0), static_cast<double>(rep.n)) * static_cast<double>(rep.index);

  for (grp::Index x : rep.A.elements) {
    bool inside = false;
    for (auto const &s : rep.excluded)
      inside = inside || s.contains(x);
    if (!inside)
      rep.regular_part.push_back(x);
  }

  for (grp::Index x : rep.regular_part) {
    std::size_t const c = g.class_of(x);
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      double const v = std::abs(t.values[chi][c]);
      ++rep.checked;
      if (v > rep.bound + kBoundMargin)
        ++rep.violations;
      if (v > rep.max_abs + 1e-9) {
        rep.max_abs = v;
        rep.witnesses.clear();
      }
      if (std::abs(v - rep.max_abs) <= 1e-9)
        rep.witnesses.emplace_back(x, chi);
    }
  }
  return rep;
}

double max_abs_value(grp::FiniteGroup const &g, CharacterTable const &t, std::vector<grp::Index> const &elements)
{
  double best = 0;
  for (grp::Index x : elements)
    for (std::size_t chi = 0; chi < t.size(); ++chi)
      best = std::max(best, std::abs(t.values[chi][g.class_of(x)]));
  return best;
}

} // namespace bv::chars
