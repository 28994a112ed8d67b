#include "grp/subgroups.hpp"

#include <cmath>
#include <unordered_set>

#include "common/errors.hpp"

namespace bv::grp {

std::size_t BitsHash::operator()(Bits const &b) const
{
  std::size_t h = 1469598103934665603ull;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    h ^= i;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::vector<Bits> all_conjugates(FiniteGroup const &g, Bits const &members)
{
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> out;
  for (Index h = 0; h < g.order(); ++h) {
    Bits c = conjugate(g, members, h);
    if (seen.insert(c).second)
      out.push_back(std::move(c));
  }
  return out;
}

} // namespace

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &g, std::size_t cap)
{
  if (g.order() > cap)
    throw CapExceeded("subgroup lattice: group order " + std::to_string(g.order()) +
                      " exceeds the lattice cap of " + std::to_string(cap));

  // One generator per cyclic subgroup.
  std::vector<Index> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (Index x = 1; x < g.order(); ++x)
      if (seen.insert(g.closure({x}).members).second)
        cyclic_gens.push_back(x);
  }

  std::unordered_set<Bits, BitsHash> known;
  std::vector<SubgroupClass> classes;
  auto add = [&](Subgroup sub) {
    if (known.count(sub.members))
      return;
    auto conjugates = all_conjugates(g, sub.members);
    SubgroupClass cls{std::move(sub), std::move(conjugates)};
    for (auto const &c : cls.conjugates)
      known.insert(c);
    classes.push_back(std::move(cls));
  };

  add(g.trivial());
  for (std::size_t head = 0; head < classes.size(); ++head) {
    Subgroup const h = classes[head].representative;
    for (Index x : cyclic_gens) {
      if (h.contains(x))
        continue;
      auto gens = h.generators;
      gens.push_back(x);
      add(g.closure(gens));
    }
  }
  return classes;
}

std::vector<SubgroupClass> maximal_subgroup_classes(FiniteGroup const &g, std::size_t cap)
{
  auto classes = subgroup_classes(g, cap);
  std::vector<SubgroupClass> out;
  for (auto const &cls : classes) {
    std::size_t const n = cls.representative.order();
    if (n == g.order())
      continue;
    bool maximal = true;
    for (auto const &other : classes) {
      std::size_t const m = other.representative.order();
      if (m <= n || m == g.order() || m % n)
        continue;
      for (auto const &c : other.conjugates)
        if (cls.representative.members.is_subset_of(c)) {
          maximal = false;
          break;
        }
      if (!maximal)
        break;
    }
    if (maximal)
      out.push_back(cls);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(FiniteGroup const &g, std::size_t cap)
{
  std::vector<Subgroup> out;
  for (auto const &cls : maximal_subgroup_classes(g, cap))
    for (auto const &c : cls.conjugates) {
      std::vector<Index> els;
      for (auto i = c.find_first(); i != Bits::npos; i = c.find_next(i))
        els.push_back(static_cast<Index>(i));
      out.push_back(g.subgroup_from_elements(std::move(els)));
    }
  return out;
}

std::vector<Subgroup> maximal_abelian_subgroups_containing(FiniteGroup const &g, Index a)
{
  std::unordered_set<Bits, BitsHash> visited;
  std::vector<Subgroup> out;
  std::vector<Subgroup> stack{g.closure({a})};
  visited.insert(stack.back().members);
  while (!stack.empty()) {
    Subgroup const h = std::move(stack.back());
    stack.pop_back();
    Subgroup const c = centralizer(g, h);
    if (c.order() == h.order()) {
      out.push_back(h);
      continue;
    }
    for (Index x : c.elements) {
      if (h.contains(x))
        continue;
      auto gens = h.generators;
      gens.push_back(x);
      Subgroup k = g.closure(gens);
      if (visited.insert(k.members).second)
        stack.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(), [](Subgroup const &x, Subgroup const &y) {
    if (x.order() != y.order())
      return x.order() < y.order();
    return x.elements < y.elements;
  });
  return out;
}

double subgroup_index_zeta(FiniteGroup const &g, double s, std::size_t cap)
{
  double sum = 0;
  for (auto const &cls : maximal_subgroup_classes(g, cap)) {
    double const index = static_cast<double>(g.order()) / static_cast<double>(cls.representative.order());
    sum += static_cast<double>(cls.conjugates.size()) * std::pow(index, -s);
  }
  return sum;
}

} // namespace bv::grp
