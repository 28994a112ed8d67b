#pragma once

#include <vector>

#include "grp/group.hpp"

namespace bv::grp {

struct SubgroupClass
{
  Subgroup representative;
  std::vector<Bits> conjugates; // includes the representative
};

/// All subgroups up to conjugacy, built by joining known subgroups with
/// cyclic ones. Ordered by discovery. Throws CapExceeded if |G| > cap.
std::vector<SubgroupClass> subgroup_classes(FiniteGroup const &g, std::size_t cap = kDefaultLatticeCap);

/// Conjugacy classes of maximal proper subgroups.
std::vector<SubgroupClass> maximal_subgroup_classes(FiniteGroup const &g, std::size_t cap = kDefaultLatticeCap);
/// Every maximal proper subgroup, expanded.
std::vector<Subgroup> maximal_subgroups(FiniteGroup const &g, std::size_t cap = kDefaultLatticeCap);

/// Maximal abelian subgroups containing a. They all lie in Z(a); an abelian
/// A is maximal exactly when C_G(A) = A.
std::vector<Subgroup> maximal_abelian_subgroups_containing(FiniteGroup const &g, Index a);

/// Sum over maximal subgroups M of [G:M]^-s.
double subgroup_index_zeta(FiniteGroup const &g, double s, std::size_t cap = kDefaultLatticeCap);

struct BitsHash
{
  std::size_t operator()(Bits const &b) const;
};

} // namespace bv::grp
