#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chars/chartable.hpp"
#include "grp/matrix.hpp"

namespace bv::tori {

/// Two tori of SL_{r+1}(q): T1 = <t1> from a norm-one generator of
/// F_{q^{r+1}}, T2 = <t2> from a primitive element beta of F_{q^r} plus the
/// 1x1 block N(beta)^-1 (diag(beta, beta^-1) when r = 1).
struct SingerTorusData
{
  unsigned r = 0;
  std::uint64_t q = 0;
  gf::FieldPtr field; // F_q
  grp::Matrix t1, t2;
  gf::FqPoly charpoly1, charpoly2;
  std::uint64_t order1 = 0; // (q^{r+1} - 1) / (q - 1)
  std::uint64_t order2 = 0; // q^r - 1
  unsigned normalizer_index1 = 0; // r + 1
  unsigned normalizer_index2 = 0; // r
};

/// Throws CapExceeded when q^{r+1} exceeds the field cap.
SingerTorusData singer_pair(unsigned r, std::uint64_t q);

/// Squarefree characteristic polynomial.
bool is_regular_semisimple(gf::FieldPtr const &f, grp::Matrix const &m);

struct RegularCount
{
  std::uint64_t regular = 0;
  std::uint64_t non_regular = 0;
  double bound = 0; // the non-regular count must stay below this
  bool within_bound = false;
};

/// Classifies the powers of t1 and t2 by regularity. The bounds are
/// 2 q^{(r+1)/2} for T1 and 2 q^{r/2} for T2: a non-regular element lies in a
/// proper subfield of the defining extension.
struct TorusRegularity
{
  RegularCount t1, t2;
  /// Cross-check: T1 elements whose field element fails to generate F_{q^{r+1}}.
  std::uint64_t t1_non_generating = 0;
};
TorusRegularity count_regular_in_torus(SingerTorusData const &data);

struct IntersectionReport
{
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  std::size_t t1_order = 0, t2_order = 0;
  bool t1_self_centralizing = false; // C(t1) = <t1>
  bool t2_regular = false;
  bool t2_self_centralizing = false;
  std::size_t conjugates_checked = 0;
  std::size_t failures = 0;
  bool certified = false;
};

/// For every g in SL_{r+1}(q): T1 and g^-1 T2 g meet exactly in Z(G).
IntersectionReport verify_torus_intersection(unsigned r, std::uint64_t q, std::size_t cap = 20000);

/// max |chi(t)| over regular semisimple t in SL_2(q) and all irreducibles.
struct BoundCheck
{
  std::size_t group_order = 0;
  std::size_t elements = 0;
  double max_abs = 0;
  double bound = 0;
  bool holds = false;
};
BoundCheck sl2_regular_bound(std::uint64_t q, std::size_t cap = 20000);
/// max |chi(t)| over the regular elements of T1 in SL_{r+1}(q), against
/// 2 (r+1)^2 / sqrt 3.
BoundCheck singer_character_bound(unsigned r, std::uint64_t q, std::size_t cap = 20000);

} // namespace bv::tori
