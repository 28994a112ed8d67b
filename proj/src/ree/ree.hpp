#pragma once

#include <cstdint>
#include <optional>

#include "exactmath/intpoly.hpp"

namespace bv::ree {

using exactmath::BigInt;

/// Orders of the two cyclic maximal tori of 2F4(q), q = 2^{2f+1}.
struct ReeTorusOrders
{
  unsigned f = 0;
  BigInt q;
  BigInt tau1, tau2;
  BigInt normalizer_order1, normalizer_order2; // 12 tau_i
};

/// Throws std::invalid_argument for f = 0.
ReeTorusOrders ree_tau(unsigned f);

struct ReeLemmaReport
{
  ReeTorusOrders orders;
  bool congruent_mod_12 = false;
  // Unset for f = 1, where the phi bound is not claimed.
  std::optional<bool> phi_bound;
  BigInt phi1, phi2;
  bool coprime = false;

  // Side identities, checked for every f.
  bool product_is_phi12 = false;
  bool difference_identity = false;
  bool coprime_to_12 = false;

  bool holds() const
  {
    return congruent_mod_12 && phi_bound.value_or(true) && coprime && product_is_phi12 && difference_identity &&
           coprime_to_12;
  }
};

/// phi values are computed by full factorization; set with_phi = false to skip
/// them for large f (the phi bound is then left unset).
ReeLemmaReport check_ree_lemma(unsigned f, bool with_phi = true);

struct FusionBound
{
  unsigned bound = 12;              // [N_G(T) : T]
  std::optional<unsigned> distinct; // ceil(156 / 12) classes when phi(tau) >= 156
};

FusionBound ree_class_fusion_bound(unsigned f);

} // namespace bv::ree
