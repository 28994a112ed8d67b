#include "ree/ree.hpp"

#include <stdexcept>

#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::ree {

namespace {

constexpr unsigned kPhiThreshold = 156; // 12 * 13

BigInt pow2(unsigned e) { return BigInt(1) << e; }

} // namespace

ReeTorusOrders ree_tau(unsigned f)
{
  if (f == 0)
    throw std::invalid_argument("ree_tau: f must be at least 1");
  ReeTorusOrders r;
  r.f = f;
  r.q = pow2(2 * f + 1);
  BigInt const even = pow2(4 * f + 2) + pow2(2 * f + 1) + 1;
  BigInt const odd = pow2(3 * f + 2) + pow2(f + 1);
  r.tau1 = even + odd;
  r.tau2 = even - odd;
  r.normalizer_order1 = 12 * r.tau1;
  r.normalizer_order2 = 12 * r.tau2;
  return r;
}

ReeLemmaReport check_ree_lemma(unsigned f, bool with_phi)
{
  ReeLemmaReport rep;
  rep.orders = ree_tau(f);
  auto const &t = rep.orders;

  rep.congruent_mod_12 = t.tau1 % 12 == 1 && t.tau2 % 12 == 1;
  rep.coprime = exactmath::gcd(t.tau1, t.tau2) == 1;
  rep.coprime_to_12 = exactmath::gcd(t.tau1, BigInt(12)) == 1 && exactmath::gcd(t.tau2, BigInt(12)) == 1;
  rep.product_is_phi12 = t.tau1 * t.tau2 == exactmath::cyclotomic(12).eval(t.q);
  rep.difference_identity = t.tau1 - t.tau2 == pow2(f + 2) * (t.q + 1);

  if (with_phi) {
    rep.phi1 = exactmath::euler_phi(t.tau1);
    rep.phi2 = exactmath::euler_phi(t.tau2);
    if (f >= 2)
      rep.phi_bound = rep.phi1 >= kPhiThreshold && rep.phi2 >= kPhiThreshold;
  }
  return rep;
}

FusionBound ree_class_fusion_bound(unsigned f)
{
  if (f == 0)
    throw std::invalid_argument("ree_class_fusion_bound: f must be at least 1");
  FusionBound b;
  if (f >= 2)
    b.distinct = (kPhiThreshold + b.bound - 1) / b.bound;
  return b;
}

} // namespace bv::ree
