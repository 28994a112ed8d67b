#include "tori/torus_pairs.hpp"

#include <stdexcept>

#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::tori {

using exactmath::cyclotomic;
using exactmath::cyclotomic_product;

std::string case_name(TypeCase c)
{
  switch (c) {
  case TypeCase::A: return "A";
  case TypeCase::A2: return "2A";
  case TypeCase::B: return "B";
  case TypeCase::C: return "C";
  case TypeCase::D0mod4: return "D(r=0 mod 4)";
  case TypeCase::D2mod4: return "D(r=2 mod 4)";
  case TypeCase::Dodd: return "D(r odd)";
  case TypeCase::D2even: return "2D(r even)";
  case TypeCase::D2odd: return "2D(r odd)";
  case TypeCase::D4_3: return "3D4";
  case TypeCase::E6: return "E6";
  case TypeCase::E6_2: return "2E6";
  case TypeCase::E7: return "E7";
  case TypeCase::E8: return "E8";
  case TypeCase::F4: return "F4";
  case TypeCase::G2: return "G2";
  }
  return {};
}

std::vector<TypeCase> all_cases()
{
  return {TypeCase::A,      TypeCase::A2,   TypeCase::B,      TypeCase::C,      TypeCase::D0mod4, TypeCase::D2mod4,
          TypeCase::Dodd,   TypeCase::D2even, TypeCase::D2odd, TypeCase::D4_3,  TypeCase::E6,     TypeCase::E6_2,
          TypeCase::E7,     TypeCase::E8,   TypeCase::F4,     TypeCase::G2};
}

unsigned min_rank(TypeCase c)
{
  switch (c) {
  case TypeCase::A: return 1;
  case TypeCase::A2: return 2;
  case TypeCase::B: return 2;
  case TypeCase::C: return 2;
  case TypeCase::D0mod4: return 4;
  case TypeCase::D2mod4: return 6;
  case TypeCase::Dodd: return 5;
  case TypeCase::D2even: return 4;
  case TypeCase::D2odd: return 5;
  case TypeCase::D4_3: return 4;
  case TypeCase::E6: return 6;
  case TypeCase::E6_2: return 6;
  case TypeCase::E7: return 7;
  case TypeCase::E8: return 8;
  case TypeCase::F4: return 4;
  case TypeCase::G2: return 2;
  }
  return 0;
}

bool rank_allowed(TypeCase c, unsigned r)
{
  if (r < min_rank(c))
    return false;
  switch (c) {
  case TypeCase::D0mod4: return r % 4 == 0;
  case TypeCase::D2mod4: return r % 4 == 2;
  case TypeCase::Dodd:
  case TypeCase::D2odd: return r % 2 == 1;
  case TypeCase::D2even: return r % 2 == 0;
  case TypeCase::D4_3:
  case TypeCase::E6:
  case TypeCase::E6_2:
  case TypeCase::E7:
  case TypeCase::E8:
  case TypeCase::F4:
  case TypeCase::G2: return r == min_rank(c);
  default: return true;
  }
}

TypeCase resolve_case(std::string const &type, unsigned r)
{
  if (type == "A") return TypeCase::A;
  if (type == "2A") return TypeCase::A2;
  if (type == "B") return TypeCase::B;
  if (type == "C") return TypeCase::C;
  if (type == "D") return r % 2 ? TypeCase::Dodd : r % 4 == 0 ? TypeCase::D0mod4 : TypeCase::D2mod4;
  if (type == "2D") return r % 2 ? TypeCase::D2odd : TypeCase::D2even;
  if (type == "3D4") return TypeCase::D4_3;
  if (type == "E6") return TypeCase::E6;
  if (type == "2E6") return TypeCase::E6_2;
  if (type == "E7") return TypeCase::E7;
  if (type == "E8") return TypeCase::E8;
  if (type == "F4") return TypeCase::F4;
  if (type == "G2") return TypeCase::G2;
  throw std::invalid_argument("unknown Lie type '" + type + "'");
}

WeylData weyl_data(SignedPerm const &w, Ambient ambient)
{
  WeylData d{w, ambient, centralizer_order(w, ambient), std::nullopt};
  if (w.rank() <= 8) {
    auto const els = centralizer_elements(w, ambient);
    bool abelian = true;
    for (std::size_t i = 0; i < els.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < els.size() && abelian; ++j)
        abelian = els[i] * els[j] == els[j] * els[i];
    if (abelian) {
      std::vector<std::uint64_t> orders;
      for (auto const &x : els)
        orders.push_back(element_order(x));
      d.structure = invariant_factors(orders);
    }
  }
  return d;
}

namespace {

// Cycle text helpers on 1-based points; primed copies use the ' suffix.
std::string run(unsigned from, unsigned to, bool primed)
{
  std::string s;
  for (unsigned i = from; i <= to; ++i)
    s += (s.empty() ? "" : " ") + std::to_string(i) + (primed ? "'" : "");
  return s;
}
std::string neg_cycle(unsigned from, unsigned to) { return "(" + run(from, to, false) + " " + run(from, to, true) + ")"; }
std::string pos_cycle(unsigned from, unsigned to) { return "(" + run(from, to, false) + ")(" + run(from, to, true) + ")"; }

} // namespace

TorusPair torus_pair_for(std::string const &type, unsigned r)
{
  TypeCase const c = resolve_case(type, r);
  if (!rank_allowed(c, r))
    throw std::invalid_argument("rank " + std::to_string(r) + " is not valid for type " + type + " (" +
                                case_name(c) + ")");
  TorusPair p{c, type, r, {}, {}, std::nullopt, std::nullopt, 1};

  auto set_weyl = [&](std::string const &w1, std::string const &w2, Ambient amb, unsigned points) {
    p.w1 = weyl_data(SignedPerm::parse(w1, points), amb);
    p.w2 = weyl_data(SignedPerm::parse(w2, points), amb);
  };
  auto from_cycles = [&](int twist) {
    // Order polynomials straight from the cycle type of the Weyl elements.
    for (int which : {1, 2}) {
      IntPoly poly = cycle_polynomial((which == 1 ? p.w1 : p.w2)->w);
      if (c == TypeCase::A || c == TypeCase::A2)
        poly = poly.exact_div(IntPoly{-1, 1});
      if (twist < 0) {
        poly = poly.reflect();
        if (poly.leading() < 0)
          poly = -poly;
      }
      (which == 1 ? p.order1 : p.order2) = poly;
    }
  };

  unsigned const s = r / 2;
  switch (c) {
  case TypeCase::A:
  case TypeCase::A2:
    set_weyl("(" + run(1, r + 1, false) + ")(" + run(1, r + 1, true) + ")",
             r >= 2 ? pos_cycle(1, r) : std::string("()"), Ambient::Symmetric, r + 1);
    p.twist = c == TypeCase::A2 ? -1 : 1;
    from_cycles(p.twist);
    break;
  case TypeCase::B:
  case TypeCase::C:
    set_weyl(neg_cycle(1, r), pos_cycle(1, r), Ambient::B, r);
    from_cycles(1);
    break;
  case TypeCase::D0mod4:
    set_weyl(pos_cycle(1, s - 1) + pos_cycle(s, r), neg_cycle(1, s - 1) + neg_cycle(s, r), Ambient::D, r);
    from_cycles(1);
    break;
  case TypeCase::D2mod4:
    set_weyl(pos_cycle(1, r), neg_cycle(1, 2) + neg_cycle(3, r), Ambient::D, r);
    from_cycles(1);
    break;
  case TypeCase::Dodd:
    set_weyl(pos_cycle(1, r), neg_cycle(1, 1) + neg_cycle(2, r), Ambient::D, r);
    from_cycles(1);
    break;
  case TypeCase::D2even:
    set_weyl(neg_cycle(1, r), neg_cycle(1, 1) + pos_cycle(2, r), Ambient::B, r);
    from_cycles(1);
    break;
  case TypeCase::D2odd:
    set_weyl(neg_cycle(1, r), neg_cycle(1, 2) + pos_cycle(3, r), Ambient::B, r);
    from_cycles(1);
    break;
  case TypeCase::D4_3:
    p.order1 = cyclotomic_product({1, 1, 2, 2});
    p.order2 = cyclotomic(12);
    break;
  case TypeCase::E6:
    p.order1 = cyclotomic_product({1, 2, 8});
    p.order2 = cyclotomic(9);
    break;
  case TypeCase::E6_2:
    p.order1 = cyclotomic_product({1, 2, 8});
    p.order2 = cyclotomic(18);
    break;
  case TypeCase::E7:
    p.order1 = cyclotomic_product({1, 9});
    p.order2 = cyclotomic_product({2, 14});
    break;
  case TypeCase::E8:
    p.order1 = cyclotomic(24);
    p.order2 = cyclotomic(30);
    break;
  case TypeCase::F4:
    p.order1 = cyclotomic(8);
    p.order2 = cyclotomic(12);
    break;
  case TypeCase::G2:
    p.order1 = cyclotomic_product({2, 2});
    p.order2 = cyclotomic(3);
    break;
  }
  return p;
}

BigInt center_order(TypeCase c, unsigned r, std::uint64_t q)
{
  using exactmath::gcd_u64;
  switch (c) {
  case TypeCase::A: return gcd_u64(r + 1, q - 1);
  case TypeCase::A2: return gcd_u64(r + 1, q + 1);
  case TypeCase::B:
  case TypeCase::C:
  case TypeCase::E7: return gcd_u64(2, q - 1);
  case TypeCase::D0mod4:
  case TypeCase::D2mod4:
  case TypeCase::Dodd: return gcd_u64(2, q - 1) * gcd_u64(2, q - 1);
  case TypeCase::D2even:
  case TypeCase::D2odd: return gcd_u64(2, q + 1) * gcd_u64(2, q + 1);
  case TypeCase::E6: return gcd_u64(3, q - 1);
  case TypeCase::E6_2: return gcd_u64(3, q + 1);
  case TypeCase::D4_3:
  case TypeCase::E8:
  case TypeCase::F4:
  case TypeCase::G2: return 1;
  }
  return 1;
}

BigInt torus_order_from_weyl(TorusPair const &pair, int which, std::uint64_t q)
{
  auto const &wd = which == 1 ? pair.w1 : pair.w2;
  if (!wd)
    throw std::invalid_argument("torus_order_from_weyl: no Weyl element stored for " + case_name(pair.type_case));
  BigInt d = torus_det(wd->w, q, pair.twist);
  if (pair.type_case == TypeCase::A || pair.type_case == TypeCase::A2) {
    // Remove the trivial summand of the permutation representation.
    BigInt const trivial = pair.twist > 0 ? BigInt(q - 1) : BigInt(q + 1);
    d /= trivial;
  }
  return d;
}

CenterCertificate gcd_divides_center(TorusPair const &pair, std::uint64_t q)
{
  if (q < 2 || !exactmath::as_prime_power(q))
    throw std::invalid_argument("gcd_divides_center: " + std::to_string(q) + " is not a prime power");
  CenterCertificate c;
  c.q = q;
  c.order1 = pair.order1.eval(q);
  c.order2 = pair.order2.eval(q);
  c.gcd = exactmath::gcd(c.order1, c.order2);
  c.center = center_order(pair.type_case, pair.rank, q);
  c.resultant = exactmath::resultant(pair.order1, pair.order2);
  c.divides = c.center % c.gcd == 0;
  c.resultant_divides = c.resultant % c.gcd == 0;
  return c;
}

} // namespace bv::tori
