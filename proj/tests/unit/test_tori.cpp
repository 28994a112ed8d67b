#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "common/errors.hpp"
#include "exactmath/cyclotomic.hpp"
#include "exactmath/numtheory.hpp"
#include "tori/singer.hpp"
#include "tori/torus_pairs.hpp"

using namespace bv::tori;
using bv::exactmath::BigInt;
using bv::exactmath::cyclotomic;

namespace {

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q)
    if (bv::exactmath::as_prime_power(q))
      out.push_back(q);
  return out;
}

// Every element of the hyperoctahedral group of rank r.
std::vector<SignedPerm> hyperoctahedral(unsigned r)
{
  std::vector<SignedPerm> out;
  std::vector<unsigned> p(r);
  std::iota(p.begin(), p.end(), 0u);
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> s(r);
      for (unsigned i = 0; i < r; ++i)
        s[i] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(p, s);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> matmul(std::vector<std::vector<int>> const &a, std::vector<std::vector<int>> const &b)
{
  std::size_t const n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

} // namespace

TEST_CASE("signed permutations")
{
  auto const w = SignedPerm::parse("(1 2 3 1' 2' 3')", 3);
  CHECK(w.to_string() == "(1,2,3,1',2',3')");
  CHECK(w.cycles().size() == 1);
  CHECK(w.cycles()[0].sign == -1);
  CHECK(element_order(w) == 6);
  CHECK(SignedPerm::parse("(1 1')", 2).to_string() == "(1,1')");
  CHECK_THROWS_AS(SignedPerm::parse("(1 2)", 2), bv::ParseError);
  CHECK_THROWS_WITH_AS(SignedPerm::parse("(1 5 1' 5')", 3), doctest::Contains("'5'"), bv::ParseError);

  auto const all = hyperoctahedral(3);
  CHECK(all.size() == 48);
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 7) {
      CHECK(matmul(all[i].matrix(), all[j].matrix()) == (all[i] * all[j]).matrix());
      CHECK(SignedPerm::parse(all[i].to_string(), 3) == all[i]);
    }
}

TEST_CASE("torus orders from det(qw - 1)")
{
  CHECK(torus_det(SignedPerm::identity(1), 7) == 6);
  CHECK(torus_det(SignedPerm::parse("(1 2 3 1' 2' 3')", 3), 2) == 9);
  CHECK(torus_det(SignedPerm::parse("(1 2 3)(1' 2' 3')", 3), 2) == 7);

  // Cycle-type polynomial against the exact determinant.
  for (unsigned r = 1; r <= 4; ++r)
    for (auto const &w : hyperoctahedral(r))
      for (int q : {2, 3, 5}) {
        BigInt v = cycle_polynomial(w).eval(q);
        CHECK((v < 0 ? BigInt(-v) : v) == torus_det(w, q));
      }
}

TEST_CASE("torus pairs: closed forms")
{
  auto const f4 = torus_pair_for("F4", 4);
  CHECK(f4.order1 == cyclotomic(8));
  CHECK(f4.order2 == cyclotomic(12));
  auto const b3 = torus_pair_for("B", 3);
  CHECK(b3.order1 == bv::exactmath::IntPoly({1, 0, 0, 1}));
  CHECK(b3.order2 == bv::exactmath::IntPoly({-1, 0, 0, 1}));
  auto const d8 = torus_pair_for("D", 8);
  CHECK(d8.type_case == TypeCase::D0mod4);
  CHECK(d8.order1 == bv::exactmath::IntPoly::binomial(3, 1) * bv::exactmath::IntPoly::binomial(5, 1));
  CHECK(d8.order2 == bv::exactmath::IntPoly::binomial(3, -1) * bv::exactmath::IntPoly::binomial(5, -1));
  auto const a2 = torus_pair_for("2A", 4);
  CHECK(a2.order1.eval(3) == 61);
  CHECK(a2.order2.eval(3) == 80);

  CHECK_THROWS_AS(torus_pair_for("E8", 7), std::invalid_argument);
  CHECK_THROWS_AS(torus_pair_for("H3", 3), std::invalid_argument);
  CHECK_THROWS_AS(torus_pair_for("D", 3), std::invalid_argument);

  for (auto c : all_cases())
    for (unsigned r = min_rank(c); r <= 12; ++r) {
      if (!rank_allowed(c, r))
        continue;
      std::string const type = c == TypeCase::D0mod4 || c == TypeCase::D2mod4 || c == TypeCase::Dodd ? "D"
                               : c == TypeCase::D2even || c == TypeCase::D2odd                       ? "2D"
                                                                                                      : case_name(c);
      auto const p = torus_pair_for(type, r);
      CHECK(p.type_case == c);
      CHECK(p.order1.degree() == static_cast<int>(r));
      CHECK(p.order2.degree() == static_cast<int>(r));
      // Products of cyclotomic polynomials.
      CHECK_NOTHROW(bv::exactmath::cyclotomic_factors(p.order1));
      CHECK_NOTHROW(bv::exactmath::cyclotomic_factors(p.order2));
      if (p.w1 && r <= 8)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
          CHECK_MESSAGE(torus_order_from_weyl(p, 1, q) == p.order1.eval(q), case_name(c), " r=", r);
          CHECK_MESSAGE(torus_order_from_weyl(p, 2, q) == p.order2.eval(q), case_name(c), " r=", r);
        }
    }
}

TEST_CASE("gcd of torus orders divides the center")
{
  CHECK(gcd_divides_center(torus_pair_for("E8", 8), 7).gcd == 1);
  auto const a = gcd_divides_center(torus_pair_for("2A", 4), 3);
  CHECK(a.gcd == 1);
  CHECK(a.center == 1);
  auto const b = gcd_divides_center(torus_pair_for("B", 3), 5);
  CHECK(b.order1 == 126);
  CHECK(b.order2 == 124);
  CHECK(b.gcd == 2);
  CHECK(b.center == 2);
  CHECK_THROWS_AS(gcd_divides_center(torus_pair_for("B", 3), 6), std::invalid_argument);

  for (auto c : all_cases())
    for (unsigned r = min_rank(c); r <= 10; ++r) {
      if (!rank_allowed(c, r))
        continue;
      std::string const type = c == TypeCase::D0mod4 || c == TypeCase::D2mod4 || c == TypeCase::Dodd ? "D"
                               : c == TypeCase::D2even || c == TypeCase::D2odd                       ? "2D"
                                                                                                      : case_name(c);
      auto const p = torus_pair_for(type, r);
      for (std::uint64_t q : prime_powers_upto(100)) {
        auto const cert = gcd_divides_center(p, q);
        CHECK_MESSAGE(cert.divides, case_name(c), " r=", r, " q=", q);
        CHECK_MESSAGE(cert.resultant_divides, case_name(c), " r=", r, " q=", q);
        CHECK(cert.order1 > 0);
        CHECK(cert.order2 > 0);
      }
    }
}

TEST_CASE("exceptional resultants")
{
  std::vector<std::pair<char const *, unsigned>> const types{{"3D4", 4}, {"E6", 6}, {"2E6", 6}, {"E7", 7},
                                                             {"E8", 8},  {"F4", 4}, {"G2", 2}};
  std::vector<int> const expected{1, 3, 3, 2, 1, 1, 1};
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto const p = torus_pair_for(types[i].first, types[i].second);
    CHECK_MESSAGE(bv::exactmath::resultant(p.order1, p.order2) == expected[i], types[i].first);
    CHECK(bv::exactmath::cyclotomic_product_resultant(bv::exactmath::cyclotomic_factors(p.order1),
                                                      bv::exactmath::cyclotomic_factors(p.order2)) == expected[i]);
  }
}

TEST_CASE("Weyl centralizers")
{
  auto const b3 = torus_pair_for("B", 3);
  CHECK(b3.w1->centralizer_order == 6);
  CHECK(*b3.w1->structure == std::vector<std::uint64_t>{6});
  CHECK(b3.w2->centralizer_order == 6);
  CHECK(*b3.w2->structure == std::vector<std::uint64_t>{6});
  auto const d5 = torus_pair_for("D", 5);
  CHECK(d5.w2->centralizer_order == 8);
  CHECK(*d5.w2->structure == std::vector<std::uint64_t>{8});
  CHECK(d5.w1->centralizer_order == 5);
  auto const d6 = torus_pair_for("D", 6);
  CHECK(d6.w1->centralizer_order == 12);
  CHECK(d6.w2->centralizer_order == 16);
  auto const a4 = torus_pair_for("2A", 4);
  CHECK(a4.w1->centralizer_order == 5);
  CHECK(a4.w2->centralizer_order == 4);

  // Cycle-type formula against brute force over the whole group.
  for (unsigned r = 1; r <= 4; ++r) {
    auto const all = hyperoctahedral(r);
    for (auto const &w : all) {
      std::size_t b = 0, d = 0;
      for (auto const &x : all)
        if (x * w == w * x) {
          ++b;
          d += x.is_even();
        }
      CHECK(centralizer_order(w, Ambient::B) == b);
      if (w.is_even())
        CHECK(centralizer_order(w, Ambient::D) == d);
      CHECK(centralizer_elements(w, Ambient::B).size() == b);
    }
  }
  // The chosen Weyl elements up to rank 6.
  auto const all5 = hyperoctahedral(5), all6 = hyperoctahedral(6);
  for (char const *type : {"B", "D", "2D"})
    for (unsigned r = 4; r <= 6; ++r) {
      TorusPair p;
      try {
        p = torus_pair_for(type, r);
      } catch (std::invalid_argument const &) {
        continue;
      }
      auto const &all = r == 6 ? all6 : r == 5 ? all5 : hyperoctahedral(4);
      for (auto const *wd : {&*p.w1, &*p.w2}) {
        std::size_t n = 0;
        for (auto const &x : all)
          if (x * wd->w == wd->w * x && (wd->ambient != Ambient::D || x.is_even()))
            ++n;
        CHECK_MESSAGE(wd->centralizer_order == n, type, r);
      }
    }
}

TEST_CASE("Singer tori")
{
  auto const f3 = singer_pair(1, 3);
  CHECK(f3.order1 == 4);
  CHECK(f3.order2 == 2);
  auto const f22 = singer_pair(2, 2);
  CHECK(f22.order1 == 7);
  auto const f23 = singer_pair(2, 3);
  CHECK(f23.order1 == 13);
  CHECK(f23.order2 == 8);

  for (auto [r, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 3}, {1, 5}, {1, 7}, {2, 2}, {2, 3}, {1, 9}, {3, 2}, {2, 4}}) {
    auto const d = singer_pair(r, q);
    auto const &f = *d.field;
    CHECK(bv::grp::determinant(f, d.t1) == 1);
    CHECK(bv::grp::determinant(f, d.t2) == 1);
    CHECK(d.charpoly1.is_irreducible());
    CHECK(d.charpoly1.degree() == static_cast<int>(r + 1));
    CHECK(is_regular_semisimple(d.field, d.t1));
    // Order of t1 by repeated multiplication.
    bv::grp::Matrix x = d.t1;
    std::uint64_t ord = 1;
    while (!(x == bv::grp::Matrix::identity(r + 1))) {
      x = bv::grp::mat_mul(f, x, d.t1);
      ++ord;
    }
    CHECK(ord == d.order1);
    x = d.t2;
    ord = 1;
    while (!(x == bv::grp::Matrix::identity(r + 1))) {
      x = bv::grp::mat_mul(f, x, d.t2);
      ++ord;
    }
    CHECK(ord == d.order2);

    auto const reg = count_regular_in_torus(d);
    CHECK(reg.t1.regular + reg.t1.non_regular == d.order1);
    CHECK(reg.t1.non_regular == reg.t1_non_generating);
    CHECK(reg.t1.within_bound);
    CHECK(reg.t2.within_bound);
  }
  CHECK(count_regular_in_torus(singer_pair(1, 7)).t1.non_regular == 2);
  CHECK(count_regular_in_torus(singer_pair(2, 2)).t1.non_regular == 1);
  CHECK(count_regular_in_torus(singer_pair(2, 3)).t1.non_regular == 1);
}

TEST_CASE("torus intersections and character bounds on small SL")
{
  for (auto [r, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 3}, {1, 5}, {1, 7}, {2, 2}}) {
    auto const rep = verify_torus_intersection(r, q);
    CHECK(rep.certified);
    CHECK(rep.conjugates_checked == rep.group_order);
  }
  auto const r13 = verify_torus_intersection(1, 3);
  CHECK(r13.center_order == 2);
  CHECK_FALSE(r13.t2_regular);
  CHECK(verify_torus_intersection(2, 2).center_order == 1);

  for (std::uint64_t q : {5, 7}) {
    auto const b = sl2_regular_bound(q);
    CHECK(b.holds);
    CHECK(b.elements > 0);
  }
  auto const s = singer_character_bound(2, 2);
  CHECK(s.holds);
  CHECK(s.elements == 6);
}
