#include <doctest.h>

#include "common/errors.hpp"
#include "report/commands.hpp"

using namespace bv::report;
using bv::beauville::Target;

namespace {

Target target(char const *spec, bv::grp::Level level = bv::grp::Level::Group)
{ return Target::build(bv::grp::GroupSpec::parse(spec), level); }

void round_trips(Report const &r)
{
  std::string const text = to_structured(r);
  Report const back = parse_structured(text);
  CHECK(back == r);
  CHECK(to_structured(back) == text);
  CHECK_FALSE(to_text(r).empty());
}

} // namespace

TEST_CASE("every command round-trips through the structured form")
{
  round_trips(cmd_ree(1, 4));
  round_trips(cmd_resultant(8, 12));
  round_trips(cmd_resultant(5, 5));
  round_trips(cmd_tori("B", 3, 2, 30));
  round_trips(cmd_tori("E8", 8, 2, 9));
  round_trips(cmd_singer(1, 5, true));
  round_trips(cmd_charbound(target("S4")));
  round_trips(cmd_count(target("A5"), {3, 4}));
  round_trips(cmd_zeta(target("A5"), 2));
  round_trips(cmd_search(target("A5", bv::grp::Level::Quotient), {}));
  auto const found = cmd_search(target("A6", bv::grp::Level::Quotient), {});
  round_trips(found);
  round_trips(cmd_verify(to_structured(found)));
}

TEST_CASE("values and verdicts")
{
  auto const ree = cmd_ree(1, 3);
  auto rows = ree.rows();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]->get("tau1") == "109");
  CHECK(rows[1]->get("tau2") == "793");
  CHECK(rows[2]->get("phi1") == "17136");
  CHECK(ree.verdict == Verdict::Pass);

  CHECK(cmd_resultant(8, 12).find("resultant")->get("value") == "1");
  CHECK(cmd_resultant(3, 6).find("resultant")->get("value") == "4");

  auto const a5 = cmd_search(target("A5", bv::grp::Level::Quotient), {});
  CHECK(a5.verdict == Verdict::Nonexistent);
  auto const a6 = cmd_search(target("A6", bv::grp::Level::Quotient), {});
  CHECK(a6.verdict == Verdict::Pass);
  CHECK(cmd_verify(to_structured(a6)).verdict == Verdict::Pass);

  // A certificate whose transcript has been edited is refused.
  std::string forged = to_structured(a6);
  auto const pos = forged.find("sigma_1=");
  forged.replace(pos, forged.find('\n', pos) - pos, "sigma_1=1");
  auto const v = cmd_verify(forged);
  CHECK(v.verdict == Verdict::Fail);
  CHECK(v.find("verify")->get("result") == "refused");

  CHECK(cmd_tori("2A", 4, 2, 100).verdict == Verdict::Pass);
  CHECK(cmd_count(target("A5"), {3, 4}).find("count")->get("quad_sum") ==
        cmd_count(target("A5"), {3, 4}).find("count")->get("enumeration"));
}

TEST_CASE("input errors")
{
  CHECK_THROWS_AS(cmd_ree(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(cmd_tori("B", 3, 50, 40), std::invalid_argument);
  CHECK_THROWS_AS(cmd_tori("B", 3, 24, 24), std::invalid_argument);
  CHECK_THROWS_AS(cmd_tori("Q", 3, 2, 9), std::invalid_argument);
  CHECK_THROWS_AS(cmd_count(target("A5"), {99}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_verify("garbage"), bv::ParseError);
  CHECK_THROWS_AS(parse_structured("[other]\nx=1\n"), bv::ParseError);
  CHECK_THROWS_AS(parse_structured("[report]\ncommand=ree\nverdict=maybe\n"), bv::ParseError);
}

TEST_CASE("identical inputs give identical output")
{
  bv::beauville::SearchStrategy s;
  s.mode = bv::beauville::SearchMode::Random;
  s.seed = 11;
  s.budget = 5000;
  auto const t = target("A6", bv::grp::Level::Quotient);
  CHECK(to_structured(cmd_search(t, s)) == to_structured(cmd_search(t, s)));
  s.threads = 4;
  auto const threaded = to_structured(cmd_search(t, s));
  s.threads = 1;
  CHECK(threaded == to_structured(cmd_search(t, s)));
}
