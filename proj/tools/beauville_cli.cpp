// Command-line front end. Talks to the engine only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "beauville/beauville.h"

namespace {

constexpr int kExitInput = 3;

struct Options
{
  std::string format = "text";
  std::string level;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  std::size_t cap = 20000;
  std::size_t lattice_cap = 2000;
};

struct GroupDeleter
{
  void operator()(bv_group *g) const { bv_group_destroy(g); }
};
struct ReportDeleter
{
  void operator()(bv_report *r) const { bv_report_destroy(r); }
};
using GroupHandle = std::unique_ptr<bv_group, GroupDeleter>;
using ReportHandle = std::unique_ptr<bv_report, ReportDeleter>;

// Exit code for a failed library call.
int status_exit(bv_status s)
{
  std::cerr << "error: " << bv_last_error() << '\n';
  switch (s) {
  case BV_ERR_INPUT:
    return kExitInput;
  case BV_ERR_CAP:
  case BV_ERR_NUMERIC:
    return 2;
  default:
    return 4;
  }
}

struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string const &text)
{
  auto const dots = text.find("..");
  auto num = [&](std::string const &part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad range '" + text + "': '" + part + "' is not a number");
    return std::stoull(part);
  };
  if (dots == std::string::npos)
    throw InputError("bad range '" + text + "': expected a..b");
  return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

std::vector<std::size_t> parse_ids(std::string const &text)
{
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad class id '" + tok + "' in '" + text + "'");
    out.push_back(std::stoull(tok));
  }
  if (out.empty())
    throw InputError("no class ids given");
  return out;
}

bv_level level_of(Options const &o, bv_level fallback)
{
  if (o.level.empty())
    return fallback;
  if (o.level == "group")
    return BV_LEVEL_GROUP;
  if (o.level == "quotient")
    return BV_LEVEL_QUOTIENT;
  throw InputError("bad level '" + o.level + "' (group, quotient)");
}

bv_search_mode mode_of(std::string const &m)
{
  if (m == "exhaustive")
    return BV_SEARCH_EXHAUSTIVE;
  if (m == "torus")
    return BV_SEARCH_TORUS;
  if (m == "random")
    return BV_SEARCH_RANDOM;
  throw InputError("bad mode '" + m + "' (exhaustive, torus, random)");
}

// `slot` is read only after the call that fills it has returned.
int finish(Options const &o, bv_status s, bv_report *const *slot)
{
  if (s != BV_OK)
    return status_exit(s);
  ReportHandle r(*slot);
  std::cout << (o.format == "structured" ? bv_report_structured(r.get()) : bv_report_text(r.get()));
  return static_cast<int>(bv_report_verdict(r.get()));
}

// Builds the group, then runs `fn` on it.
template <class Fn>
int with_group(Options const &o, std::string const &spec, bv_level fallback, Fn &&fn)
{
  bv_group *raw = nullptr;
  if (bv_status s = bv_group_create(spec.c_str(), level_of(o, fallback), o.cap, &raw); s != BV_OK)
    return status_exit(s);
  GroupHandle g(raw);
  bv_report *rep = nullptr;
  bv_status const s = fn(g.get(), &rep);
  return finish(o, s, &rep);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Beauville structures, torus arithmetic and character bounds on small finite groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--level", o.level, "group or quotient (default: quotient for search, group otherwise)");
  app.add_option("--seed", o.seed, "seed for random search and character tables");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "candidate-pair budget for search");
  app.add_option("--mode", o.mode, "search mode: exhaustive, torus or random");
  app.add_option("--cap", o.cap, "group enumeration cap");
  app.add_option("--lattice-cap", o.lattice_cap, "subgroup lattice cap");

  std::string spec, file, type, range, ids;
  unsigned r = 0;
  std::uint64_t q = 0, a = 0, b = 0;
  double t = 1;
  bool intersection = false;

  auto *search = app.add_subcommand("search", "search for an unmixed Beauville structure");
  search->add_option("spec", spec, "group spec")->required();
  auto *verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("certificate", file, "certificate file")->required();
  auto *tori = app.add_subcommand("tori", "torus pair orders against the center");
  tori->add_option("type", type, "A, 2A, B, C, D, 2D, 3D4, E6, 2E6, E7, E8, F4, G2")->required();
  tori->add_option("r", r, "rank")->required();
  std::string q_range = "2..100";
  tori->add_option("--q-range", q_range, "q range a..b (prime powers only)");
  auto *singer = app.add_subcommand("singer", "Singer-type tori of SL(r+1,q)");
  singer->add_option("r", r)->required();
  singer->add_option("q", q)->required();
  singer->add_flag("--check-intersection", intersection, "check T1 and every conjugate of T2 exhaustively");
  auto *charbound = app.add_subcommand("charbound", "character bounds on regular elements");
  charbound->add_option("spec", spec, "group spec")->required();
  auto *ree = app.add_subcommand("ree", "torus orders of the Ree groups 2F4(2^(2f+1))");
  std::string f_range = "1..6";
  ree->add_option("--f-range", f_range, "f range a..b");
  auto *count = app.add_subcommand("count", "triple counts over a union of classes");
  count->add_option("spec", spec, "group spec")->required();
  count->add_option("--classes", ids, "comma-separated class indices (as listed by charbound)")->required();
  auto *resultant = app.add_subcommand("resultant", "resultant of two cyclotomic polynomials");
  resultant->add_option("a", a)->required();
  resultant->add_option("b", b)->required();
  auto *zeta = app.add_subcommand("zeta", "character and maximal-subgroup zeta values");
  zeta->add_option("spec", spec, "group spec")->required();
  zeta->add_option("--t", t, "exponent")->required();

  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    bv_report *rep = nullptr;
    if (*search) {
      bv_search_options opts;
      bv_search_options_init(&opts);
      opts.mode = mode_of(o.mode);
      opts.seed = o.seed;
      opts.budget = o.budget;
      opts.threads = o.threads;
      return with_group(o, spec, BV_LEVEL_QUOTIENT,
                        [&](bv_group const *g, bv_report **out) { return bv_search(g, &opts, out); });
    }
    if (*verify) {
      std::ifstream in(file);
      if (!in)
        throw InputError("cannot read certificate file '" + file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return finish(o, bv_verify(ss.str().c_str(), o.cap, &rep), &rep);
    }
    if (*tori) {
      auto const [lo, hi] = parse_range(q_range);
      return finish(o, bv_tori(type.c_str(), r, lo, hi, &rep), &rep);
    }
    if (*singer)
      return finish(o, bv_singer(r, q, intersection, o.cap, &rep), &rep);
    if (*charbound)
      return with_group(o, spec, BV_LEVEL_GROUP,
                        [&](bv_group const *g, bv_report **out) { return bv_charbound(g, o.seed, out); });
    if (*ree) {
      auto const [lo, hi] = parse_range(f_range);
      return finish(o, bv_ree(static_cast<unsigned>(lo), static_cast<unsigned>(hi), &rep), &rep);
    }
    if (*count) {
      auto const cls = parse_ids(ids);
      return with_group(o, spec, BV_LEVEL_GROUP, [&](bv_group const *g, bv_report **out) {
        return bv_count(g, cls.data(), cls.size(), o.lattice_cap, o.seed, out);
      });
    }
    if (*resultant)
      return finish(o, bv_resultant(a, b, &rep), &rep);
    if (*zeta)
      return with_group(o, spec, BV_LEVEL_GROUP,
                        [&](bv_group const *g, bv_report **out) { return bv_zeta(g, t, o.lattice_cap, o.seed, out); });
  } catch (InputError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
