#include "beauville/beauville.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "common/errors.hpp"
#include "exactmath/numtheory.hpp"
#include "grp/subgroups.hpp"
#include "tori/singer.hpp"

namespace bv::beauville {

using grp::Bits;
using grp::FiniteGroup;

namespace {

// Runs fn(i) for i in [0, n) on `threads` workers with a strided split.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn const &fn)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads)
        fn(i);
    });
}

std::uint64_t lcm_of_orders(FiniteGroup const &g, Index x, Index y)
{
  std::uint64_t l = 1;
  for (Index z : {x, y, g.mul(x, y)})
    l = std::lcm(l, g.elem_order(z));
  return l;
}

struct Candidate
{
  Index x, y;
};

// Outcome of one candidate pair: Σ class set when the pair generates.
struct Evaluated
{
  bool generating = false;
  Bits sigma;
};

Evaluated evaluate(FiniteGroup const &g, Candidate c)
{
  Evaluated e;
  if (g.commute(c.x, c.y) && !g.is_abelian())
    return e;
  if (!grp::is_generating_pair(g, c.x, c.y))
    return e;
  e.generating = true;
  e.sigma = grp::sigma_classes(g, c.x, c.y);
  return e;
}

// Distinct Σ class sets in first-seen order, each with its first witness.
struct SigmaType
{
  Bits classes;
  Candidate witness;
  std::uint64_t lcm;
};

class TypeCollector
{
public:
  explicit TypeCollector(FiniteGroup const &g) : g_(g) {}

  // Returns the index of the type if new.
  std::optional<std::size_t> add(Candidate c, Bits const &sigma)
  {
    auto [it, inserted] = seen_.emplace(sigma, types_.size());
    if (!inserted)
      return std::nullopt;
    types_.push_back({sigma, c, lcm_of_orders(g_, c.x, c.y)});
    return types_.size() - 1;
  }

  std::vector<SigmaType> const &types() const { return types_; }

private:
  FiniteGroup const &g_;
  std::map<Bits, std::size_t> seen_;
  std::vector<SigmaType> types_;
};

bool only_identity(Bits const &a, Bits const &b)
{
  Bits both = a & b;
  both.reset(0); // class 0 is the identity
  return both.none();
}

// Searches type pairs in deterministic order, coprime pairs first. Returns
// the first disjoint pair.
std::optional<std::pair<std::size_t, std::size_t>> match_types(std::vector<SigmaType> const &types,
                                                               std::size_t first_new, std::uint64_t &checked)
{
  std::optional<std::pair<std::size_t, std::size_t>> fallback;
  for (std::size_t j = first_new; j < types.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      bool const coprime = exactmath::gcd_u64(types[i].lcm, types[j].lcm) == 1;
      if (!coprime)
        continue;
      ++checked;
      // Coprime orders force disjoint Σ sets; the explicit check guards the shortcut.
      if (!only_identity(types[i].classes, types[j].classes))
        throw std::logic_error("coprime Σ types intersect nontrivially");
      return std::pair{i, j};
    }
  for (std::size_t j = first_new; j < types.size() && !fallback; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++checked;
      if (only_identity(types[i].classes, types[j].classes)) {
        fallback = std::pair{i, j};
        break;
      }
    }
  return fallback;
}

SearchReport finish_found(Target const &t, SearchReport rep, SigmaType const &a, SigmaType const &b)
{
  VerifyOutcome v = verify_structure(t, a.witness.x, a.witness.y, b.witness.x, b.witness.y);
  if (!v.certificate)
    throw std::logic_error("search produced a quadruple that fails verification: " + v.reason);
  rep.status = SearchStatus::Found;
  rep.certificate = std::move(v.certificate);
  return rep;
}

// Non-identity classes by decreasing element order, then increasing size.
std::vector<std::size_t> class_ranking(FiniteGroup const &g)
{
  std::vector<std::size_t> order(g.classes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto const &ca = g.classes()[a], &cb = g.classes()[b];
    if (ca.element_order != cb.element_order)
      return ca.element_order > cb.element_order;
    return ca.size() < cb.size();
  });
  order.erase(std::remove(order.begin(), order.end(), std::size_t{0}), order.end());
  return order;
}

// Orbit representatives of C(x) acting on G by conjugation.
std::vector<Index> centralizer_orbit_reps(FiniteGroup const &g, Index x)
{
  grp::Subgroup const c = grp::centralizer(g, x);
  std::vector<Index> reps;
  Bits seen(g.order());
  for (Index y = 0; y < g.order(); ++y) {
    if (seen.test(y))
      continue;
    reps.push_back(y);
    std::vector<Index> stack{y};
    seen.set(y);
    while (!stack.empty()) {
      Index const z = stack.back();
      stack.pop_back();
      for (Index h : c.generators) {
        Index const w = g.conj(z, h);
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  return reps;
}

SearchReport exhaustive(Target const &t, SearchStrategy const &s)
{
  FiniteGroup const &g = *t.group;
  SearchReport rep;
  std::vector<std::size_t> const ranking = class_ranking(g);
  std::vector<std::size_t> rank_of(g.classes().size(), ranking.size());
  for (std::size_t i = 0; i < ranking.size(); ++i)
    rank_of[ranking[i]] = i;

  // Σ(x, y) = Σ(y, x), so y only needs to range over classes ranked no earlier than x.
  std::vector<Candidate> cands;
  bool truncated = false;
  for (std::size_t cls : ranking) {
    Index const x = g.classes()[cls].representative;
    for (Index y : centralizer_orbit_reps(g, x)) {
      if (y == FiniteGroup::identity() || rank_of[g.class_of(y)] < rank_of[cls])
        continue;
      if (cands.size() >= s.budget) {
        truncated = true;
        break;
      }
      cands.push_back({x, y});
    }
    if (truncated)
      break;
  }

  std::vector<Evaluated> results(cands.size());
  parallel_for(cands.size(), s.threads, [&](std::size_t i) { results[i] = evaluate(g, cands[i]); });

  TypeCollector types(g);
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (results[i].generating) {
      ++rep.generating_pairs;
      types.add(cands[i], results[i].sigma);
    }
  rep.candidates = cands.size();
  rep.sigma_types = types.types().size();

  if (auto m = match_types(types.types(), 0, rep.type_pairs_checked))
    return finish_found(t, std::move(rep), types.types()[m->first], types.types()[m->second]);
  if (truncated) {
    rep.note = "candidate budget of " + std::to_string(s.budget) + " pairs exhausted";
    return rep;
  }
  rep.status = SearchStatus::Nonexistent;
  rep.note = "no two generating pairs have Σ sets meeting only in the identity";
  return rep;
}

SearchReport random_search(Target const &t, SearchStrategy const &s)
{
  FiniteGroup const &g = *t.group;
  SearchReport rep;
  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<Index> pick(1, static_cast<Index>(g.order() - 1));
  TypeCollector types(g);
  constexpr std::size_t kBatch = 256;

  while (rep.candidates < s.budget && g.order() > 1) {
    std::size_t const n = std::min<std::uint64_t>(kBatch, s.budget - rep.candidates);
    std::vector<Candidate> cands(n);
    for (auto &c : cands)
      c = {pick(rng), pick(rng)};
    std::vector<Evaluated> results(n);
    parallel_for(n, s.threads, [&](std::size_t i) { results[i] = evaluate(g, cands[i]); });
    rep.candidates += n;

    std::size_t const first_new = types.types().size();
    for (std::size_t i = 0; i < n; ++i)
      if (results[i].generating) {
        ++rep.generating_pairs;
        types.add(cands[i], results[i].sigma);
      }
    rep.sigma_types = types.types().size();
    if (auto m = match_types(types.types(), first_new, rep.type_pairs_checked))
      return finish_found(t, std::move(rep), types.types()[m->first], types.types()[m->second]);
  }
  rep.note = "random sampling of " + std::to_string(rep.candidates) + " pairs found no structure";
  return rep;
}

SearchReport torus_guided(Target const &t, SearchStrategy const &s)
{
  auto const kind = t.spec.kind;
  if (kind != grp::GroupKind::SL && kind != grp::GroupKind::PSL)
    throw std::invalid_argument("torus-guided search needs an SL or PSL group, got " + t.spec.canonical());
  unsigned const r = t.spec.n - 1;
  tori::SingerTorusData const d = tori::singer_pair(r, t.spec.q);

  grp::GroupSpec sl_spec = t.spec;
  sl_spec.kind = grp::GroupKind::SL;
  grp::GroupPtr const sl = grp::build_group(sl_spec, grp::Level::Group, t.group->cap());
  FiniteGroup const &g = *t.group;
  auto const &sla = *sl->action();

  // Elements of SL pushed into the target (identity when the target is SL itself).
  auto to_target = [&](Index x) {
    grp::Perm const p = g.action()->perm_of(sla.matrix_of(sl->element(x)));
    return *g.index_of(p);
  };

  // Classes of SL meeting T_i in a regular semisimple element.
  auto torus_classes = [&](grp::Matrix const &gen) {
    Index const ti = *sl->index_of(sla.perm_of(gen));
    Bits cls(sl->classes().size());
    Index p = FiniteGroup::identity();
    for (std::uint64_t k = 0; k < sl->elem_order(ti); ++k) {
      if (tori::is_regular_semisimple(d.field, sla.matrix_of(sl->element(p))))
        cls.set(sl->class_of(p));
      p = sl->mul(p, ti);
    }
    return cls;
  };

  // Stage one keeps x, y and xy in the torus classes; when that yields no
  // match (e.g. a (3,3,3) triple never generates), only xy is constrained.
  SearchReport rep;
  std::array<TypeCollector, 2> types{TypeCollector(g), TypeCollector(g)};
  std::array<std::vector<bool>, 2> strict;
  std::uint64_t const per_side = s.budget / 2;
  std::array<grp::Matrix const *, 2> const gens{&d.t1, &d.t2};
  std::vector<std::size_t> const ranking = class_ranking(*sl);
  for (unsigned side = 0; side < 2; ++side) {
    Bits const cls = torus_classes(*gens[side]);
    std::vector<Candidate> cands;
    std::vector<bool> in_torus;
    auto scan = [&](bool tight) {
      for (std::size_t c : ranking) {
        if (tight != cls.test(c))
          continue;
        Index const x = sl->classes()[c].representative;
        for (Index y = 1; y < sl->order() && cands.size() < per_side; ++y) {
          bool const y_in = cls.test(sl->class_of(y));
          if ((tight && !y_in) || !cls.test(sl->class_of(sl->mul(x, y))))
            continue;
          cands.push_back({to_target(x), to_target(y)});
          in_torus.push_back(tight && y_in);
        }
      }
    };
    scan(true);
    scan(false);
    std::vector<Evaluated> results(cands.size());
    parallel_for(cands.size(), s.threads, [&](std::size_t i) { results[i] = evaluate(g, cands[i]); });
    rep.candidates += cands.size();
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (results[i].generating) {
        ++rep.generating_pairs;
        if (types[side].add(cands[i], results[i].sigma))
          strict[side].push_back(in_torus[i]);
      }
  }
  rep.sigma_types = types[0].types().size() + types[1].types().size();

  for (int stage = 0; stage < 2; ++stage)
    for (std::size_t i = 0; i < types[0].types().size(); ++i)
      for (std::size_t j = 0; j < types[1].types().size(); ++j) {
        bool const tight = strict[0][i] && strict[1][j];
        if (tight != (stage == 0))
          continue;
        ++rep.type_pairs_checked;
        if (only_identity(types[0].types()[i].classes, types[1].types()[j].classes)) {
          rep.note = tight ? "all six elements in the torus classes" : "x_i y_i in the torus classes";
          return finish_found(t, std::move(rep), types[0].types()[i], types[1].types()[j]);
        }
      }
  rep.note = "no disjoint pair among torus-driven candidates";
  return rep;
}

void put(boost::property_tree::ptree &sec, std::string const &key, std::string const &value)
{ sec.push_back({key, boost::property_tree::ptree(value)}); }

std::string get(boost::property_tree::ptree const &root, std::string const &section, std::string const &key)
{
  auto const sec = root.get_child_optional(section);
  if (!sec)
    throw ParseError("certificate: missing section [" + section + "]");
  auto const v = sec->get_optional<std::string>(key);
  if (!v)
    throw ParseError("certificate: missing key '" + key + "' in [" + section + "]");
  return *v;
}

std::uint64_t get_u64(boost::property_tree::ptree const &root, std::string const &section, std::string const &key)
{
  std::string const v = get(root, section, key);
  std::size_t used = 0;
  std::uint64_t out = 0;
  try {
    out = std::stoull(v, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used == 0 || used != v.size())
    throw ParseError("certificate: '" + key + "' has non-numeric value '" + v + "'");
  return out;
}

bool get_bool(boost::property_tree::ptree const &root, std::string const &section, std::string const &key)
{
  std::string const v = get(root, section, key);
  if (v == "true")
    return true;
  if (v == "false")
    return false;
  throw ParseError("certificate: '" + key + "' must be true or false, got '" + v + "'");
}

constexpr std::array<char const *, 6> kSlotNames{"x1", "y1", "x1y1", "x2", "y2", "x2y2"};

} // namespace

Target Target::build(grp::GroupSpec spec, grp::Level level, std::size_t cap)
{
  Target t{std::move(spec), level, nullptr};
  t.group = grp::build_group(t.spec, level, cap);
  return t;
}

VerifyOutcome verify_structure(Target const &t, Index x1, Index y1, Index x2, Index y2)
{
  FiniteGroup const &g = *t.group;
  for (Index x : {x1, y1, x2, y2})
    if (x >= g.order())
      throw std::out_of_range("verify_structure: element index out of range");

  VerifyOutcome out;
  BeauvilleCertificate c;
  c.group = t.spec.canonical();
  c.level = t.level;
  c.group_order = g.order();
  std::array<Index, 6> const els{x1, y1, g.mul(x1, y1), x2, y2, g.mul(x2, y2)};
  for (unsigned i = 0; i < 6; ++i)
    c.elements[i] = {grp::format_element(g, els[i]), g.elem_order(els[i]), g.classes()[g.class_of(els[i])].size()};

  c.closure1 = g.closure({x1, y1}).order();
  if (c.closure1 != g.order()) {
    out.reason = "(x1, y1) generates a subgroup of order " + std::to_string(c.closure1) + ", not " +
                 std::to_string(g.order());
    return out;
  }
  c.closure2 = g.closure({x2, y2}).order();
  if (c.closure2 != g.order()) {
    out.reason = "(x2, y2) generates a subgroup of order " + std::to_string(c.closure2) + ", not " +
                 std::to_string(g.order());
    return out;
  }
  Bits const s1 = grp::sigma(g, x1, y1), s2 = grp::sigma(g, x2, y2);
  c.sigma1 = s1.count();
  c.sigma2 = s2.count();
  c.intersection = (s1 & s2).count();
  if (c.intersection != 1) {
    out.reason = "Σ(x1, y1) and Σ(x2, y2) share " + std::to_string(c.intersection - 1) + " non-identity elements";
    return out;
  }
  c.coprime_orders = exactmath::gcd_u64(lcm_of_orders(g, x1, y1), lcm_of_orders(g, x2, y2)) == 1;
  out.certificate = std::move(c);
  return out;
}

std::string serialize(BeauvilleCertificate const &c)
{
  boost::property_tree::ptree root, meta, els, tr;
  put(meta, "group", c.group);
  put(meta, "level", grp::to_string(c.level));
  put(meta, "order", std::to_string(c.group_order));
  put(meta, "convention", kConvention);
  put(meta, "sigma_includes_identity", "true");
  for (unsigned i = 0; i < 6; ++i)
    put(els, kSlotNames[i], c.elements[i].text);
  for (unsigned i = 0; i < 6; ++i) {
    put(tr, std::string("order_") + kSlotNames[i], std::to_string(c.elements[i].order));
    put(tr, std::string("class_size_") + kSlotNames[i], std::to_string(c.elements[i].class_size));
  }
  put(tr, "closure_1", std::to_string(c.closure1));
  put(tr, "closure_2", std::to_string(c.closure2));
  put(tr, "sigma_1", std::to_string(c.sigma1));
  put(tr, "sigma_2", std::to_string(c.sigma2));
  put(tr, "sigma_intersection", std::to_string(c.intersection));
  put(tr, "coprime_orders", c.coprime_orders ? "true" : "false");
  root.push_back({"meta", meta});
  root.push_back({"elements", els});
  root.push_back({"transcript", tr});
  std::ostringstream os;
  boost::property_tree::write_ini(os, root);
  return os.str();
}

BeauvilleCertificate parse_certificate(std::string const &text)
{
  boost::property_tree::ptree root;
  std::istringstream is(text);
  try {
    boost::property_tree::read_ini(is, root);
  } catch (boost::property_tree::ini_parser_error const &e) {
    throw ParseError("certificate: " + e.message() + " on line " + std::to_string(e.line()));
  }
  if (std::string const conv = get(root, "meta", "convention"); conv != kConvention)
    throw ParseError("certificate: unsupported convention '" + conv + "'");
  if (!get_bool(root, "meta", "sigma_includes_identity"))
    throw ParseError("certificate: sigma_includes_identity must be true");

  BeauvilleCertificate c;
  c.group = get(root, "meta", "group");
  c.level = grp::parse_level(get(root, "meta", "level"));
  c.group_order = get_u64(root, "meta", "order");
  for (unsigned i = 0; i < 6; ++i) {
    c.elements[i].text = get(root, "elements", kSlotNames[i]);
    c.elements[i].order = get_u64(root, "transcript", std::string("order_") + kSlotNames[i]);
    c.elements[i].class_size = get_u64(root, "transcript", std::string("class_size_") + kSlotNames[i]);
  }
  c.closure1 = get_u64(root, "transcript", "closure_1");
  c.closure2 = get_u64(root, "transcript", "closure_2");
  c.sigma1 = get_u64(root, "transcript", "sigma_1");
  c.sigma2 = get_u64(root, "transcript", "sigma_2");
  c.intersection = get_u64(root, "transcript", "sigma_intersection");
  c.coprime_orders = get_bool(root, "transcript", "coprime_orders");
  return c;
}

VerifyOutcome reverify(BeauvilleCertificate const &c, std::size_t cap)
{
  Target const t = Target::build(grp::GroupSpec::parse(c.group), c.level, cap);
  FiniteGroup const &g = *t.group;
  std::array<Index, 4> idx{};
  unsigned k = 0;
  for (unsigned i : {X1, Y1, X2, Y2})
    idx[k++] = grp::parse_element(g, c.elements[i].text);

  VerifyOutcome out = verify_structure(t, idx[0], idx[1], idx[2], idx[3]);
  if (!out.certificate)
    return out;
  BeauvilleCertificate const &fresh = *out.certificate;
  std::string mismatch;
  if (fresh.group_order != c.group_order)
    mismatch = "order";
  for (unsigned i = 0; i < 6 && mismatch.empty(); ++i)
    if (fresh.elements[i] != c.elements[i])
      mismatch = std::string("fingerprint of ") + kSlotNames[i];
  if (mismatch.empty() && (fresh.closure1 != c.closure1 || fresh.closure2 != c.closure2))
    mismatch = "closure orders";
  if (mismatch.empty() && (fresh.sigma1 != c.sigma1 || fresh.sigma2 != c.sigma2 || fresh.intersection != c.intersection))
    mismatch = "Σ counts";
  if (mismatch.empty() && fresh.coprime_orders != c.coprime_orders)
    mismatch = "coprime_orders";
  if (!mismatch.empty()) {
    out.certificate.reset();
    out.reason = "transcript mismatch: " + mismatch;
  }
  return out;
}

std::string to_string(SearchMode m)
{
  switch (m) {
  case SearchMode::Exhaustive:
    return "exhaustive";
  case SearchMode::TorusGuided:
    return "torus";
  case SearchMode::Random:
    return "random";
  }
  return "?";
}

SearchMode parse_mode(std::string_view text)
{
  if (text == "exhaustive")
    return SearchMode::Exhaustive;
  if (text == "torus")
    return SearchMode::TorusGuided;
  if (text == "random")
    return SearchMode::Random;
  throw ParseError("search mode: unknown mode '" + std::string(text) + "' (exhaustive, torus, random)");
}

std::string to_string(SearchStatus s)
{
  switch (s) {
  case SearchStatus::Found:
    return "found";
  case SearchStatus::Nonexistent:
    return "nonexistent";
  case SearchStatus::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

SearchReport search_structure(Target const &t, SearchStrategy const &s)
{
  switch (s.mode) {
  case SearchMode::Exhaustive:
    return exhaustive(t, s);
  case SearchMode::Random:
    return random_search(t, s);
  case SearchMode::TorusGuided:
    return torus_guided(t, s);
  }
  throw std::logic_error("search_structure: unknown mode");
}

std::uint64_t quad_sum_count(chars::CharacterTable const &table, std::vector<std::size_t> const &classes)
{
  for (std::size_t c : classes)
    if (c >= table.size())
      throw std::out_of_range("quad_sum_count: class index " + std::to_string(c) + " out of range");
  std::uint64_t n = 0;
  for (std::size_t i : classes)
    for (std::size_t j : classes)
      for (std::size_t k : classes)
        n += chars::frobenius_triple_count(table, i, j, k);
  return n;
}

OvercountReport maximal_overcount_bound(FiniteGroup const &g, std::vector<std::size_t> const &classes,
                                        std::size_t cap)
{
  Bits in_x(g.classes().size());
  for (std::size_t c : classes) {
    if (c >= g.classes().size())
      throw std::out_of_range("maximal_overcount_bound: class index " + std::to_string(c) + " out of range");
    in_x.set(c);
  }
  OvercountReport rep;
  for (grp::Subgroup const &m : grp::maximal_subgroups(g, cap)) {
    ++rep.maximal_subgroups;
    rep.coarse += static_cast<std::uint64_t>(m.order()) * m.order();
    std::vector<Index> xm;
    for (Index e : m.elements)
      if (in_x.test(g.class_of(e)))
        xm.push_back(e);
    for (Index x : xm)
      for (Index y : xm)
        if (in_x.test(g.class_of(g.mul(x, y))))
          ++rep.exact;
  }
  return rep;
}

} // namespace bv::beauville
