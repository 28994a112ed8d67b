#include "grp/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "common/errors.hpp"

namespace bv::grp {

namespace {

constexpr std::uint32_t kEmpty = 0;

} // namespace

GroupPtr FiniteGroup::generate(std::vector<Perm> const &gens_in, std::size_t cap, std::string name,
                               std::shared_ptr<MatrixAction const> action)
{
  std::size_t degree = 1;
  for (auto const &g : gens_in)
    degree = std::max(degree, g.degree());
  if (action)
    degree = action->degree();
  if (cap > 65535)
    throw std::invalid_argument("group cap must stay below 65536");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->name_ = std::move(name);
  g->action_ = std::move(action);
  g->degree_ = degree;
  g->cap_ = cap;
  g->rehash(64);

  std::vector<std::vector<Point>> gens;
  for (auto const &p : gens_in) {
    Perm const q = p.padded(degree);
    gens.emplace_back(q.images().begin(), q.images().end());
  }

  std::vector<Point> buf(degree);
  for (std::size_t i = 0; i < degree; ++i)
    buf[i] = static_cast<Point>(i);
  g->insert(buf);

  // Breadth first: the element list doubles as the queue.
  for (std::size_t head = 0; head < g->order_; ++head) {
    for (auto const &s : gens) {
      Point const *x = g->images_.data() + head * degree;
      for (std::size_t i = 0; i < degree; ++i)
        buf[i] = s[x[i]];
      if (g->index_of(buf))
        continue;
      if (g->order_ >= cap)
        throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements");
      g->insert(buf);
    }
  }

  for (auto const &s : gens) {
    Index const idx = *g->index_of(s);
    if (idx != 0 && std::find(g->generators_.begin(), g->generators_.end(), idx) == g->generators_.end())
      g->generators_.push_back(idx);
  }

  g->inverse_.resize(g->order_);
  g->orders_.resize(g->order_);
  for (Index i = 0; i < g->order_; ++i) {
    auto const img = g->images(i);
    for (std::size_t k = 0; k < degree; ++k)
      buf[img[k]] = static_cast<Point>(k);
    g->inverse_[i] = *g->index_of(buf);
    g->orders_[i] = g->element(i).order();
  }

  g->build_classes();
  return g;
}

void FiniteGroup::rehash(std::size_t slots)
{
  slots_.assign(slots, kEmpty);
  std::size_t const mask = slots - 1;
  for (Index i = 0; i < order_; ++i) {
    std::size_t h = hash_images(images(i)) & mask;
    while (slots_[h] != kEmpty)
      h = (h + 1) & mask;
    slots_[h] = i + 1;
  }
}

Index FiniteGroup::insert(std::vector<Point> const &img)
{
  if (2 * (order_ + 1) > slots_.size())
    rehash(slots_.size() * 2);
  images_.insert(images_.end(), img.begin(), img.end());
  Index const idx = static_cast<Index>(order_++);
  std::size_t const mask = slots_.size() - 1;
  std::size_t h = hash_images(img) & mask;
  while (slots_[h] != kEmpty)
    h = (h + 1) & mask;
  slots_[h] = idx + 1;
  return idx;
}

std::optional<Index> FiniteGroup::index_of(std::span<Point const> img) const
{
  if (img.size() != degree_)
    return std::nullopt;
  std::size_t const mask = slots_.size() - 1;
  std::size_t h = hash_images(img) & mask;
  while (slots_[h] != kEmpty) {
    Index const cand = slots_[h] - 1;
    auto const have = images(cand);
    if (std::equal(have.begin(), have.end(), img.begin()))
      return cand;
    h = (h + 1) & mask;
  }
  return std::nullopt;
}

std::optional<Index> FiniteGroup::index_of(Perm const &p) const
{
  if (p.degree() > degree_)
    return std::nullopt;
  Perm const q = p.padded(degree_);
  return index_of(q.images());
}

Perm FiniteGroup::element(Index g) const
{
  auto const img = images(g);
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

void FiniteGroup::build_table() const
{
  std::call_once(table_once_, [this] {
    if (order_ > kCayleyTableCap)
      return;
    std::vector<std::uint16_t> t(order_ * order_);
    std::vector<Point> buf(degree_);
    for (Index a = 0; a < order_; ++a) {
      auto const x = images(a);
      for (Index b = 0; b < order_; ++b) {
        auto const y = images(b);
        for (std::size_t i = 0; i < degree_; ++i)
          buf[i] = y[x[i]];
        t[std::size_t{a} * order_ + b] = static_cast<std::uint16_t>(*index_of(buf));
      }
    }
    table_ = std::move(t);
  });
}

Index FiniteGroup::mul(Index a, Index b) const
{
  if (order_ <= kCayleyTableCap) {
    build_table();
    return table_[std::size_t{a} * order_ + b];
  }
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto const x = images(a);
  auto const y = images(b);
  for (std::size_t i = 0; i < degree_; ++i)
    buf[i] = y[x[i]];
  auto const r = index_of(buf);
  if (!r)
    throw std::logic_error("group is not closed under multiplication");
  return *r;
}

Index FiniteGroup::pow(Index g, long long k) const
{
  auto const n = static_cast<long long>(orders_[g]);
  k %= n;
  if (k < 0)
    k += n;
  Index result = 0, base = g;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const
{
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!commute(generators_[i], generators_[j]))
        return false;
  return true;
}

void FiniteGroup::build_classes()
{
  class_of_.assign(order_, UINT32_MAX);
  for (Index g = 0; g < order_; ++g) {
    if (class_of_[g] != UINT32_MAX)
      continue;
    auto const c = static_cast<std::uint32_t>(classes_.size());
    ConjClass cls{g, {g}, orders_[g]};
    class_of_[g] = c;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      Index const x = cls.members[head];
      for (Index s : generators_) {
        Index const y = conj(x, s);
        if (class_of_[y] == UINT32_MAX) {
          class_of_[y] = c;
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

std::uint32_t FiniteGroup::power_class(std::uint32_t c, long long k) const
{
  return class_of_[pow(classes_[c].representative, k)];
}

Subgroup FiniteGroup::closure(std::vector<Index> const &gens) const
{
  Subgroup h;
  h.members.resize(order_);
  h.members.set(0);
  h.elements.push_back(0);
  for (Index s : gens) {
    if (h.members.test(s))
      continue;
    h.generators.push_back(s);
    std::size_t const old = h.elements.size();
    for (std::size_t i = 0; i < old; ++i) {
      Index const y = mul(h.elements[i], s);
      if (!h.members.test(y)) {
        h.members.set(y);
        h.elements.push_back(y);
      }
    }
    for (std::size_t head = old; head < h.elements.size(); ++head) {
      Index const x = h.elements[head];
      for (Index t : h.generators) {
        Index const y = mul(x, t);
        if (!h.members.test(y)) {
          h.members.set(y);
          h.elements.push_back(y);
        }
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

Subgroup FiniteGroup::whole() const
{
  Subgroup h;
  h.members.resize(order_);
  h.members.set();
  h.elements.resize(order_);
  for (Index i = 0; i < order_; ++i)
    h.elements[i] = i;
  h.generators = generators_;
  return h;
}

Subgroup FiniteGroup::subgroup_from_elements(std::vector<Index> elements) const
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // Greedy generating set: prefer elements of large order.
  std::vector<Index> by_order = elements;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Index a, Index b) { return orders_[a] > orders_[b]; });
  Subgroup h = closure({});
  for (Index x : by_order) {
    if (h.order() == elements.size())
      break;
    if (!h.contains(x)) {
      auto gens = h.generators;
      gens.push_back(x);
      h = closure(gens);
    }
  }
  if (h.elements != elements)
    throw std::invalid_argument("subgroup_from_elements: set is not a subgroup");
  return h;
}

Bits sigma_classes(FiniteGroup const &g, Index x, Index y)
{
  Bits out(g.classes().size());
  for (Index z : {x, y, g.mul(x, y)}) {
    Index p = FiniteGroup::identity();
    for (std::uint64_t k = 0; k < g.elem_order(z); ++k) {
      out.set(g.class_of(p));
      p = g.mul(p, z);
    }
  }
  return out;
}

Bits sigma(FiniteGroup const &g, Index x, Index y)
{
  Bits const cls = sigma_classes(g, x, y);
  Bits out(g.order());
  for (auto c = cls.find_first(); c != Bits::npos; c = cls.find_next(c))
    for (Index m : g.classes()[c].members)
      out.set(m);
  return out;
}

bool is_generating_pair(FiniteGroup const &g, Index x, Index y)
{
  return g.closure({x, y}).order() == g.order();
}

Subgroup centralizer(FiniteGroup const &g, Index a)
{
  std::vector<Index> els;
  for (Index h = 0; h < g.order(); ++h)
    if (g.commute(h, a))
      els.push_back(h);
  return g.subgroup_from_elements(std::move(els));
}

Subgroup centralizer(FiniteGroup const &g, Subgroup const &sub)
{
  std::vector<Index> els;
  for (Index h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (Index s : sub.generators)
      if (!g.commute(h, s)) {
        ok = false;
        break;
      }
    if (ok)
      els.push_back(h);
  }
  return g.subgroup_from_elements(std::move(els));
}

Subgroup normalizer(FiniteGroup const &g, Subgroup const &sub)
{
  std::vector<Index> els;
  for (Index h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (Index s : sub.generators)
      if (!sub.contains(g.conj(s, h))) {
        ok = false;
        break;
      }
    if (ok)
      els.push_back(h);
  }
  return g.subgroup_from_elements(std::move(els));
}

Subgroup center(FiniteGroup const &g)
{
  return centralizer(g, g.whole());
}

bool is_abelian(FiniteGroup const &g, Subgroup const &h)
{
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (!g.commute(h.generators[i], h.generators[j]))
        return false;
  return true;
}

bool is_abstractly_regular(FiniteGroup const &g, Index a)
{
  return is_abelian(g, centralizer(g, a));
}

Bits conjugate(FiniteGroup const &g, Bits const &members, Index h)
{
  Bits out(members.size());
  for (auto x = members.find_first(); x != Bits::npos; x = members.find_next(x))
    out.set(g.conj(static_cast<Index>(x), h));
  return out;
}

Quotient quotient_by_center(GroupPtr const &g)
{
  Subgroup const z = center(*g);
  Quotient q;
  if (z.order() == 1) {
    q.group = g;
    q.projection.resize(g->order());
    for (Index i = 0; i < g->order(); ++i)
      q.projection[i] = i;
    return q;
  }

  std::vector<std::uint32_t> coset(g->order(), UINT32_MAX);
  std::vector<Index> reps;
  for (Index x = 0; x < g->order(); ++x) {
    if (coset[x] != UINT32_MAX)
      continue;
    for (Index c : z.elements)
      coset[g->mul(x, c)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }

  auto action = [&](Index x) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<Point>(coset[g->mul(reps[c], x)]);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (Index s : g->generators())
    gens.push_back(action(s));
  q.group = FiniteGroup::generate(gens, g->cap(), g->name().empty() ? "" : g->name() + "/Z");
  q.projection.resize(g->order());
  for (Index x = 0; x < g->order(); ++x) {
    if (x == reps[coset[x]])
      q.projection[x] = *q.group->index_of(action(x));
  }
  for (Index x = 0; x < g->order(); ++x)
    q.projection[x] = q.projection[reps[coset[x]]];
  return q;
}

} // namespace bv::grp
