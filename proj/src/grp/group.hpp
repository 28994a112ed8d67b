#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grp/matrix.hpp"
#include "grp/perm.hpp"

namespace bv::grp {

using Index = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultGroupCap = 20000;
inline constexpr std::size_t kDefaultLatticeCap = 2000;
/// Groups up to this order get a precomputed multiplication table.
inline constexpr std::size_t kCayleyTableCap = 6000;

/// A subgroup as a membership mask over the ambient enumeration.
struct Subgroup
{
  Bits members;
  std::vector<Index> elements; // ascending
  std::vector<Index> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Index g) const { return members.test(g); }
  friend bool operator==(Subgroup const &a, Subgroup const &b) { return a.members == b.members; }
};

struct ConjClass
{
  Index representative; // earliest member in enumeration order
  std::vector<Index> members;
  std::uint64_t element_order;

  std::size_t size() const { return members.size(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

/// Fully enumerated permutation group. Matrix groups are carried as their
/// permutation action; `action()` then recovers matrices.
class FiniteGroup
{
public:
  /// Breadth-first closure; element 0 is the identity and the order is
  /// insertion order. Throws CapExceeded past `cap` elements.
  static GroupPtr generate(std::vector<Perm> const &gens, std::size_t cap = kDefaultGroupCap,
                           std::string name = {}, std::shared_ptr<MatrixAction const> action = {});

  std::string const &name() const { return name_; }
  std::shared_ptr<MatrixAction const> const &action() const { return action_; }
  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  std::size_t cap() const { return cap_; }

  std::span<Point const> images(Index g) const
  { return {images_.data() + std::size_t{g} * degree_, degree_}; }
  Perm element(Index g) const;
  std::optional<Index> index_of(std::span<Point const> images) const;
  std::optional<Index> index_of(Perm const &p) const;

  static constexpr Index identity() { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index g) const { return inverse_[g]; }
  /// h^-1 g h
  Index conj(Index g, Index h) const { return mul(mul(inverse_[h], g), h); }
  Index pow(Index g, long long k) const;
  std::uint64_t elem_order(Index g) const { return orders_[g]; }
  bool commute(Index a, Index b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  std::vector<Index> const &generators() const { return generators_; }

  /// Smallest subgroup containing `gens`.
  Subgroup closure(std::vector<Index> const &gens) const;
  Subgroup whole() const;
  Subgroup trivial() const { return closure({}); }
  /// Subgroup from an explicit, already closed element list.
  Subgroup subgroup_from_elements(std::vector<Index> elements) const;

  std::vector<ConjClass> const &classes() const { return classes_; }
  std::uint32_t class_of(Index g) const { return class_of_[g]; }
  /// Class of rep(c)^k.
  std::uint32_t power_class(std::uint32_t c, long long k) const;

private:
  FiniteGroup() = default;

  Index insert(std::vector<Point> const &img);
  void rehash(std::size_t slots);
  void build_classes();
  void build_table() const;

  std::string name_;
  std::shared_ptr<MatrixAction const> action_;
  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::size_t cap_ = kDefaultGroupCap;
  std::vector<Point> images_;
  std::vector<std::uint32_t> slots_; // open addressing; 0 = empty, else index + 1
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Index> generators_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
};

/// Σ(x, y): classes of all powers of x, y and xy, identity included.
/// Returned as a mask over class indices.
Bits sigma_classes(FiniteGroup const &g, Index x, Index y);
/// Same set expanded to elements.
Bits sigma(FiniteGroup const &g, Index x, Index y);

bool is_generating_pair(FiniteGroup const &g, Index x, Index y);

Subgroup centralizer(FiniteGroup const &g, Index a);
/// Centralizer of a whole subgroup.
Subgroup centralizer(FiniteGroup const &g, Subgroup const &h);
Subgroup normalizer(FiniteGroup const &g, Subgroup const &h);
Subgroup center(FiniteGroup const &g);
bool is_abelian(FiniteGroup const &g, Subgroup const &h);
bool is_abstractly_regular(FiniteGroup const &g, Index a);
/// h^-1 H h
Bits conjugate(FiniteGroup const &g, Bits const &members, Index h);

/// G / Z(G) via the action on cosets of the center, with the projection.
struct Quotient
{
  GroupPtr group;
  std::vector<Index> projection; // element of G -> element of G/Z
};
Quotient quotient_by_center(GroupPtr const &g);

} // namespace bv::grp
