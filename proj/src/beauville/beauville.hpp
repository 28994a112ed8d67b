#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chars/chartable.hpp"
#include "grp/spec.hpp"

namespace bv::beauville {

using grp::Index;

inline constexpr char kConvention[] = "left-to-right";

/// The group a structure lives on, with the data needed to rebuild it.
struct Target
{
  grp::GroupSpec spec;
  grp::Level level = grp::Level::Quotient;
  grp::GroupPtr group;

  static Target build(grp::GroupSpec spec, grp::Level level, std::size_t cap = grp::kDefaultGroupCap);
};

struct ElementRecord
{
  std::string text;
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;

  friend bool operator==(ElementRecord const &, ElementRecord const &) = default;
};

/// Slots: x1, y1, x1y1, x2, y2, x2y2.
enum Slot : unsigned { X1, Y1, Z1, X2, Y2, Z2 };

struct BeauvilleCertificate
{
  std::string group; // canonical spec
  grp::Level level = grp::Level::Quotient;
  std::uint64_t group_order = 0;
  std::array<ElementRecord, 6> elements;

  std::uint64_t closure1 = 0, closure2 = 0;
  std::uint64_t sigma1 = 0, sigma2 = 0; // element counts
  std::uint64_t intersection = 0;
  bool coprime_orders = false; // the six orders split into two coprime sets

  friend bool operator==(BeauvilleCertificate const &, BeauvilleCertificate const &) = default;
};

struct VerifyOutcome
{
  std::optional<BeauvilleCertificate> certificate;
  std::string reason; // first failing condition when refused
};

VerifyOutcome verify_structure(Target const &t, Index x1, Index y1, Index x2, Index y2);

/// Canonical sectioned text: [meta], [elements], [transcript].
std::string serialize(BeauvilleCertificate const &c);
/// Throws ParseError naming the missing or malformed key.
BeauvilleCertificate parse_certificate(std::string const &text);
/// Rebuilds the group from the certificate alone, re-runs verify_structure
/// and compares every transcript field.
VerifyOutcome reverify(BeauvilleCertificate const &c, std::size_t cap = grp::kDefaultGroupCap);

enum class SearchMode { Exhaustive, TorusGuided, Random };
std::string to_string(SearchMode m);
SearchMode parse_mode(std::string_view text);

struct SearchStrategy
{
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000; // candidate pairs
  unsigned threads = 1;
};

enum class SearchStatus { Found, Nonexistent, Inconclusive };
std::string to_string(SearchStatus s);

struct SearchReport
{
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<BeauvilleCertificate> certificate;
  std::string note;
  std::uint64_t candidates = 0;       // pairs examined
  std::uint64_t generating_pairs = 0;
  std::uint64_t sigma_types = 0;      // distinct Σ class sets among generating pairs
  std::uint64_t type_pairs_checked = 0;
};

/// Exhaustive mode runs over class representatives x and C(x)-orbit
/// representatives y; running to completion without a match certifies
/// nonexistence. Torus-guided mode needs an SL or PSL spec.
SearchReport search_structure(Target const &t, SearchStrategy const &s);

/// #{(x, y, z) in X^3 : xy = z} for X a union of classes, from characters.
std::uint64_t quad_sum_count(chars::CharacterTable const &table, std::vector<std::size_t> const &classes);

struct OvercountReport
{
  std::uint64_t exact = 0;  // sum over maximal M of #{(x, y) in (X ∩ M)^2 : xy in X}
  std::uint64_t coarse = 0; // sum over maximal M of |M|^2
  std::size_t maximal_subgroups = 0;
};

OvercountReport maximal_overcount_bound(grp::FiniteGroup const &g, std::vector<std::size_t> const &classes,
                                        std::size_t cap = grp::kDefaultLatticeCap);

} // namespace bv::beauville
