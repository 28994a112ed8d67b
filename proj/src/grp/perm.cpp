#include "grp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "common/errors.hpp"
#include "exactmath/numtheory.hpp"

namespace bv::grp {

Perm::Perm(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree)
{
  std::vector<Point> v(degree);
  std::iota(v.begin(), v.end(), Point{0});
  Perm p;
  p.images_ = std::move(v);
  return p;
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("cycle notation: unexpected token '" + std::string(text.substr(i, 1)) + "'");
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("cycle notation: unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i) {
        std::size_t k = i;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k])) && text[k] != ',' && text[k] != ')')
          ++k;
        throw ParseError("cycle notation: bad point '" + std::string(text.substr(i, std::max<std::size_t>(k - i, 1))) + "'");
      }
      std::size_t const pt = std::stoul(std::string(text.substr(i, j - i)));
      if (pt == 0 || pt > 65535)
        throw ParseError("cycle notation: point '" + std::string(text.substr(i, j - i)) + "' out of range");
      cyc.push_back(pt - 1);
      max_point = std::max(max_point, pt);
      i = j;
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }

  if (degree == 0)
    degree = max_point;
  if (max_point > degree)
    throw ParseError("cycle notation: point " + std::to_string(max_point) + " exceeds degree " + std::to_string(degree));

  Perm result = identity(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]])
        throw ParseError("cycle notation: point " + std::to_string(cyc[k] + 1) + " repeated");
      used[cyc[k]] = true;
      result.images_[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    }
  }
  return result;
}

Perm Perm::inverse() const
{
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::uint64_t Perm::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = ord / exactmath::gcd_u64(ord, len) * len;
  }
  return ord;
}

Perm Perm::padded(std::size_t degree) const
{
  if (degree < images_.size())
    throw std::invalid_argument("Perm::padded: degree too small");
  Perm r = identity(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::string Perm::to_cycles() const
{
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm operator*(Perm const &s, Perm const &t)
{
  if (s.degree() != t.degree())
    throw std::invalid_argument("Perm product: degree mismatch");
  Perm r;
  r.images_.resize(s.images_.size());
  for (std::size_t i = 0; i < s.images_.size(); ++i)
    r.images_[i] = t.images_[s.images_[i]];
  return r;
}

std::uint64_t hash_images(std::span<Point const> images)
{
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images) {
    h ^= p;
    h *= 1099511628211ull;
  }
  // FNV leaves low bits weakly mixed; finish with a splitmix step.
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

} // namespace bv::grp
