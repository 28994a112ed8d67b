#include "chars/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "common/errors.hpp"

namespace bv::chars {

ClassMultCoeffs::ClassMultCoeffs(grp::FiniteGroup const &g)
: r_(g.classes().size()), a_(r_ * r_ * r_, 0)
{
  auto const &cls = g.classes();
  for (std::size_t k = 0; k < r_; ++k) {
    grp::Index const z = cls[k].representative;
    for (std::size_t i = 0; i < r_; ++i)
      for (grp::Index x : cls[i].members) {
        grp::Index const y = g.mul(g.inv(x), z);
        ++a_[(i * r_ + g.class_of(y)) * r_ + k];
      }
  }
}

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

double residual(CharacterTable const &t)
{
  double worst = 0;
  auto const n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Complex s = 0;
      for (std::size_t k = 0; k < t.class_sizes.size(); ++k)
        s += static_cast<double>(t.class_sizes[k]) * t.values[a][k] * std::conj(t.values[b][k]);
      s /= static_cast<double>(t.group_order);
      worst = std::max(worst, std::abs(s - Complex(a == b ? 1.0 : 0.0)));
    }
  return worst;
}

// One attempt; returns false if the random combination did not separate.
bool attempt(grp::FiniteGroup const &g, ClassMultCoeffs const &a, std::mt19937_64 &rng, CharacterTable &out)
{
  std::size_t const r = a.classes();
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<Mat> m(r, Mat::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
  Mat combo = Mat::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        m[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = static_cast<double>(a(i, j, k));
    combo += coef(rng) * m[i];
  }

  Eigen::ComplexEigenSolver<Mat> solver(combo);
  if (solver.info() != Eigen::Success)
    return false;

  auto const &sizes = out.class_sizes;
  double const order = static_cast<double>(g.order());
  std::vector<std::vector<Complex>> rows;
  std::vector<std::uint64_t> degrees;
  for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(r); ++c) {
    Vec w = solver.eigenvectors().col(c);
    if (std::abs(w(0)) < 1e-12)
      return false;
    w /= w(0);
    // A genuine character gives a common eigenvector: M_i w = w_i w.
    for (std::size_t i = 0; i < r; ++i) {
      Vec const lhs = m[i] * w;
      Vec const rhs = w(static_cast<Eigen::Index>(i)) * w;
      if ((lhs - rhs).norm() > 1e-6 * (1.0 + lhs.norm()))
        return false;
    }
    double norm = 0;
    for (std::size_t k = 0; k < r; ++k)
      norm += std::norm(w(static_cast<Eigen::Index>(k))) / static_cast<double>(sizes[k]);
    double const d = std::sqrt(order / norm);
    double const rounded = std::round(d);
    if (std::abs(d - rounded) > 1e-3 || rounded < 1)
      return false;
    std::vector<Complex> row(r);
    for (std::size_t k = 0; k < r; ++k)
      row[k] = rounded * w(static_cast<Eigen::Index>(k)) / static_cast<double>(sizes[k]);
    rows.push_back(std::move(row));
    degrees.push_back(static_cast<std::uint64_t>(rounded));
  }

  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i)
    perm[i] = i;
  auto trivial = [&](std::size_t i) {
    for (auto const &v : rows[i])
      if (std::abs(v - Complex(1.0)) > 1e-6)
        return false;
    return true;
  };
  auto key = [&](std::size_t i) {
    std::vector<double> k{trivial(i) ? 0.0 : 1.0, static_cast<double>(degrees[i])};
    for (auto const &v : rows[i]) {
      k.push_back(-std::round(v.real() * 1e6));
      k.push_back(-std::round(v.imag() * 1e6));
    }
    return k;
  };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });

  out.values.clear();
  out.degrees.clear();
  for (std::size_t i : perm) {
    out.values.push_back(rows[i]);
    out.degrees.push_back(degrees[i]);
  }
  return true;
}

} // namespace

CharacterTable character_table(grp::FiniteGroup const &g, std::uint64_t seed)
{
  CharacterTable t;
  t.group_order = g.order();
  t.seed = seed;
  for (auto const &c : g.classes()) {
    t.class_sizes.push_back(c.size());
    t.class_orders.push_back(c.element_order);
  }
  ClassMultCoeffs const a(g);
  std::mt19937_64 rng(seed);
  for (unsigned k = 1; k <= kMaxTableAttempts; ++k) {
    t.attempts = k;
    if (!attempt(g, a, rng, t))
      continue;
    t.orthogonality_residual = residual(t);
    std::uint64_t sum = 0;
    for (auto d : t.degrees)
      sum += d * d;
    if (sum == t.group_order && t.orthogonality_residual < 1e-8)
      return t;
  }
  throw NumericalError("character table: no separating class-matrix combination after " +
                       std::to_string(kMaxTableAttempts) + " attempts (seed " + std::to_string(seed) + ")");
}

void validate(CharacterTable const &t)
{
  std::uint64_t sum = 0;
  for (auto d : t.degrees)
    sum += d * d;
  if (sum != t.group_order)
    throw NumericalError("character table: squared degrees sum to " + std::to_string(sum) + ", not " +
                         std::to_string(t.group_order));
  if (t.size() != t.class_sizes.size())
    throw NumericalError("character table: " + std::to_string(t.size()) + " characters for " +
                         std::to_string(t.class_sizes.size()) + " classes");
  double const res = residual(t);
  if (res >= 1e-8)
    throw NumericalError("character table: orthogonality residual " + std::to_string(res));
}

std::uint64_t frobenius_triple_count(CharacterTable const &t, std::size_t i, std::size_t j, std::size_t k)
{
  std::size_t const r = t.class_sizes.size();
  if (i >= r || j >= r || k >= r)
    throw std::out_of_range("frobenius_triple_count: class index out of range");
  Complex sum = 0;
  for (std::size_t c = 0; c < t.size(); ++c)
    sum += t.values[c][i] * t.values[c][j] * std::conj(t.values[c][k]) / static_cast<double>(t.degrees[c]);
  double const scale = static_cast<double>(t.class_sizes[i]) * static_cast<double>(t.class_sizes[j]) *
                       static_cast<double>(t.class_sizes[k]) / static_cast<double>(t.group_order);
  Complex const n = scale * sum;
  double const rounded = std::round(n.real());
  if (std::abs(n - Complex(rounded)) > 1e-3 || rounded < 0)
    throw NumericalError("frobenius_triple_count: value " + std::to_string(n.real()) + "+" +
                         std::to_string(n.imag()) + "i is not within 1e-3 of an integer");
  return static_cast<std::uint64_t>(rounded);
}

double character_zeta(CharacterTable const &t, double s)
{
  double sum = 0;
  for (std::size_t c = 1; c < t.size(); ++c)
    sum += std::pow(static_cast<double>(t.degrees[c]), -s);
  return sum;
}

std::uint64_t min_nontrivial_degree(CharacterTable const &t)
{
  if (t.size() < 2)
    throw std::invalid_argument("min_nontrivial_degree: the trivial group has no nontrivial character");
  return *std::min_element(t.degrees.begin() + 1, t.degrees.end());
}

void write_table(std::ostream &os, CharacterTable const &t)
{
  auto list = [&](char const *name, std::vector<std::uint64_t> const &v) {
    os << name;
    for (auto x : v)
      os << ' ' << x;
    os << '\n';
  };
  os << "order " << t.group_order << '\n';
  os << "seed " << t.seed << '\n';
  list("sizes", t.class_sizes);
  list("orders", t.class_orders);
  list("degrees", t.degrees);
  os << std::setprecision(17);
  for (auto const &row : t.values) {
    os << "row";
    for (auto const &v : row)
      os << ' ' << v.real() << ',' << v.imag();
    os << '\n';
  }
}

CharacterTable read_table(std::istream &is)
{
  CharacterTable t;
  std::string line;
  auto read_list = [](std::istringstream &in, std::vector<std::uint64_t> &v) {
    std::uint64_t x;
    while (in >> x)
      v.push_back(x);
  };
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream in(line);
    std::string key;
    in >> key;
    if (key == "order")
      in >> t.group_order;
    else if (key == "seed")
      in >> t.seed;
    else if (key == "sizes")
      read_list(in, t.class_sizes);
    else if (key == "orders")
      read_list(in, t.class_orders);
    else if (key == "degrees")
      read_list(in, t.degrees);
    else if (key == "row") {
      std::vector<Complex> row;
      std::string pair;
      while (in >> pair) {
        auto const comma = pair.find(',');
        if (comma == std::string::npos)
          throw ParseError("character table: bad value '" + pair + "'");
        try {
          row.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
        } catch (std::logic_error const &) {
          throw ParseError("character table: bad value '" + pair + "'");
        }
      }
      t.values.push_back(std::move(row));
    } else {
      throw ParseError("character table: unknown key '" + key + "'");
    }
  }
  for (auto const &row : t.values)
    if (row.size() != t.class_sizes.size())
      throw ParseError("character table: row length does not match the class count");
  if (t.values.size() != t.degrees.size())
    throw ParseError("character table: row count does not match the degree list");
  t.orthogonality_residual = residual(t);
  return t;
}

} // namespace bv::chars
