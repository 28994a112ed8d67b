#include "grp/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "common/errors.hpp"

namespace bv::grp {

Matrix Matrix::identity(unsigned n)
{
  Matrix m{n, std::vector<gf::Elem>(std::size_t{n} * n, 0)};
  for (unsigned i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix mat_mul(gf::Field const &f, Matrix const &x, Matrix const &y)
{
  if (x.n != y.n)
    throw std::invalid_argument("mat_mul: dimension mismatch");
  unsigned const n = x.n;
  Matrix r{n, std::vector<gf::Elem>(std::size_t{n} * n, 0)};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      gf::Elem const xik = x(i, k);
      if (!xik)
        continue;
      for (unsigned j = 0; j < n; ++j)
        r(i, j) = f.add(r(i, j), f.mul(xik, y(k, j)));
    }
  return r;
}

gf::Elem determinant(gf::Field const &f, Matrix m)
{
  unsigned const n = m.n;
  gf::Elem det = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && m(piv, c) == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    gf::Elem const inv = f.inv(m(c, c));
    for (unsigned i = c + 1; i < n; ++i) {
      gf::Elem const factor = f.mul(m(i, c), inv);
      if (!factor)
        continue;
      for (unsigned j = c; j < n; ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

gf::FqPoly characteristic_polynomial(gf::FieldPtr const &fp, Matrix h)
{
  gf::Field const &f = *fp;
  unsigned const n = h.n;

  // Reduce to upper Hessenberg form by similarity transforms.
  for (unsigned c = 0; c + 2 <= n; ++c) {
    unsigned piv = c + 1;
    while (piv < n && h(piv, c) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != c + 1) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(h(piv, j), h(c + 1, j));
      for (unsigned i = 0; i < n; ++i)
        std::swap(h(i, piv), h(i, c + 1));
    }
    gf::Elem const inv = f.inv(h(c + 1, c));
    for (unsigned i = c + 2; i < n; ++i) {
      gf::Elem const factor = f.mul(h(i, c), inv);
      if (!factor)
        continue;
      for (unsigned j = 0; j < n; ++j)
        h(i, j) = f.sub(h(i, j), f.mul(factor, h(c + 1, j)));
      for (unsigned r = 0; r < n; ++r)
        h(r, c + 1) = f.add(h(r, c + 1), f.mul(factor, h(r, i)));
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<gf::FqPoly> p;
  p.emplace_back(fp, std::vector<gf::Elem>{1});
  for (unsigned k = 0; k < n; ++k) {
    gf::FqPoly next = gf::FqPoly::linear(fp, h(k, k)) * p[k];
    gf::Elem prod = 1;
    for (unsigned i = k; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (!prod)
        break;
      gf::Elem const coef = f.mul(h(i, k), prod);
      if (coef)
        next = next - gf::FqPoly(fp, {coef}) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Matrix companion(gf::FqPoly const &monic_poly)
{
  auto const &f = *monic_poly.field();
  int const deg = monic_poly.degree();
  if (deg < 1 || monic_poly.coeffs().back() != 1)
    throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
  unsigned const n = static_cast<unsigned>(deg);
  Matrix m{n, std::vector<gf::Elem>(std::size_t{n} * n, 0)};
  for (unsigned i = 0; i + 1 < n; ++i)
    m(i, i + 1) = 1;
  for (unsigned j = 0; j < n; ++j)
    m(n - 1, j) = f.neg(monic_poly.coeff(j));
  return m;
}

Matrix direct_sum(Matrix const &x, Matrix const &y)
{
  unsigned const n = x.n + y.n;
  Matrix m{n, std::vector<gf::Elem>(std::size_t{n} * n, 0)};
  for (unsigned i = 0; i < x.n; ++i)
    for (unsigned j = 0; j < x.n; ++j)
      m(i, j) = x(i, j);
  for (unsigned i = 0; i < y.n; ++i)
    for (unsigned j = 0; j < y.n; ++j)
      m(x.n + i, x.n + j) = y(i, j);
  return m;
}

Matrix entrywise_pow(gf::Field const &f, Matrix const &m, std::uint64_t power)
{
  Matrix r = m;
  for (auto &v : r.a)
    v = f.pow(v, power);
  return r;
}

Matrix transpose(Matrix const &m)
{
  Matrix r = m;
  for (unsigned i = 0; i < m.n; ++i)
    for (unsigned j = 0; j < m.n; ++j)
      r(i, j) = m(j, i);
  return r;
}

std::string format_matrix(Matrix const &m)
{
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < m.n; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < m.n; ++j)
      os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix parse_matrix(std::string_view text, gf::Field const &f)
{
  std::vector<std::vector<gf::Elem>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("matrix notation: expected '") + c + "' at '" +
                       std::string(text.substr(std::min(i, text.size()))) + "'");
    ++i;
  };

  expect('[');
  for (;;) {
    expect('[');
    std::vector<gf::Elem> row;
    for (;;) {
      skip();
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw ParseError("matrix notation: bad entry at '" + std::string(text.substr(i)) + "'");
      unsigned long const v = std::stoul(std::string(text.substr(i, j - i)));
      if (v >= f.q())
        throw ParseError("matrix notation: entry '" + std::to_string(v) + "' not in " + f.name());
      row.push_back(static_cast<gf::Elem>(v));
      i = j;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }

  unsigned const n = static_cast<unsigned>(rows.size());
  Matrix m{n, {}};
  for (auto const &row : rows) {
    if (row.size() != n)
      throw ParseError("matrix notation: matrix is not square");
    m.a.insert(m.a.end(), row.begin(), row.end());
  }
  return m;
}

MatrixAction::MatrixAction(gf::FieldPtr field, unsigned n, bool projective)
: field_(std::move(field)), n_(n), projective_(projective), vector_count_(1)
{
  for (unsigned i = 0; i < n; ++i) {
    vector_count_ *= field_->q();
    if (vector_count_ > 65536)
      throw CapExceeded("matrix action: " + std::to_string(field_->q()) + "^" + std::to_string(n) +
                        " vectors exceed the permutation degree cap 65536");
  }
  if (projective_) {
    point_index_.assign(vector_count_, -1);
    for (std::uint64_t v = 1; v < vector_count_; ++v) {
      auto const vec = decode(v);
      unsigned k = 0;
      while (vec[k] == 0)
        ++k;
      if (vec[k] == 1) {
        point_index_[v] = static_cast<std::int32_t>(points_.size());
        points_.push_back(v);
      }
    }
  }
}

std::vector<gf::Elem> MatrixAction::decode(std::uint64_t v) const
{
  std::vector<gf::Elem> out(n_);
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = static_cast<gf::Elem>(v % field_->q());
    v /= field_->q();
  }
  return out;
}

std::uint64_t MatrixAction::encode(std::vector<gf::Elem> const &v) const
{
  std::uint64_t out = 0;
  for (unsigned i = n_; i-- > 0;)
    out = out * field_->q() + v[i];
  return out;
}

std::uint64_t MatrixAction::normalize(std::vector<gf::Elem> v) const
{
  unsigned k = 0;
  while (k < n_ && v[k] == 0)
    ++k;
  if (k == n_)
    throw std::logic_error("projective action: zero vector");
  gf::Elem const inv = field_->inv(v[k]);
  for (auto &x : v)
    x = field_->mul(x, inv);
  return encode(v);
}

Perm MatrixAction::perm_of(Matrix const &m) const
{
  if (m.n != n_)
    throw std::invalid_argument("MatrixAction: matrix dimension mismatch");
  gf::Field const &f = *field_;

  auto image = [&](std::vector<gf::Elem> const &v) {
    std::vector<gf::Elem> w(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (!v[i])
        continue;
      for (unsigned j = 0; j < n_; ++j)
        w[j] = f.add(w[j], f.mul(v[i], m(i, j)));
    }
    return w;
  };

  std::vector<Point> images(degree());
  if (projective_) {
    for (std::size_t k = 0; k < points_.size(); ++k) {
      auto const w = image(decode(points_[k]));
      images[k] = static_cast<Point>(point_index_[normalize(w)]);
    }
  } else {
    for (std::uint64_t v = 0; v < vector_count_; ++v)
      images[v] = static_cast<Point>(encode(image(decode(v))));
  }
  return Perm(std::move(images));
}

Matrix MatrixAction::matrix_of(Perm const &p) const
{
  if (projective_)
    throw std::logic_error("MatrixAction::matrix_of: projective action has no unique matrix");
  Matrix m{n_, std::vector<gf::Elem>(std::size_t{n_} * n_, 0)};
  std::uint64_t basis = 1;
  for (unsigned i = 0; i < n_; ++i) {
    auto const row = decode(p[basis]);
    for (unsigned j = 0; j < n_; ++j)
      m(i, j) = row[j];
    basis *= field_->q();
  }
  return m;
}

} // namespace bv::grp
