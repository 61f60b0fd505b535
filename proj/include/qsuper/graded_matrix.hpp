#pragma once

// Dense matrices with parity-graded rows and columns. Entries are
// GrassmannScalar or SuperPolynomial; multiplication keeps the factor order,
// so Koszul signs between odd entries come from the entry arithmetic.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/errors.hpp"
#include "qsuper/superpoly.hpp"

namespace qsuper {

using Parities = std::vector<int>;

template <class T>
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(Parities rows, Parities cols)
      : rpar_(std::move(rows)), cpar_(std::move(cols)), data_(rpar_.size() * cpar_.size()) {}

  static GradedMatrix identity(const Parities& par) {
    GradedMatrix m(par, par);
    for (std::size_t i = 0; i < par.size(); ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rpar_.size(); }
  std::size_t cols() const { return cpar_.size(); }
  const Parities& row_parities() const { return rpar_; }
  const Parities& col_parities() const { return cpar_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Every entry at (i, j) homogeneous of parity row(i) + col(j).
  bool is_even_supermatrix() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) {
        const auto& e = (*this)(i, j);
        if (!e.is_zero() && e.parity() != ((rpar_[i] + cpar_[j]) & 1)) return false;
      }
    return true;
  }

  template <class F>
  GradedMatrix map(F&& f) const {
    GradedMatrix r(rpar_, cpar_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = f(data_[k]);
    return r;
  }

  /// First nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (!(*this)(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
  }

  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
    check_same(a, b);
    GradedMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
    check_same(a, b);
    GradedMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product of incompatible shapes");
    GradedMatrix r(a.rpar_, b.cpar_);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.rpar_ == b.rpar_ && a.cpar_ == b.cpar_ && a.data_ == b.data_;
  }

  /// Left multiplication of every entry by a scalar.
  GradedMatrix scaled(const T& c) const {
    return map([&](const T& e) { return c * e; });
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols(); ++j) out += (j ? ", " : "") + (*this)(i, j).str();
      out += "]\n";
    }
    return out;
  }

 private:
  static void check_same(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
  }

  Parities rpar_, cpar_;
  std::vector<T> data_;
};

using ScalarMatrix = GradedMatrix<GrassmannScalar>;
using PolyMatrix = GradedMatrix<SuperPolynomial>;

/// Kronecker sign conventions. Graded: (-1)^{t(k)(t(i)+t(j))}; GradedAlt:
/// (-1)^{t(j)(t(k)+t(l))}; Ungraded: no sign. Composite indices are (i,k)
/// with i outer.
enum class KronMode { Graded, GradedAlt, Ungraded };

std::string kron_mode_name(KronMode m);

inline Parities composite_parities(const Parities& a, const Parities& b) {
  Parities out;
  for (int x : a)
    for (int y : b) out.push_back((x + y) & 1);
  return out;
}

template <class T>
GradedMatrix<T> graded_kron(const GradedMatrix<T>& a, const GradedMatrix<T>& b, KronMode mode = KronMode::Graded) {
  const auto& ar = a.row_parities();
  const auto& ac = a.col_parities();
  const auto& br = b.row_parities();
  const auto& bc = b.col_parities();
  GradedMatrix<T> r(composite_parities(ar, br), composite_parities(ac, bc));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          int s = 0;
          if (mode == KronMode::Graded) s = br[k] * (ar[i] + ac[j]);
          if (mode == KronMode::GradedAlt) s = ac[j] * (br[k] + bc[l]);
          T e = a(i, j) * b(k, l);
          r(i * b.rows() + k, j * b.cols() + l) = (s & 1) ? -e : e;
        }
    }
  return r;
}

/// P_{(i,j),(k,l)} = (-1)^{t(i)t(j)} d_il d_jk; the ungraded variant drops
/// the sign.
ScalarMatrix super_permutation(const Parities& par, bool graded = true);

/// Inverse by nilpotent series when A - I is nilpotent, else Gauss-Jordan
/// with pivots of nonzero body. Throws Singular.
ScalarMatrix mat_inv(const ScalarMatrix& a);
ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b);
/// Rank after setting odd parameters to zero and evaluating the given even
/// parameters.
int mat_rank_at(const ScalarMatrix& a, const std::map<std::string, GaussRational>& point);

ScalarMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const Parities& rpar,
                          const Parities& cpar);
PolyMatrix to_poly_matrix(const ScalarMatrix& m);

}  // namespace qsuper
