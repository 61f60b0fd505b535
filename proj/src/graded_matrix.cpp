#include "qsuper/graded_matrix.hpp"

#include "qsuper/parse.hpp"

namespace qsuper {

std::string kron_mode_name(KronMode m) {
  switch (m) {
    case KronMode::Graded: return "graded";
    case KronMode::GradedAlt: return "graded-alt";
    case KronMode::Ungraded: return "ungraded";
  }
  return "?";
}

ScalarMatrix super_permutation(const Parities& par, bool graded) {
  const std::size_t n = par.size();
  const Parities comp = composite_parities(par, par);
  ScalarMatrix p(comp, comp);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool neg = graded && (par[i] & par[j]);
      p(i * n + j, j * n + i) = GrassmannScalar(neg ? -1 : 1);
    }
  return p;
}

ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b; }

ScalarMatrix mat_inv(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const ScalarMatrix id = ScalarMatrix::identity(a.row_parities());
  bool unipotent = true;
  for (std::size_t i = 0; i < n && unipotent; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j).body() == RationalFunction(i == j ? 1 : 0))) {
        unipotent = false;
        break;
      }
  if (unipotent) {
    // (I + N)^{-1} = sum (-N)^k, finite because N has nilpotent entries.
    ScalarMatrix minus_n = id - a;
    ScalarMatrix sum = id, term = id;
    for (std::size_t k = 0; k < 64; ++k) {
      term = term * minus_n;
      if (term.is_zero()) return sum;
      sum = sum + term;
    }
    throw Singular("nilpotent series did not terminate");
  }
  ScalarMatrix m = a, inv = id;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).body().is_zero()) ++p;
    if (p == n) throw Singular("matrix is singular at column " + std::to_string(c + 1));
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const GrassmannScalar f = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f * m(c, j);
      inv(c, j) = f * inv(c, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const GrassmannScalar g = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= g * m(c, j);
        inv(r, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

int mat_rank_at(const ScalarMatrix& a, const std::map<std::string, GaussRational>& point) {
  std::map<int, GaussRational> idx;
  for (const auto& [name, v] : point) {
    auto info = find_param(name);
    if (!info || info->parity != Parity::Even) throw UnknownSymbol("unknown even parameter '" + name + "'");
    idx.emplace(info->index, v);
  }
  std::vector<std::vector<RationalFunction>> m(a.rows(), std::vector<RationalFunction>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).body().evaluate(idx);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && m[p][c].is_zero()) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[row]);
    const RationalFunction inv = m[row][c].inverse();
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c] * inv;
      for (std::size_t j = c; j < a.cols(); ++j) m[r][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

ScalarMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const Parities& rpar,
                          const Parities& cpar) {
  if (rows.size() != rpar.size()) throw DimensionMismatch("row count does not match parities");
  ScalarMatrix m(rpar, cpar);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cpar.size()) throw DimensionMismatch("column count does not match parities");
    for (std::size_t j = 0; j < cpar.size(); ++j) m(i, j) = parse_scalar(rows[i][j]);
  }
  return m;
}

PolyMatrix to_poly_matrix(const ScalarMatrix& m) {
  PolyMatrix r(m.row_parities(), m.col_parities());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = SuperPolynomial(m(i, j));
  return r;
}

}  // namespace qsuper
