#include "filiform/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

Column ZeroColumn(std::size_t n) { return Column(n); }

Column BasisColumn(std::size_t n, std::size_t i) {
  Column c(n);
  c[i] = Scalar(1);
  return c;
}

bool IsZeroColumn(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

Column operator+(const Column& a, const Column& b) {
  if (a.size() != b.size()) throw DimensionMismatch("column sizes differ");
  Column out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Column operator-(const Column& a, const Column& b) {
  if (a.size() != b.size()) throw DimensionMismatch("column sizes differ");
  Column out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Column operator*(const Scalar& s, const Column& c) {
  Column out(c.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) out[i] = s * c[i];
  }
  return out;
}

std::string ColumnText(const Column& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ", ";
    out += c[i].str();
  }
  return out + ")";
}

ScalarMatrix ScalarMatrix::Identity(std::size_t n) {
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::Diagonal(std::span<const Scalar> diagonal) {
  ScalarMatrix m(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

Column ScalarMatrix::column(std::size_t col) const {
  Column c(n_);
  for (std::size_t r = 0; r < n_; ++r) c[r] = (*this)(r, col);
  return c;
}

bool ScalarMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool ScalarMatrix::uses_t() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.uses_t(); });
}

bool ScalarMatrix::uses_alpha() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.uses_alpha(); });
}

ScalarMatrix ScalarMatrix::submatrix(std::span<const std::size_t> indices) const {
  ScalarMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices[r], indices[c]);
  }
  return out;
}

ScalarMatrix ScalarMatrix::specialize_t(const Rational& t0) const {
  ScalarMatrix out(n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].specialize_t(t0);
  return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  const std::size_t n = a.n_;
  ScalarMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

Column mat_apply(const ScalarMatrix& m, const Column& v) {
  if (m.size() != v.size()) throw DimensionMismatch("matrix/column sizes differ");
  Column out(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (!m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

UniPoly mat_char_poly(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly({Scalar(1)});
  // vect holds det(xI - A_r) for the leading r x r block, highest degree first.
  std::vector<Scalar> vect = {Scalar(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<Scalar> toeplitz(r + 2);
    toeplitz[0] = Scalar(1);
    toeplitz[1] = -m(r, r);
    Column power(r);  // A_r^k C
    for (std::size_t i = 0; i < r; ++i) power[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot;
      for (std::size_t i = 0; i < r; ++i) {
        if (!power[i].is_zero() && !m(r, i).is_zero()) dot += m(r, i) * power[i];
      }
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        Column next(r);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            if (!m(i, j).is_zero() && !power[j].is_zero()) next[i] += m(i, j) * power[j];
          }
        }
        power = std::move(next);
      }
    }
    std::vector<Scalar> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!toeplitz[i - j].is_zero() && !vect[j].is_zero()) next[i] += toeplitz[i - j] * vect[j];
      }
    }
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return UniPoly(std::move(vect));
}

Scalar mat_det(const ScalarMatrix& m) {
  const UniPoly p = mat_char_poly(m);
  const Scalar& c0 = p[0];
  return m.size() % 2 == 0 ? c0 : -c0;
}

ScalarMatrix mat_eval_poly(const UniPoly& p, const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix acc(n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p[static_cast<std::size_t>(k)];
  }
  return acc;
}

ScalarMatrix mat_inverse_unit(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  const UniPoly p = mat_char_poly(m);
  const Scalar& c0 = p[0];  // (-1)^n det
  if (!c0.is_unit()) {
    throw NotAUnit("determinant " + (n % 2 == 0 ? c0 : -c0).str() + " is not a Laurent unit");
  }
  // Cayley-Hamilton: A * q(A) = -c0 I with q(x) = (p(x) - c0) / x.
  std::vector<Scalar> q(p.coefficients().begin() + 1, p.coefficients().end());
  ScalarMatrix inv = mat_eval_poly(UniPoly(std::move(q)), m);
  const Scalar factor = -c0.unit_inverse();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!inv(r, c).is_zero()) inv(r, c) = factor * inv(r, c);
    }
  }
  return inv;
}

RationalMatrix RationalMatrix::FromRows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rational rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("rational matrix product shapes");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("rational matrix shapes");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

namespace {

// Reduced row echelon form from an echelon form with known pivots.
Echelon NormalizeEchelon(std::vector<RationalVector> rows, std::vector<std::size_t> pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational inv = rows[r][pivots[r]].inverse();
    for (auto& x : rows[r]) {
      if (!x.is_zero()) x *= inv;
    }
  }
  for (std::size_t r = rows.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      const Rational f = rows[above][pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[r]; c < rows[r].size(); ++c) {
        if (!rows[r][c].is_zero()) rows[above][c] -= f * rows[r][c];
      }
    }
  }
  return Echelon{std::move(rows), std::move(pivots)};
}

}  // namespace

Echelon rat_echelon(const RationalMatrix& m, Exec exec) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; row scaling does not change the row space.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).raw();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);
    const mpz_class pivot = a[rank][col];
    const std::vector<mpz_class>& prow = a[rank];
    const std::size_t below = rows - rank - 1;
    ForEachIndex(below, exec, [&](std::size_t offset) {
      std::vector<mpz_class>& row = a[rank + 1 + offset];
      const mpz_class lead = row[col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = pivot * row[c] - lead * prow[c];
        mpz_divexact(row[c].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    });
    previous = pivot;
    pivots.push_back(col);
    ++rank;
  }
  std::vector<RationalVector> echelon(rank, RationalVector(cols));
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) echelon[r][c] = Rational(mpq_class(a[r][c]));
  }
  return NormalizeEchelon(std::move(echelon), std::move(pivots));
}

std::vector<RationalVector> rat_nullspace(const RationalMatrix& m, Exec exec) {
  const Echelon e = rat_echelon(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols());
    x[f] = Rational(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rat_rank(const RationalMatrix& m, Exec exec) { return rat_echelon(m, exec).pivots.size(); }

namespace reference {

Echelon rat_echelon_gauss_jordan(const RationalMatrix& m) {
  std::vector<RationalVector> a(m.rows(), RationalVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[rank], a[p]);
    const Rational inv = a[rank][col].inverse();
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  a.resize(rank);
  return Echelon{std::move(a), std::move(pivots)};
}

}  // namespace reference

}  // namespace filiform
