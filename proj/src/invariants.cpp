#include "filiform/invariants.hpp"

#include "filiform/errors.hpp"

namespace filiform {

RationalAlgebra::RationalAlgebra(std::size_t n)
    : n_(n), c_(n * (n > 0 ? n - 1 : 0) / 2, RationalVector(n)) {}

RationalAlgebra RationalAlgebra::Specialize(const StructureConstants& mu, const Rational& t0,
                                            const Rational& alpha0) {
  RationalAlgebra a(mu.dim());
  for (std::size_t i = 0; i < mu.dim(); ++i) {
    for (std::size_t j = i + 1; j < mu.dim(); ++j) {
      const Column& c = mu.stored(i, j);
      RationalVector v(mu.dim());
      for (std::size_t k = 0; k < mu.dim(); ++k) v[k] = c[k].specialize(t0, alpha0);
      a.set(i, j, std::move(v));
    }
  }
  return a;
}

RationalVector RationalAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionMismatch("basis index out of range");
  if (i == j) return RationalVector(n_);
  const std::size_t lo = std::min(i, j), hi = std::max(i, j);
  RationalVector v = c_[lo * n_ - lo * (lo + 1) / 2 + (hi - lo - 1)];
  if (i > j) {
    for (auto& x : v) x = -x;
  }
  return v;
}

void RationalAlgebra::set(std::size_t i, std::size_t j, RationalVector value) {
  if (i >= j || j >= n_ || value.size() != n_) throw DimensionMismatch("invalid rational bracket entry");
  c_[i * n_ - i * (i + 1) / 2 + (j - i - 1)] = std::move(value);
}

RationalVector RationalAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket operand size");
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      const RationalVector& c = c_[i * n_ - i * (i + 1) / 2 + (j - i - 1)];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

namespace {

std::vector<RationalVector> StandardBasis(std::size_t n) {
  std::vector<RationalVector> out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
  return out;
}

// Basis of span{[x, y] : x in xs, y in ys}.
std::vector<RationalVector> BracketSpan(const RationalAlgebra& a, const std::vector<RationalVector>& xs,
                                        const std::vector<RationalVector>& ys, Exec exec) {
  std::vector<RationalVector> products(xs.size() * ys.size());
  ForEachIndex(products.size(), exec, [&](std::size_t p) {
    products[p] = a.bracket(xs[p / ys.size()], ys[p % ys.size()]);
  });
  if (products.empty()) return {};
  return rat_echelon(RationalMatrix::FromRows(products, a.dim()), exec).rows;
}

}  // namespace

SeriesProfile lower_central_series(const RationalAlgebra& a, Exec exec) {
  const auto basis = StandardBasis(a.dim());
  std::vector<RationalVector> current = basis;
  SeriesProfile profile = {current.size()};
  while (!current.empty()) {
    current = BracketSpan(a, basis, current, exec);
    if (current.size() == profile.back()) break;
    profile.push_back(current.size());
  }
  return profile;
}

SeriesProfile derived_series(const RationalAlgebra& a, Exec exec) {
  std::vector<RationalVector> current = StandardBasis(a.dim());
  SeriesProfile profile = {current.size()};
  while (!current.empty()) {
    current = BracketSpan(a, current, current, exec);
    if (current.size() == profile.back()) break;
    profile.push_back(current.size());
  }
  return profile;
}

bool reaches_zero(const SeriesProfile& p) { return !p.empty() && p.back() == 0; }

bool is_filiform(const RationalAlgebra& a, Exec exec) {
  const std::size_t n = a.dim();
  if (n < 2) return false;
  SeriesProfile expected = {n};
  for (std::size_t d = n - 1; d-- > 0;) expected.push_back(d);
  return lower_central_series(a, exec) == expected;
}

std::size_t center_dim(const RationalAlgebra& a, Exec exec) {
  const std::size_t n = a.dim();
  // Rows: coordinate k of [x, b_i] = sum_l x_l c_{l i}^k.
  RationalMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const RationalVector c = a.bracket(l, i);
      for (std::size_t k = 0; k < n; ++k) m(i * n + k, l) = c[k];
    }
  }
  return rat_nullspace(m, exec).size();
}

DerivationAlgebra derivation_algebra(const RationalAlgebra& a, Exec exec) {
  const std::size_t n = a.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  // Unknown E(r, c) sits at column r * n + c.
  RationalMatrix system(pairs * n, n * n);
  std::vector<std::pair<std::size_t, std::size_t>> pair_list;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
  }
  ForEachIndex(pair_list.size(), exec, [&](std::size_t p) {
    const auto [i, j] = pair_list[p];
    const RationalVector cij = a.bracket(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = p * n + k;
      // (E [b_i, b_j])_k
      for (std::size_t l = 0; l < n; ++l) system(row, k * n + l) += cij[l];
      // - [E b_i, b_j]_k - [b_i, E b_j]_k
      for (std::size_t l = 0; l < n; ++l) {
        const Rational lj = a.bracket(l, j)[k];
        if (!lj.is_zero()) system(row, l * n + i) -= lj;
        const Rational il = a.bracket(i, l)[k];
        if (!il.is_zero()) system(row, l * n + j) -= il;
      }
    }
  });
  DerivationAlgebra der;
  for (const auto& v : rat_nullspace(system, exec)) {
    RationalMatrix e(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) e(r, c) = v[r * n + c];
    }
    der.basis.push_back(std::move(e));
  }
  der.dimension = der.basis.size();
  return der;
}

bool satisfies_leibniz(const RationalAlgebra& a, const RationalMatrix& e) {
  const std::size_t n = a.dim();
  if (e.rows() != n || e.cols() != n) throw DimensionMismatch("derivation matrix size");
  auto apply = [&](const RationalVector& v) {
    RationalVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out[r] += e(r, c) * v[c];
    }
    return out;
  };
  const auto basis = StandardBasis(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const RationalVector lhs = apply(a.bracket(i, j));
      const RationalVector r1 = a.bracket(apply(basis[i]), basis[j]);
      const RationalVector r2 = a.bracket(basis[i], apply(basis[j]));
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] != r1[k] + r2[k]) return false;
      }
    }
  }
  return true;
}

SeriesProfile derivation_lower_central_series(const DerivationAlgebra& der, Exec exec) {
  if (der.basis.empty()) return {0};
  const std::size_t n = der.basis.front().rows();
  auto flatten = [n](const RationalMatrix& m) {
    RationalVector v(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m(r, c);
    }
    return v;
  };
  auto unflatten = [n](const RationalVector& v) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    }
    return m;
  };
  std::vector<RationalMatrix> current = der.basis;
  SeriesProfile profile = {current.size()};
  // The series stabilizes within dim(Der) steps.
  for (std::size_t step = 0; step <= der.dimension && !current.empty(); ++step) {
    std::vector<RationalVector> commutators(der.basis.size() * current.size());
    ForEachIndex(commutators.size(), exec, [&](std::size_t p) {
      const RationalMatrix& x = der.basis[p / current.size()];
      const RationalMatrix& y = current[p % current.size()];
      commutators[p] = flatten(x * y - y * x);
    });
    const Echelon e = rat_echelon(RationalMatrix::FromRows(commutators, n * n), exec);
    if (e.rows.size() == profile.back()) break;
    profile.push_back(e.rows.size());
    current.clear();
    for (const auto& row : e.rows) current.push_back(unflatten(row));
  }
  return profile;
}

bool is_characteristically_nilpotent(const RationalAlgebra& a, Exec exec) {
  return reaches_zero(derivation_lower_central_series(derivation_algebra(a, exec), exec));
}

std::string ProfileText(const SeriesProfile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace filiform
