#include "filiform/lie.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "filiform/errors.hpp"

namespace filiform {

StructureConstants::StructureConstants(std::size_t n, std::string name, Params params)
    : n_(n), name_(std::move(name)), params_(params), c_(n * (n > 0 ? n - 1 : 0) / 2, Column(n)) {}

std::size_t StructureConstants::PairIndex(std::size_t i, std::size_t j) const {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Column StructureConstants::bracket(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionMismatch("basis index out of range");
  if (i == j) return Column(n_);
  if (i < j) return c_[PairIndex(i, j)];
  Column out = c_[PairIndex(j, i)];
  for (auto& s : out) s = -s;
  return out;
}

void StructureConstants::set(std::size_t i, std::size_t j, Column value) {
  if (i >= n_ || j >= n_ || i == j) throw DimensionMismatch("invalid bracket pair");
  if (value.size() != n_) throw DimensionMismatch("bracket column has wrong size");
  if (i > j) {
    for (auto& s : value) s = -s;
    std::swap(i, j);
  }
  c_[PairIndex(i, j)] = std::move(value);
}

bool StructureConstants::entries_within_params() const {
  for (const auto& col : c_) {
    for (const auto& s : col) {
      if (s.uses_t() && !params_.t) return false;
      if (s.uses_alpha() && !params_.alpha) return false;
    }
  }
  return true;
}

bool StructureConstants::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Column& c) { return IsZeroColumn(c); });
}

StructureConstants StructureConstants::specialize_t(const Rational& t0) const {
  StructureConstants out(n_, name_, Params{false, params_.alpha});
  for (std::size_t p = 0; p < c_.size(); ++p) {
    for (std::size_t k = 0; k < n_; ++k) out.c_[p][k] = c_[p][k].specialize_t(t0);
  }
  return out;
}

StructureConstants StructureConstants::specialize_alpha(const Rational& alpha0) const {
  StructureConstants out(n_, name_, Params{params_.t, false});
  for (std::size_t p = 0; p < c_.size(); ++p) {
    for (std::size_t k = 0; k < n_; ++k) out.c_[p][k] = c_[p][k].specialize_alpha(alpha0);
  }
  return out;
}

bool subspace_valid(const SubspaceSpec& h, std::size_t n) {
  std::set<std::size_t> seen;
  for (std::size_t i : h.indices) {
    if (i >= n || !seen.insert(i).second) return false;
  }
  return true;
}

Column bracket_eval(const StructureConstants& mu, const Column& x, const Column& y) {
  const std::size_t n = mu.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket_eval operand size");
  Column out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar w;
      if (!x[i].is_zero() && !y[j].is_zero()) w += x[i] * y[j];
      if (!x[j].is_zero() && !y[i].is_zero()) w -= x[j] * y[i];
      if (w.is_zero()) continue;
      const Column& c = mu.stored(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

namespace {

std::vector<std::array<std::size_t, 3>> Triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

// [x, b_k] without building the basis column.
Column BracketWithBasis(const StructureConstants& mu, const Column& x, std::size_t k) {
  Column out(mu.dim());
  for (std::size_t l = 0; l < mu.dim(); ++l) {
    if (x[l].is_zero() || l == k) continue;
    const Column c = mu.bracket(l, k);
    for (std::size_t m = 0; m < mu.dim(); ++m) {
      if (!c[m].is_zero()) out[m] += x[l] * c[m];
    }
  }
  return out;
}

TripleReport CollectTriples(std::size_t n, Exec exec,
                            const std::function<Column(std::size_t, std::size_t, std::size_t)>& f) {
  const auto triples = Triples(n);
  std::vector<Column> residuals(triples.size());
  ForEachIndex(triples.size(), exec, [&](std::size_t idx) {
    const auto& [i, j, k] = triples[idx];
    residuals[idx] = f(i, j, k);
  });
  TripleReport report;
  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    if (IsZeroColumn(residuals[idx])) continue;
    report.pass = false;
    report.failures.push_back(
        TripleResidual{triples[idx][0], triples[idx][1], triples[idx][2], std::move(residuals[idx])});
  }
  return report;
}

}  // namespace

TripleReport jacobi_check(const StructureConstants& mu, Exec exec) {
  return CollectTriples(mu.dim(), exec, [&](std::size_t i, std::size_t j, std::size_t k) {
    return BracketWithBasis(mu, mu.bracket(i, j), k) + BracketWithBasis(mu, mu.bracket(j, k), i) +
           BracketWithBasis(mu, mu.bracket(k, i), j);
  });
}

TripleReport cocycle_check(const StructureConstants& mu, const Cochain2& phi, Exec exec) {
  if (mu.dim() != phi.dim()) throw DimensionMismatch("cocycle_check dimensions differ");
  return CollectTriples(mu.dim(), exec, [&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<std::array<std::size_t, 3>, 3> cyc = {{{i, j, k}, {j, k, i}, {k, i, j}}};
    Column out(mu.dim());
    for (const auto& [a, b, c] : cyc) {
      out = out + BracketWithBasis(mu, phi.bracket(a, b), c) + BracketWithBasis(phi, mu.bracket(a, b), c);
    }
    return out;
  });
}

bool lie_bracket_check(const Cochain2& phi) { return jacobi_check(phi, Exec::kSerial).pass; }

StructureConstants base_change(const StructureConstants& mu, const ScalarMatrix& g, Exec exec) {
  const std::size_t n = mu.dim();
  if (g.size() != n) throw DimensionMismatch("base_change matrix size");
  const ScalarMatrix ginv = mat_inverse_unit(g);
  Params params = mu.params();
  params.t = params.t || g.uses_t();
  params.alpha = params.alpha || g.uses_alpha();
  StructureConstants out(n, mu.name(), params);
  std::vector<Column> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = g.column(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Column> values(pairs.size());
  ForEachIndex(pairs.size(), exec, [&](std::size_t p) {
    values[p] = mat_apply(ginv, bracket_eval(mu, images[pairs[p].first], images[pairs[p].second]));
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) out.set(pairs[p].first, pairs[p].second, std::move(values[p]));
  return out;
}

bool is_ideal(const StructureConstants& mu, const SubspaceSpec& h) {
  const std::size_t n = mu.dim();
  if (!subspace_valid(h, n)) return false;
  std::vector<bool> inside(n, false);
  for (std::size_t i : h.indices) inside[i] = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z : h.indices) {
      const Column c = mu.bracket(x, z);
      for (std::size_t k = 0; k < n; ++k) {
        if (!inside[k] && !c[k].is_zero()) return false;
      }
    }
  }
  return true;
}

StructureConstants restrict_to(const StructureConstants& mu, const SubspaceSpec& h) {
  if (!subspace_valid(h, mu.dim())) throw InvalidSpec("subspace indices invalid");
  const std::size_t m = h.indices.size();
  StructureConstants out(m, mu.name(), mu.params());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Column c = mu.bracket(h.indices[a], h.indices[b]);
      Column local(m);
      std::size_t used = 0;
      for (std::size_t l = 0; l < m; ++l) {
        local[l] = c[h.indices[l]];
        if (!local[l].is_zero()) ++used;
      }
      const auto nonzero = std::count_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
      if (static_cast<std::size_t>(nonzero) != used) throw InvalidSpec("subspace is not a subalgebra");
      out.set(a, b, std::move(local));
    }
  }
  return out;
}

bool is_derivation(const StructureConstants& mu, const ScalarMatrix& d) {
  const std::size_t n = mu.dim();
  if (d.size() != n) throw DimensionMismatch("derivation matrix size");
  std::vector<Column> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = d.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Column lhs = mat_apply(d, mu.stored(i, j));
      const Column rhs = bracket_eval(mu, images[i], BasisColumn(n, j)) +
                         bracket_eval(mu, BasisColumn(n, i), images[j]);
      if (!IsZeroColumn(lhs - rhs)) return false;
    }
  }
  return true;
}

}  // namespace filiform
