#include "filiform/deformation.hpp"

#include <algorithm>

#include "filiform/errors.hpp"

namespace filiform {

namespace {

std::string PairText(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string TripleText(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

void AddTripleFailures(VerificationReport& report, const std::string& stage, const TripleReport& t) {
  for (const auto& f : t.failures) {
    for (std::size_t k = 0; k < f.residual.size(); ++k) {
      if (!f.residual[k].is_zero()) {
        report.failures.push_back(ResidualCell{stage, {f.i, f.j, f.k}, k, f.residual[k]});
      }
    }
  }
}

std::string TripleDetail(const TripleReport& t, std::size_t total) {
  if (t.pass) return std::to_string(total) + " triples zero";
  std::string out = std::to_string(t.failures.size()) + " failing triples:";
  for (const auto& f : t.failures) out += " " + TripleText(f.i, f.j, f.k);
  return out;
}

std::size_t TripleCount(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

void validate_spec(const DeformationSpec& spec) {
  const std::size_t n = spec.base.dim();
  if (!subspace_valid(spec.ideal, n)) throw InvalidSpec("ideal indices are not distinct basis indices");
  if (spec.ideal.indices.size() + 1 != n) throw InvalidSpec("ideal is not of codimension 1");
  if (spec.outside >= n) throw InvalidSpec("outside index out of range");
  if (std::find(spec.ideal.indices.begin(), spec.ideal.indices.end(), spec.outside) !=
      spec.ideal.indices.end()) {
    throw InvalidSpec("outside vector lies in the ideal");
  }
  if (!is_ideal(spec.base, spec.ideal)) throw InvalidSpec("subspace is not an ideal");
  if (spec.derivation.size() != spec.ideal.indices.size()) {
    throw InvalidSpec("derivation size differs from ideal dimension");
  }
  if (!spec.derivation.is_diagonal()) throw InvalidSpec("derivation is not diagonal");
  if (!is_derivation(restrict_to(spec.base, spec.ideal), spec.derivation)) {
    throw InvalidSpec("matrix is not a derivation of the ideal");
  }
}

Cochain2 go_cocycle(const DeformationSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.base.dim();
  const auto& h = spec.ideal.indices;
  Params params = spec.base.params();
  params.alpha = params.alpha || spec.derivation.uses_alpha();
  Cochain2 phi(n, spec.base.name() + "_D", params);
  for (std::size_t a = 0; a < h.size(); ++a) {
    Column value(n);
    for (std::size_t l = 0; l < h.size(); ++l) value[h[l]] = spec.derivation(l, a);
    phi.set(spec.outside, h[a], std::move(value));
  }
  return phi;
}

StructureConstants deform(const StructureConstants& mu, const Cochain2& phi) {
  const std::size_t n = mu.dim();
  if (phi.dim() != n) throw DimensionMismatch("deform dimensions differ");
  Params params = mu.params();
  params.t = true;
  params.alpha = params.alpha || phi.params().alpha;
  StructureConstants out(n, mu.name() + "_t", params);
  const Scalar t = Scalar::T();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, mu.stored(i, j) + t * phi.stored(i, j));
  }
  return out;
}

bool VerificationReport::pass() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.pass; });
}

const StageResult* VerificationReport::find(const std::string& stage) const {
  for (const auto& s : stages) {
    if (s.stage == stage) return &s;
  }
  return nullptr;
}

void VerificationReport::add(std::string stage, bool ok, std::string detail) {
  stages.push_back(StageResult{std::move(stage), ok, std::move(detail)});
}

VerificationReport verify_degeneration(const StructureConstants& mu_t, const ScalarMatrix& g, Exec exec) {
  const std::size_t n = mu_t.dim();
  if (g.size() != n) throw DimensionMismatch("certificate size differs from algebra dimension");
  VerificationReport report;
  report.algebra = mu_t.name();
  const StructureConstants mu1 = mu_t.specialize_t(Rational(1));
  std::vector<Column> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = g.column(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Column> residuals(pairs.size());
  ForEachIndex(pairs.size(), exec, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    residuals[p] = bracket_eval(mu1, images[i], images[j]) - mat_apply(g, mu_t.stored(i, j));
  });
  std::string failing;
  std::size_t cells = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (IsZeroColumn(residuals[p])) continue;
    failing += " " + PairText(pairs[p].first, pairs[p].second);
    for (std::size_t k = 0; k < n; ++k) {
      if (residuals[p][k].is_zero()) continue;
      ++cells;
      report.failures.push_back(ResidualCell{"transport", {pairs[p].first, pairs[p].second}, k, residuals[p][k]});
    }
  }
  if (failing.empty()) {
    report.add("transport", true, std::to_string(pairs.size()) + " pairs zero");
  } else {
    report.add("transport", false, std::to_string(cells) + " nonzero cells in pairs" + failing);
  }
  const Scalar det = mat_det(g);
  report.add("unit-det", det.is_unit(), "det = " + det.str());
  return report;
}

bool limit_check(const StructureConstants& mu_t, const StructureConstants& mu) {
  if (mu_t.dim() != mu.dim()) throw DimensionMismatch("limit_check dimensions differ");
  for (std::size_t i = 0; i < mu_t.dim(); ++i) {
    for (std::size_t j = i + 1; j < mu_t.dim(); ++j) {
      for (const auto& s : mu_t.stored(i, j)) {
        if (s.has_negative_t()) throw NegativeExponent("bracket entry " + s.str() + " has a pole at t = 0");
      }
    }
  }
  return mu_t.specialize_t(Rational(0)) == mu;
}

SpectrumDetails block_spectrum_details(const ScalarMatrix& g, const SubspaceSpec& ideal, const ScalarMatrix& d) {
  const std::size_t n = g.size();
  if (!subspace_valid(ideal, n)) throw InvalidSpec("ideal indices invalid");
  if (d.size() != ideal.indices.size()) throw InvalidSpec("derivation size differs from ideal dimension");
  if (!d.is_diagonal()) throw InvalidSpec("derivation is not diagonal");
  std::vector<bool> inside(n, false);
  for (std::size_t i : ideal.indices) inside[i] = true;
  for (std::size_t c : ideal.indices) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!inside[r] && !g(r, c).is_zero()) {
        throw NotInvariant("g maps b_" + std::to_string(c + 1) + " outside the ideal");
      }
    }
  }
  std::vector<std::size_t> idx = ideal.indices;
  std::sort(idx.begin(), idx.end());
  // D is listed in the order of ideal.indices; match it to the sorted block.
  std::vector<Scalar> roots;
  for (std::size_t i : idx) {
    const std::size_t pos = static_cast<std::size_t>(
        std::find(ideal.indices.begin(), ideal.indices.end(), i) - ideal.indices.begin());
    const auto value = d(pos, pos).constant_value();
    if (!value || !value->is_integer()) throw InvalidSpec("derivation eigenvalue is not an integer");
    roots.push_back(Scalar::Monomial(Rational(1), static_cast<int>(value->numerator().get_si())));
  }
  SpectrumDetails out;
  const ScalarMatrix block = g.submatrix(idx);
  out.block_char_poly = mat_char_poly(block);
  out.expected = UniPoly::FromRoots(roots);
  out.pass = out.block_char_poly == out.expected;
  bool lower = true, upper = true;
  for (std::size_t r = 0; r < block.size(); ++r) {
    for (std::size_t c = 0; c < block.size(); ++c) {
      if (block(r, c).is_zero()) continue;
      if (r < c) lower = false;
      if (r > c) upper = false;
    }
  }
  out.triangular = lower || upper;
  if (out.triangular) {
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < block.size(); ++i) diag.push_back(block(i, i));
    out.diagonal_matches = UniPoly::FromRoots(diag) == out.expected;
  }
  return out;
}

bool block_spectrum_check(const ScalarMatrix& g, const SubspaceSpec& ideal, const ScalarMatrix& d) {
  return block_spectrum_details(g, ideal, d).pass;
}

VerificationReport verify_table(const DegenerationTable& table, Exec exec) {
  VerificationReport report;
  report.algebra = table.name;
  const DeformationSpec& spec = table.spec;
  const StructureConstants& mu = spec.base;
  const std::size_t n = mu.dim();

  const TripleReport jac = jacobi_check(mu, exec);
  report.add("jacobi", jac.pass, TripleDetail(jac, TripleCount(n)));
  AddTripleFailures(report, "jacobi", jac);

  const bool ideal_ok = is_ideal(mu, spec.ideal);
  report.add("ideal", ideal_ok, ideal_ok ? "closed under bracket" : "bracket leaves the subspace");

  bool derivation_ok = false;
  std::string derivation_detail;
  try {
    derivation_ok = is_derivation(restrict_to(mu, spec.ideal), spec.derivation);
    derivation_detail = derivation_ok ? "Leibniz rule holds on the ideal" : "Leibniz rule fails";
  } catch (const Error& e) {
    derivation_detail = e.what();
  }
  report.add("derivation", derivation_ok, derivation_detail);

  Cochain2 phi;
  try {
    phi = go_cocycle(spec);
  } catch (const InvalidSpec& e) {
    report.add("cocycle", false, std::string("invalid spec: ") + e.what());
    return report;
  }
  const TripleReport coc = cocycle_check(mu, phi, exec);
  report.add("cocycle", coc.pass, TripleDetail(coc, TripleCount(n)));
  AddTripleFailures(report, "cocycle", coc);

  const TripleReport br = jacobi_check(phi, exec);
  report.add("bracket", br.pass, TripleDetail(br, TripleCount(n)));
  AddTripleFailures(report, "bracket", br);

  StructureConstants mu_t = deform(mu, phi);
  mu_t.set_name(table.name);
  const TripleReport dj = jacobi_check(mu_t, exec);
  report.add("deform", dj.pass, TripleDetail(dj, TripleCount(n)));
  AddTripleFailures(report, "deform", dj);

  bool limit_ok = false;
  std::string limit_detail;
  try {
    limit_ok = limit_check(mu_t, mu);
    limit_detail = limit_ok ? "mu_t at t=0 equals mu" : "mu_t at t=0 differs from mu";
  } catch (const NegativeExponent& e) {
    limit_detail = e.what();
  }
  report.add("limit", limit_ok, limit_detail);

  VerificationReport eq = verify_degeneration(mu_t, table.g, exec);
  for (auto& s : eq.stages) report.stages.push_back(std::move(s));
  for (auto& f : eq.failures) report.failures.push_back(std::move(f));

  // Same identity, second formulation: g^-1 . mu_1 against mu_t entrywise.
  const StageResult* unit = report.find("unit-det");
  if (unit != nullptr && unit->pass) {
    const StructureConstants moved = base_change(mu_t.specialize_t(Rational(1)), table.g, exec);
    const bool same = moved == mu_t;
    const bool agree = same == report.find("transport")->pass;
    report.add("base-change", same && agree,
               std::string(same ? "g^-1 . mu_1 equals mu_t" : "g^-1 . mu_1 differs from mu_t") +
                   (agree ? "" : "; disagrees with transport"));
  } else {
    report.add("base-change", false, "skipped: determinant is not a unit");
  }

  try {
    const ScalarMatrix& printed = table.printed.size() == 0 ? table.g : table.printed;
    const SpectrumDetails sd = block_spectrum_details(printed, spec.ideal, spec.derivation);
    std::string detail = sd.triangular ? "triangular block" : "non-triangular block";
    if (sd.triangular) detail += sd.diagonal_matches ? ", diagonal agrees" : ", diagonal disagrees";
    detail += "; char poly " + std::string(sd.pass ? "matches" : "differs from") + " prod(x - t^d)";
    report.add("spectrum", sd.pass && (!sd.triangular || sd.diagonal_matches), detail);
  } catch (const Error& e) {
    report.add("spectrum", false, e.what());
  }
  return report;
}

DeformationSpec counterexample_spec(const DeformationSpec& mu17_spec) {
  DeformationSpec spec = mu17_spec;
  const std::size_t m = spec.ideal.indices.size();
  std::vector<Scalar> diag(m, Scalar(1));
  diag[0] = Scalar();
  spec.derivation = ScalarMatrix::Diagonal(diag);
  return spec;
}

}  // namespace filiform
