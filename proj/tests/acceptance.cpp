// Acceptance run: one PASS/FAIL line per criterion, followed by the exit
// policy. Every tolerance is exact (Scalar or Rational equality); the only
// numeric bounds are the wall-clock budgets pinned below.
//
// Exit status is 0 iff each criterion's set of failing points equals its
// documented set of known failures (kKnownFailures). A known failure that
// starts passing is also a nonzero exit, so the list cannot go stale.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "filiform/algebra_file.hpp"
#include "filiform/cli.hpp"
#include "filiform/deformation.hpp"
#include "filiform/errors.hpp"
#include "filiform/invariants.hpp"
#include "random_files.hpp"
#include "support.hpp"

namespace filiform {
namespace {

using Clock = std::chrono::steady_clock;
using testing::AlphaSamples;
using testing::Shipped;
using testing::TableNames;
using testing::TSamples;

constexpr double kTableBudgetSeconds = 10.0;     // criterion 1, per table
constexpr double kPointBudgetSeconds = 1.0;      // criterion 3, per (t, alpha)
constexpr double kCharNilBudgetSeconds = 30.0;   // criterion 5, per (algebra, alpha)
constexpr int kPropertyCases = 1000;             // criterion 9
constexpr int kCayleyHamiltonCases = 200;        // criterion 9
constexpr int kRandomFiles = 200;                // criterion 9

// Points that fail for reasons analysed in the project notes: the printed
// mu08 certificate needs structural errata, and mu06 is not characteristically
// nilpotent at alpha = -1.
const std::map<int, std::set<std::string>> kKnownFailures = {
    {1, {"mu08"}},
    {5, {"mu06@alpha=-1"}},
};

struct Outcome {
  std::set<std::string> failing;
  std::string detail;
};

double Seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string Fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

std::string PointName(const std::string& name, const Rational& alpha, bool has_alpha) {
  return has_alpha ? name + "@alpha=" + alpha.str() : name;
}

StructureConstants Family(const ElaboratedAlgebra& a) { return deform(a.mu, go_cocycle(*a.spec)); }

Outcome Criterion1() {
  Outcome o;
  double worst = 0;
  for (const auto& name : TableNames()) {
    const auto start = Clock::now();
    const auto verbatim = Shipped(name);
    const VerificationReport r = verify_degeneration(Family(verbatim), *verbatim.forward_g);
    bool ok = r.find("transport")->pass;
    if (!ok) {
      // (a) localized cells, (b) admissible errata that make it pass.
      const bool localized = !r.failures.empty();
      const auto corrected = Shipped(name, ErrataMode::kCorrected);
      const bool fixed = verify_degeneration(Family(corrected), *corrected.forward_g).find("transport")->pass;
      bool admissible = !corrected.applied_errata.empty();
      for (auto c : corrected.applied_errata) admissible = admissible && c != ErratumClass::kStructural;
      ok = localized && fixed && admissible;
      o.detail += " " + name + ": " + std::to_string(r.failures.size()) + " cells localized, errata " +
                  (fixed ? "verify" : "do not verify") + (admissible ? "" : " but are structural") + ";";
    }
    const double s = Seconds(start);
    worst = std::max(worst, s);
    if (s > kTableBudgetSeconds) ok = false;
    if (!ok) o.failing.insert(name);
  }
  o.detail += " slowest table " + Fmt(worst);
  return o;
}

Outcome Criterion2() {
  Outcome o;
  for (const auto& name : TableNames()) {
    const auto a = Shipped(name);
    const auto& spec = *a.spec;
    const Cochain2 phi = go_cocycle(spec);
    const auto mu_t = deform(a.mu, phi);
    const SubspaceSpec h{{1, 2, 3, 4, 5, 6, 7}};
    const bool ok = jacobi_check(a.mu).pass && spec.ideal == h && is_ideal(a.mu, h) &&
                    is_derivation(restrict_to(a.mu, h), spec.derivation) && cocycle_check(a.mu, phi).pass &&
                    lie_bracket_check(phi) && jacobi_check(mu_t).pass && limit_check(mu_t, a.mu);
    if (!ok) o.failing.insert(name);
  }
  o.detail = " jacobi, ideal <Y2..Y8>, derivation, cocycle, bracket, deformed jacobi, limit";
  return o;
}

Outcome Criterion3() {
  Outcome o;
  double worst = 0;
  std::size_t points = 0;
  for (const auto& name : TableNames()) {
    const auto a = Shipped(name);
    const auto mu_t = Family(a);
    for (const auto& t : TSamples()) {
      for (const auto& alpha : AlphaSamples()) {
        const auto start = Clock::now();
        const auto r = RationalAlgebra::Specialize(mu_t, t, alpha);
        const SeriesProfile derived = derived_series(r), lcs = lower_central_series(r);
        const double s = Seconds(start);
        worst = std::max(worst, s);
        ++points;
        if (!reaches_zero(derived) || reaches_zero(lcs) || s > kPointBudgetSeconds) {
          o.failing.insert(name + "@t=" + t.str() + ",alpha=" + alpha.str());
        }
      }
    }
  }
  o.detail = " " + std::to_string(points) + " points, slowest " + Fmt(worst);
  return o;
}

Outcome Criterion4() {
  Outcome o;
  const SeriesProfile expected = {8, 6, 5, 4, 3, 2, 1, 0};
  for (const auto& name : TableNames()) {
    const auto a = Shipped(name);
    for (const auto& alpha : AlphaSamples()) {
      const auto r = RationalAlgebra::Specialize(a.mu, Rational(1), alpha);
      if (lower_central_series(r) != expected || center_dim(r) != 1) {
        o.failing.insert(PointName(name, alpha, a.mu.params().alpha));
      }
    }
  }
  o.detail = " lcs (8,6,5,4,3,2,1,0) and center 1 at every sampled alpha";
  return o;
}

Outcome Criterion5() {
  Outcome o;
  double worst = 0;
  for (const auto& name : TableNames()) {
    const auto a = Shipped(name);
    const bool has_alpha = a.mu.params().alpha;
    for (const auto& alpha : AlphaSamples()) {
      const auto start = Clock::now();
      const auto r = RationalAlgebra::Specialize(a.mu, Rational(1), alpha);
      const DerivationAlgebra der = derivation_algebra(r);
      bool ok = reaches_zero(derivation_lower_central_series(der));
      for (const auto& e : der.basis) ok = ok && satisfies_leibniz(r, e);
      const double s = Seconds(start);
      worst = std::max(worst, s);
      if (!ok || s > kCharNilBudgetSeconds) {
        o.failing.insert(PointName(name, alpha, has_alpha));
        o.detail += " " + PointName(name, alpha, has_alpha) + ": dim Der = " + std::to_string(der.dimension) +
                    ", Der lcs " + ProfileText(derivation_lower_central_series(der)) + ";";
      }
      if (!has_alpha) break;
    }
  }
  o.detail += " slowest " + Fmt(worst);
  return o;
}

Outcome Criterion6() {
  Outcome o;
  for (const auto& name : TableNames()) {
    const auto a = Shipped(name);
    const SpectrumDetails d = block_spectrum_details(*a.printed_g, a.spec->ideal, a.spec->derivation);
    bool ok = d.pass;
    if (d.triangular) {
      ok = ok && d.diagonal_matches;
    } else {
      // The one non-triangular table: full characteristic polynomial.
      std::vector<Scalar> roots;
      for (int e : {2, 3, 4, 5, 6, 7, 10}) roots.push_back(Scalar::Monomial(Rational(1), e));
      const std::vector<std::size_t> block = {1, 2, 3, 4, 5, 6, 7};
      ok = ok && name == "mu08" && mat_char_poly(a.printed_g->submatrix(block)) == UniPoly::FromRoots(roots);
      o.detail += " non-triangular: " + name + ";";
    }
    if (!ok) o.failing.insert(name);
  }
  return o;
}

Outcome Criterion7() {
  Outcome o;
  const auto a = Shipped("mu17");
  const Cochain2 phi = go_cocycle(counterexample_spec(*a.spec));
  const auto mu_t = deform(a.mu, phi);
  const bool valid = cocycle_check(a.mu, phi).pass && lie_bracket_check(phi) && jacobi_check(mu_t).pass &&
                     IsZeroColumn(phi.bracket(0, 1));
  if (!valid) o.failing.insert("deformation");
  std::ostringstream out, err;
  const int code = run_cli({"counterexample", "--data", testing::DataDir().string()}, out, err);
  const std::string statement =
      "deformation valid: yes; degeneration certificate: none shipped; non-existence: asserted, unverified";
  if (code != kExitPass || out.str().find(statement) == std::string::npos) o.failing.insert("cli-report");
  return o;
}

Outcome Criterion8() {
  Outcome o;
  for (const auto& name : TableNames()) {
    const Scalar det = mat_det(*Shipped(name).printed_g);
    if (!det.is_unit()) o.failing.insert(name);
    o.detail += " " + name + ":" + det.str();
  }
  return o;
}

Outcome Criterion9() {
  Outcome o;
  testing::Rng rng(9001);
  for (int k = 0; k < kPropertyCases; ++k) {
    const Scalar a = testing::RandomScalar(rng), b = testing::RandomScalar(rng), c = testing::RandomScalar(rng);
    const bool ring = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                      a * (b + c) == a * b + a * c;
    if (!ring) o.failing.insert("ring-axioms");
    const Rational t0 = testing::RandomNonzeroRational(rng), a0 = testing::RandomRational(rng);
    const bool hom = (a + b).specialize(t0, a0) == a.specialize(t0, a0) + b.specialize(t0, a0) &&
                     (a * b).specialize(t0, a0) == a.specialize(t0, a0) * b.specialize(t0, a0);
    if (!hom) o.failing.insert("specialization-homomorphism");
  }
  for (int k = 0; k < kCayleyHamiltonCases; ++k) {
    const RationalMatrix r = testing::RandomRationalMatrix(rng, 4, 4, 0.2);
    ScalarMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = Scalar(r(i, j));
    }
    if (mat_eval_poly(mat_char_poly(m), m) != ScalarMatrix(4)) o.failing.insert("cayley-hamilton");
  }
  std::size_t corpus = 0;
  for (const auto& name : corpus_names(testing::DataDir())) {
    const AlgebraFile f = testing::ShippedFile(name);
    const std::string once = serialize_algebra(f);
    const AlgebraFile again = parse_algebra(once);
    if (!(again == f) || serialize_algebra(again) != once) o.failing.insert("round-trip:" + name);
    ++corpus;
  }
  for (int k = 0; k < kRandomFiles; ++k) {
    try {
      const AlgebraFile f = parse_algebra(testing::RandomFileText(rng, k));
      const std::string once = serialize_algebra(f);
      const AlgebraFile again = parse_algebra(once);
      if (!(again == f) || serialize_algebra(again) != once) o.failing.insert("round-trip:random");
    } catch (const Error&) {
      o.failing.insert("round-trip:random-parse");
    }
  }
  o.detail = " " + std::to_string(kPropertyCases) + " ring/homomorphism cases, " + std::to_string(kCayleyHamiltonCases) +
             " Cayley-Hamilton, " + std::to_string(corpus) + " shipped + " + std::to_string(kRandomFiles) +
             " random files";
  return o;
}

std::string Join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return out.empty() ? "-" : out;
}

int Main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"degeneration certificates satisfy the transport identity", Criterion1},
      {"construction validity", Criterion2},
      {"deformed algebras solvable, not nilpotent", Criterion3},
      {"filiform profile and one-dimensional center", Criterion4},
      {"characteristic nilpotency with verified Der basis", Criterion5},
      {"block spectrum of each certificate", Criterion6},
      {"weight-zero counterexample deformation", Criterion7},
      {"unit determinants", Criterion8},
      {"kernel property suites", Criterion9},
  };
  bool policy_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.failing.insert(std::string("exception: ") + e.what());
    }
    const auto known = kKnownFailures.count(id) ? kKnownFailures.at(id) : std::set<std::string>{};
    const bool pass = o.failing.empty();
    const bool as_documented = o.failing == known;
    policy_ok = policy_ok && as_documented;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!pass) std::cout << "  failing=" << Join(o.failing);
    if (!pass && as_documented) std::cout << "  [known, documented]";
    if (!as_documented && !known.empty()) std::cout << "  [differs from known set " << Join(known) << "]";
    std::cout << "  |" << o.detail << "\n";
  }
  std::cout << "exit policy: " << (policy_ok ? "every failure matches the documented known set"
                                             : "unexpected failures or stale known-failure entries")
            << "\n";
  return policy_ok ? 0 : 1;
}

}  // namespace
}  // namespace filiform

int main() { return filiform::Main(); }
