#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "filiform/algebra_file.hpp"
#include "filiform/deformation.hpp"
#include "filiform/invariants.hpp"
#include "filiform/rational.hpp"

namespace filiform {

enum class ReportFormat { kText, kMachine };

struct RunConfig {
  std::vector<std::string> names;  // empty: every file with a certificate
  std::vector<Rational> alpha_samples = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 3)};
  std::vector<Rational> t_samples = {Rational(1), Rational(2), Rational(-1)};
  ReportFormat format = ReportFormat::kText;
  ErrataMode errata = ErrataMode::kVerbatim;
  std::filesystem::path data_dir = FILIFORM_DEFAULT_DATA_DIR;
  std::filesystem::path output;  // empty: the out stream
};

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitInput = 2 };

// Invariants of mu at one alpha value.
struct BaseInvariants {
  Rational alpha;
  SeriesProfile lcs;
  SeriesProfile derived;
  bool filiform = false;
  std::size_t center = 0;
  std::size_t der_dim = 0;
  SeriesProfile der_lcs;
  bool char_nilpotent = false;
  bool der_basis_verified = false;
  bool expected() const;
};

// Invariants of mu_t at one (t, alpha) point.
struct DeformedInvariants {
  Rational t;
  Rational alpha;
  SeriesProfile lcs;
  SeriesProfile derived;
  bool solvable = false;
  bool non_nilpotent = false;
  bool expected() const { return solvable && non_nilpotent; }
};

BaseInvariants compute_base_invariants(const StructureConstants& mu, const Rational& alpha, Exec exec);
DeformedInvariants compute_deformed_invariants(const StructureConstants& mu_t, const Rational& t,
                                               const Rational& alpha, Exec exec);

// Full pipeline for one loaded file, including the errata stage in
// corrected mode. Throws on input errors.
VerificationReport verify_algebra(const AlgebraFile& file, ErrataMode mode, Exec exec = Exec::kParallel);

// Entry point shared by the tool and the tests; args exclude argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace filiform
