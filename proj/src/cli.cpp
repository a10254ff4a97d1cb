#include "filiform/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

const char* YesNo(bool b) { return b ? "yes" : "no"; }
const char* Verdict(bool b) { return b ? "pass" : "fail"; }

std::string CellText(const ResidualCell& c) {
  std::string idx;
  for (std::size_t k = 0; k < c.indices.size(); ++k) idx += (k ? "," : "") + std::to_string(c.indices[k] + 1);
  return "residual[" + idx + ";" + std::to_string(c.component + 1) + "]=" + c.value.str();
}

Rational ParseSample(const std::string& text, const char* what) {
  try {
    return Rational::Parse(text);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string("invalid ") + what + " sample '" + text + "'");
  }
}

AlgebraFile LoadNamed(const RunConfig& config, const std::string& name) {
  const auto path = corpus_path(config.data_dir, name);
  if (!std::filesystem::exists(path)) throw InputError("no algebra named '" + name + "' in " + config.data_dir.string());
  return load_algebra(path);
}

void PrintReport(const VerificationReport& r, const RunConfig& config, std::ostream& os) {
  if (config.format == ReportFormat::kMachine) {
    for (const auto& s : r.stages) {
      os << "algebra=" << r.algebra << " stage=" << s.stage << " verdict=" << Verdict(s.pass) << " detail=" << s.detail
         << "\n";
    }
    for (const auto& c : r.failures) {
      os << "algebra=" << r.algebra << " stage=" << c.stage << " verdict=fail detail=" << CellText(c) << "\n";
    }
    os << "algebra=" << r.algebra << " stage=overall verdict=" << Verdict(r.pass()) << " detail="
       << std::count_if(r.stages.begin(), r.stages.end(), [](const StageResult& s) { return s.pass; }) << "/"
       << r.stages.size() << " stages\n";
    return;
  }
  os << (r.pass() ? "PASS " : "FAIL ") << r.algebra << "\n";
  for (const auto& s : r.stages) os << "  " << (s.pass ? "ok   " : "FAIL ") << s.stage << ": " << s.detail << "\n";
  for (const auto& c : r.failures) os << "    " << c.stage << " " << CellText(c) << "\n";
}

bool RunVerify(const RunConfig& config, std::ostream& os) {
  std::vector<std::string> names = config.names.empty() ? certificate_names(config.data_dir) : config.names;
  std::vector<AlgebraFile> files;
  for (const auto& n : names) {
    files.push_back(LoadNamed(config, n));
    if (!files.back().certificate || !files.back().deformation) {
      throw InputError("algebra '" + n + "' has no deformation/certificate data to verify");
    }
  }
  std::vector<VerificationReport> reports(files.size());
  ForEachIndex(files.size(), Exec::kParallel,
               [&](std::size_t i) { reports[i] = verify_algebra(files[i], config.errata, Exec::kParallel); });
  bool all = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (config.format == ReportFormat::kText && config.errata == ErrataMode::kVerbatim && !files[i].errata.empty()) {
      reports[i].stages.push_back(StageResult{
          "errata", true, std::to_string(files[i].errata.size()) + " entries on file, not applied (verbatim mode)"});
    }
    PrintReport(reports[i], config, os);
    all = all && reports[i].pass();
  }
  if (config.format == ReportFormat::kText) {
    os << (all ? "all " : "not all ") << reports.size() << " certificates verified ("
       << (config.errata == ErrataMode::kVerbatim ? "verbatim" : "corrected") << ")\n";
  }
  return all;
}

std::string SampleText(const Rational& r, bool used) { return used ? r.str() : "-"; }

bool RunInvariantsFor(const AlgebraFile& file, const RunConfig& config, std::ostream& os) {
  if (file.brackets.empty()) throw InputError("algebra '" + file.name + "' has no bracket data");
  const ElaboratedAlgebra a = elaborate(file, ErrataMode::kVerbatim);
  const bool has_alpha = file.has_alpha();
  const std::vector<Rational> alphas = has_alpha ? config.alpha_samples : std::vector<Rational>{Rational(0)};
  bool all = true;

  std::vector<BaseInvariants> base(alphas.size());
  ForEachIndex(alphas.size(), Exec::kParallel,
               [&](std::size_t i) { base[i] = compute_base_invariants(a.mu, alphas[i], Exec::kSerial); });

  std::vector<DeformedInvariants> deformed;
  if (a.spec) {
    const StructureConstants mu_t = deform(a.mu, go_cocycle(*a.spec));
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& t : config.t_samples) {
      for (const auto& al : alphas) points.emplace_back(t, al);
    }
    deformed.resize(points.size());
    ForEachIndex(points.size(), Exec::kParallel, [&](std::size_t i) {
      deformed[i] = compute_deformed_invariants(mu_t, points[i].first, points[i].second, Exec::kSerial);
    });
  }

  const bool machine = config.format == ReportFormat::kMachine;
  if (!machine) os << file.name << (file.label.empty() ? "" : " (" + file.label + ")") << "\n";
  for (const auto& b : base) {
    const bool ok = b.expected();
    all = all && ok;
    std::ostringstream d;
    d << "alpha=" << SampleText(b.alpha, has_alpha) << " lcs=" << ProfileText(b.lcs) << " derived=" << ProfileText(b.derived)
      << " filiform=" << YesNo(b.filiform) << " center=" << b.center << " der=" << b.der_dim
      << " der_lcs=" << ProfileText(b.der_lcs) << " char_nilpotent=" << YesNo(b.char_nilpotent)
      << " der_basis_verified=" << YesNo(b.der_basis_verified);
    if (machine) {
      os << "algebra=" << file.name << " stage=invariants-mu verdict=" << Verdict(ok) << " detail=" << d.str() << "\n";
    } else {
      os << "  " << (ok ? "ok   " : "FAIL ") << "mu   " << d.str() << "\n";
    }
  }
  for (const auto& m : deformed) {
    const bool ok = m.expected();
    all = all && ok;
    std::ostringstream d;
    d << "t=" << m.t.str() << " alpha=" << SampleText(m.alpha, has_alpha) << " derived=" << ProfileText(m.derived)
      << " lcs=" << ProfileText(m.lcs) << " solvable=" << YesNo(m.solvable)
      << " non_nilpotent=" << YesNo(m.non_nilpotent);
    if (machine) {
      os << "algebra=" << file.name << " stage=invariants-mu_t verdict=" << Verdict(ok) << " detail=" << d.str() << "\n";
    } else {
      os << "  " << (ok ? "ok   " : "FAIL ") << "mu_t " << d.str() << "\n";
    }
  }
  if (!machine) {
    os << "  samples are rational points; ranks can drop at unsampled special values\n";
  }
  return all;
}

bool RunCounterexample(const RunConfig& config, std::ostream& os) {
  const AlgebraFile file = LoadNamed(config, "mu17");
  const ElaboratedAlgebra a = elaborate(file, ErrataMode::kVerbatim);
  if (!a.spec) throw InputError("mu17 has no deformation data");
  const DeformationSpec spec = counterexample_spec(*a.spec);
  const Cochain2 phi = go_cocycle(spec);
  const bool cocycle = cocycle_check(a.mu, phi).pass;
  const bool bracket = lie_bracket_check(phi);
  StructureConstants mu_t = deform(a.mu, phi);
  const bool jacobi = jacobi_check(mu_t).pass;
  const bool limit = limit_check(mu_t, a.mu);
  const bool jacobi_at_1 = jacobi_check(mu_t.specialize_t(Rational(1))).pass;
  const Column weight_zero = phi.bracket(spec.outside, spec.ideal.indices[0]);
  const bool valid = cocycle && bracket && jacobi && limit && jacobi_at_1;
  const bool machine = config.format == ReportFormat::kMachine;
  auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
    if (machine) {
      os << "algebra=mu17-counterexample stage=" << name << " verdict=" << Verdict(ok) << " detail=" << detail << "\n";
    } else {
      os << "  " << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    }
  };
  if (!machine) os << "mu17 with D = diag(0,1,1,1,1,1,1) on <Y2..Y8>\n";
  stage("cocycle", cocycle, "mixed Jacobi expression vanishes");
  stage("bracket", bracket, "mu_D satisfies Jacobi");
  stage("deform", jacobi, "mu_t satisfies Jacobi symbolically in t");
  stage("deform-at-1", jacobi_at_1, "mu_t at t=1 satisfies Jacobi");
  stage("limit", limit, "mu_t at t=0 equals mu17");
  stage("weight-zero", IsZeroColumn(weight_zero), "mu_D(Y1,Y2) = " + ColumnText(weight_zero));
  std::vector<Rational> points = {Rational(0)};
  for (const auto& t : config.t_samples) points.push_back(t);
  for (const auto& t : points) {
    const RationalAlgebra r = RationalAlgebra::Specialize(mu_t, t, Rational(0));
    const SeriesProfile lcs = lower_central_series(r);
    const SeriesProfile der = derived_series(r);
    std::ostringstream d;
    d << "t=" << t.str() << " lcs=" << ProfileText(lcs) << " derived=" << ProfileText(der)
      << " center=" << center_dim(r) << " der=" << derivation_algebra(r).dimension;
    stage("invariants", true, d.str());
  }
  const std::string summary = std::string("deformation valid: ") + YesNo(valid) +
                              "; degeneration certificate: none shipped; non-existence: asserted, unverified";
  if (machine) {
    os << "algebra=mu17-counterexample stage=summary verdict=" << Verdict(valid) << " detail=" << summary << "\n";
  } else {
    os << summary << "\n";
  }
  return valid;
}

}  // namespace

bool BaseInvariants::expected() const {
  const SeriesProfile filiform_profile = {8, 6, 5, 4, 3, 2, 1, 0};
  return filiform && lcs == filiform_profile && center == 1 && reaches_zero(derived) && derived.size() <= 4 &&
         char_nilpotent && der_basis_verified;
}

BaseInvariants compute_base_invariants(const StructureConstants& mu, const Rational& alpha, Exec exec) {
  BaseInvariants b;
  b.alpha = alpha;
  const RationalAlgebra r = RationalAlgebra::Specialize(mu, Rational(1), alpha);
  b.lcs = lower_central_series(r, exec);
  b.derived = derived_series(r, exec);
  b.filiform = is_filiform(r, exec);
  b.center = center_dim(r, exec);
  const DerivationAlgebra der = derivation_algebra(r, exec);
  b.der_dim = der.dimension;
  b.der_lcs = derivation_lower_central_series(der, exec);
  b.char_nilpotent = reaches_zero(b.der_lcs);
  b.der_basis_verified =
      std::all_of(der.basis.begin(), der.basis.end(), [&](const RationalMatrix& e) { return satisfies_leibniz(r, e); });
  return b;
}

DeformedInvariants compute_deformed_invariants(const StructureConstants& mu_t, const Rational& t,
                                               const Rational& alpha, Exec exec) {
  DeformedInvariants d;
  d.t = t;
  d.alpha = alpha;
  const RationalAlgebra r = RationalAlgebra::Specialize(mu_t, t, alpha);
  d.lcs = lower_central_series(r, exec);
  d.derived = derived_series(r, exec);
  d.solvable = reaches_zero(d.derived);
  d.non_nilpotent = !reaches_zero(d.lcs);
  return d;
}

VerificationReport verify_algebra(const AlgebraFile& file, ErrataMode mode, Exec exec) {
  const ElaboratedAlgebra a = elaborate(file, mode);
  if (!a.spec || !a.forward_g) throw InputError("algebra '" + file.name + "' lacks deformation or certificate data");
  DegenerationTable table{file.name, *a.spec, *a.forward_g, *a.printed_g};
  VerificationReport r = verify_table(table, exec);
  if (mode == ErrataMode::kCorrected && !a.applied_errata.empty()) {
    std::size_t counts[3] = {0, 0, 0};
    for (auto c : a.applied_errata) ++counts[static_cast<int>(c)];
    const bool admissible = counts[static_cast<int>(ErratumClass::kStructural)] == 0;
    r.add("errata", admissible,
          std::to_string(a.applied_errata.size()) + " applied: " + std::to_string(counts[0]) + " typographical, " +
              std::to_string(counts[1]) + " coefficient, " + std::to_string(counts[2]) + " structural" +
              (admissible ? "" : " (beyond coefficient level)"));
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of degeneration certificates for 8-dimensional filiform Lie algebras", "filiform"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string errata = "verbatim";
  std::string data_dir = config.data_dir.string();
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--data", data_dir, "Corpus directory");
  app.add_option("--errata", errata, "Errata mode")->check(CLI::IsMember({"verbatim", "corrected"}));
  app.add_option("--output", output, "Write the report to this file");

  auto* verify = app.add_subcommand("verify", "Run the verification pipeline");
  std::vector<std::string> verify_names;
  bool verify_all = false;
  verify->add_option("names", verify_names, "Algebra names");
  verify->add_flag("--all", verify_all, "Every algebra with a certificate");

  auto* invariants = app.add_subcommand("invariants", "Invariants at rational specializations");
  std::string invariant_name;
  std::vector<std::string> t_values, alpha_values;
  invariants->add_option("name", invariant_name, "Algebra name")->required();
  invariants->add_option("--t", t_values, "t samples (nonzero rationals)");
  invariants->add_option("--alpha", alpha_values, "alpha samples (rationals)");

  auto* counterexample = app.add_subcommand("counterexample", "Build and check the weight-0 deformation of mu17");
  auto* report = app.add_subcommand("report", "verify --all followed by invariants of every algebra");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::ofstream file_out;
  std::ostream* os = &out;
  try {
    config.format = format == "machine" ? ReportFormat::kMachine : ReportFormat::kText;
    config.errata = errata == "corrected" ? ErrataMode::kCorrected : ErrataMode::kVerbatim;
    config.data_dir = data_dir;
    if (!output.empty()) {
      file_out.open(output, std::ios::binary | std::ios::trunc);
      if (!file_out) throw IoError("cannot write " + output);
      os = &file_out;
    }
    bool ok = true;
    if (verify->parsed()) {
      if (verify_all && !verify_names.empty()) throw InputError("give names or --all, not both");
      config.names = verify_names;
      ok = RunVerify(config, *os);
    } else if (invariants->parsed()) {
      if (!t_values.empty()) {
        config.t_samples.clear();
        for (const auto& s : t_values) {
          config.t_samples.push_back(ParseSample(s, "t"));
          if (config.t_samples.back().is_zero()) throw InputError("t = 0 is not a valid sample");
        }
      }
      if (!alpha_values.empty()) {
        config.alpha_samples.clear();
        for (const auto& s : alpha_values) config.alpha_samples.push_back(ParseSample(s, "alpha"));
      }
      ok = RunInvariantsFor(LoadNamed(config, invariant_name), config, *os);
    } else if (counterexample->parsed()) {
      ok = RunCounterexample(config, *os);
    } else if (report->parsed()) {
      ok = RunVerify(config, *os);
      for (const auto& name : certificate_names(config.data_dir)) {
        ok = RunInvariantsFor(LoadNamed(config, name), config, *os) && ok;
      }
      ok = RunCounterexample(config, *os) && ok;
    }
    os->flush();
    return ok ? kExitPass : kExitFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace filiform
