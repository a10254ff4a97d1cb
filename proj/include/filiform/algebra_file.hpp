#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/deformation.hpp"
#include "filiform/expression.hpp"
#include "filiform/lie.hpp"
#include "filiform/matrix.hpp"

namespace filiform {

// Textual model of one data file. Indices are 1-based as written.
struct BasisChangeLine {
  std::size_t index = 0;  // Y_index = value (linear in X)
  Expr value;
  friend bool operator==(const BasisChangeLine&, const BasisChangeLine&) = default;
};

struct BracketLine {
  std::size_t i = 0, j = 0;  // [Y_i, Y_j] = value (linear in Y), i < j
  Expr value;
  friend bool operator==(const BracketLine&, const BracketLine&) = default;
};

struct DeformationBlock {
  std::vector<std::size_t> ideal;
  std::size_t outside = 0;
  std::vector<Rational> derivation;  // diagonal of D, in the order of `ideal`
  friend bool operator==(const DeformationBlock&, const DeformationBlock&) = default;
};

enum class Orientation { kForward, kInverse };

struct PolyLine {
  std::string name;
  Expr value;
  friend bool operator==(const PolyLine&, const PolyLine&) = default;
};

struct EntryLine {
  std::size_t row = 0, col = 0;
  Expr value;
  friend bool operator==(const EntryLine&, const EntryLine&) = default;
};

struct CertificateBlock {
  Orientation orientation = Orientation::kForward;
  std::vector<PolyLine> polys;
  std::vector<EntryLine> entries;  // unlisted entries are 0
  friend bool operator==(const CertificateBlock&, const CertificateBlock&) = default;
};

// Target is "orientation", "pK" or "gR,C". For p and g targets `original`
// and `corrected` hold canonical expression text; for orientation they are
// "forward" or "inverse".
struct Erratum {
  std::string target;
  std::string original;
  std::string corrected;
  std::string note;
  friend bool operator==(const Erratum&, const Erratum&) = default;
};

struct AlgebraFile {
  std::string name;
  std::string label;
  std::size_t dimension = 0;
  std::vector<std::string> params;  // subset of {"alpha"}
  std::vector<BasisChangeLine> basis_change;
  std::vector<BracketLine> brackets;
  std::optional<DeformationBlock> deformation;
  std::optional<CertificateBlock> certificate;
  std::vector<Erratum> errata;
  std::optional<std::vector<std::vector<Rational>>> semisimple_derivation;  // rows

  bool has_alpha() const;
  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

// Throws ParseError on syntax, ValidationError on violated invariants.
AlgebraFile parse_algebra(std::string_view text);
// Adds IoError for unreadable files.
AlgebraFile load_algebra(const std::filesystem::path& path);
std::string serialize_algebra(const AlgebraFile& file);

enum class ErrataMode { kVerbatim, kCorrected };

// typographical: value unchanged; coefficient: same monomial support;
// structural: anything else, including every orientation change.
enum class ErratumClass { kTypographical, kCoefficient, kStructural };
const char* ErratumClassName(ErratumClass c);
ErratumClass classify_erratum(const AlgebraFile& file, const Erratum& erratum);

struct ElaboratedAlgebra {
  std::string name;
  std::string label;
  StructureConstants mu;
  std::optional<DeformationSpec> spec;
  std::map<std::string, Scalar> polys;
  // Matrix as written (after errata in corrected mode) and its forward form.
  std::optional<ScalarMatrix> printed_g;
  std::optional<ScalarMatrix> forward_g;
  Orientation orientation = Orientation::kForward;
  std::vector<ErratumClass> applied_errata;
};

// Applies errata only in corrected mode. Throws ValidationError, NotAUnit.
ElaboratedAlgebra elaborate(const AlgebraFile& file, ErrataMode mode);

// Names (file stems) of the *.alg files in a directory, sorted.
std::vector<std::string> corpus_names(const std::filesystem::path& dir);
// Names of files with a degeneration certificate.
std::vector<std::string> certificate_names(const std::filesystem::path& dir);
std::filesystem::path corpus_path(const std::filesystem::path& dir, const std::string& name);

}  // namespace filiform
