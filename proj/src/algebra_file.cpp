#include "filiform/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

bool AlgebraFile::has_alpha() const {
  return std::find(params.begin(), params.end(), "alpha") != params.end();
}

namespace {

const std::vector<std::string> kSections = {"algebra",     "basis-change", "brackets",
                                            "deformation", "certificate",  "errata",
                                            "semisimple-derivation"};

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> SplitWords(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool IsNatural(const std::string& s) {
  return !s.empty() && s.size() < 6 && s.find_first_not_of("0123456789") == std::string::npos;
}

struct Line {
  int number = 0;
  std::string key;
  std::string value;
  int value_column = 1;  // 1-based column of value[0] in the raw line
  std::string raw;
};

class FileParser {
 public:
  explicit FileParser(std::string_view text) : text_(text) {}

  AlgebraFile Parse() {
    Split();
    ParseAlgebraSection();
    for (const auto& section : order_) {
      if (section == "algebra") continue;
      const auto& lines = sections_[section];
      if (section == "basis-change") ParseBasisChange(lines);
      if (section == "brackets") ParseBrackets(lines);
      if (section == "deformation") ParseDeformation(lines);
      if (section == "certificate") ParseCertificate(lines);
      if (section == "errata") ParseErrata(lines);
      if (section == "semisimple-derivation") ParseSemisimple(lines);
    }
    ValidateErrata();
    return std::move(file_);
  }

 private:
  [[noreturn]] static void Fail(const Line& l, const std::string& msg, std::set<std::string> expected = {}) {
    throw ParseError(msg, l.number, 1, std::move(expected));
  }

  [[noreturn]] static void Invalid(const Line& l, const std::string& msg) {
    throw ValidationError("line " + std::to_string(l.number) + ": " + msg);
  }

  void Split() {
    std::string current;
    int number = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string raw(text_.substr(start, end - start));
      start = end + 1;
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string body = raw.substr(0, raw.find('#'));
      const std::string trimmed = Trim(body);
      if (trimmed.empty()) continue;
      Line l;
      l.number = number;
      l.raw = raw;
      if (trimmed.front() == '[') {
        if (trimmed.back() != ']') Fail(l, "unterminated section header", {"]"});
        const std::string name = Trim(trimmed.substr(1, trimmed.size() - 2));
        if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
          Fail(l, "unknown section '" + name + "'", std::set<std::string>(kSections.begin(), kSections.end()));
        }
        if (sections_.count(name)) Invalid(l, "section [" + name + "] repeated");
        sections_[name];
        order_.push_back(name);
        current = name;
        continue;
      }
      if (current.empty()) Fail(l, "content before the first section", {"["});
      if (current == "errata") {
        l.value = trimmed;
        l.value_column = static_cast<int>(body.find_first_not_of(" \t")) + 1;
      } else {
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected 'key = value'", number, static_cast<int>(body.size()) + 1, {"="});
        }
        l.key = Trim(body.substr(0, eq));
        const std::string after = body.substr(eq + 1);
        const auto first = after.find_first_not_of(" \t");
        l.value = Trim(after);
        l.value_column = static_cast<int>(eq + 2 + (first == std::string::npos ? 0 : first));
      }
      sections_[current].push_back(l);
    }
    if (!sections_.count("algebra")) throw ValidationError("missing [algebra] section");
  }

  Expr ParseExpr(const Line& l) { return parse_expression(l.value, l.number, l.value_column); }

  ScalarEnv Env(bool allow_t) const {
    ScalarEnv env;
    env.allow_t = allow_t;
    env.allow_alpha = file_.has_alpha();
    return env;
  }

  std::size_t Index(const Line& l, const std::string& s) {
    if (!IsNatural(s)) Fail(l, "expected a basis index, got '" + s + "'", {"integer"});
    const std::size_t v = std::stoul(s);
    if (v < 1 || v > file_.dimension) {
      Invalid(l, "index " + s + " outside dimension " + std::to_string(file_.dimension));
    }
    return v;
  }

  void ParseAlgebraSection() {
    std::set<std::string> seen;
    for (const auto& l : sections_["algebra"]) {
      if (!seen.insert(l.key).second) Invalid(l, "key '" + l.key + "' repeated");
      if (l.key == "name") {
        static const std::regex kName("[A-Za-z0-9_-]+");
        if (!std::regex_match(l.value, kName)) Invalid(l, "name must match [A-Za-z0-9_-]+");
        file_.name = l.value;
      } else if (l.key == "label") {
        file_.label = l.value;
      } else if (l.key == "dimension") {
        if (!IsNatural(l.value) || std::stoul(l.value) < 1 || std::stoul(l.value) > 64) {
          Invalid(l, "dimension must be an integer in 1..64");
        }
        file_.dimension = std::stoul(l.value);
      } else if (l.key == "params") {
        std::string v = l.value;
        std::replace(v.begin(), v.end(), ',', ' ');
        for (const auto& p : SplitWords(v)) {
          if (p != "alpha") Invalid(l, "unknown parameter '" + p + "'; only alpha may be declared");
          if (file_.has_alpha()) Invalid(l, "parameter alpha repeated");
          file_.params.push_back(p);
        }
      } else {
        Fail(l, "unknown key '" + l.key + "'", {"dimension", "label", "name", "params"});
      }
    }
    if (file_.name.empty()) throw ValidationError("[algebra] lacks a name");
    if (file_.dimension == 0) throw ValidationError("[algebra] lacks a dimension");
  }

  void ParseBasisChange(const std::vector<Line>& lines) {
    std::set<std::size_t> seen;
    const ScalarEnv env = Env(false);
    for (const auto& l : lines) {
      if (l.key.size() < 2 || l.key[0] != 'Y') Fail(l, "expected 'Yk = ...'", {"Yk"});
      const std::size_t k = Index(l, l.key.substr(1));
      if (!seen.insert(k).second) Invalid(l, "Y" + std::to_string(k) + " defined twice");
      Expr e = ParseExpr(l);
      try {
        const LinearForm f = evaluate_linear(e, env, 'X', file_.dimension);
        if (!f.constant.is_zero()) Invalid(l, "basis change has a constant term");
      } catch (const ValidationError& err) {
        Invalid(l, err.what());
      }
      file_.basis_change.push_back(BasisChangeLine{k, std::move(e)});
    }
  }

  void ParseBrackets(const std::vector<Line>& lines) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const ScalarEnv env = Env(false);
    for (const auto& l : lines) {
      const auto words = SplitWords(l.key);
      if (words.size() != 3 || words[0] != "bracket") Fail(l, "expected 'bracket i j = ...'", {"bracket"});
      const std::size_t i = Index(l, words[1]);
      const std::size_t j = Index(l, words[2]);
      if (i >= j) Invalid(l, "bracket indices must satisfy i < j");
      if (!seen.insert({i, j}).second) Invalid(l, "bracket " + words[1] + " " + words[2] + " repeated");
      Expr e = ParseExpr(l);
      try {
        const LinearForm f = evaluate_linear(e, env, 'Y', file_.dimension);
        if (!f.constant.is_zero()) Invalid(l, "bracket value has a constant term");
      } catch (const ValidationError& err) {
        Invalid(l, err.what());
      }
      file_.brackets.push_back(BracketLine{i, j, std::move(e)});
    }
  }

  void ParseDeformation(const std::vector<Line>& lines) {
    DeformationBlock d;
    std::set<std::string> seen;
    const Line* derivation_line = nullptr;
    for (const auto& l : lines) {
      if (!seen.insert(l.key).second) Invalid(l, "key '" + l.key + "' repeated");
      if (l.key == "ideal") {
        std::set<std::size_t> distinct;
        for (const auto& w : SplitWords(l.value)) {
          const std::size_t k = Index(l, w);
          if (!distinct.insert(k).second) Invalid(l, "ideal index repeated");
          d.ideal.push_back(k);
        }
      } else if (l.key == "outside") {
        d.outside = Index(l, l.value);
      } else if (l.key == "derivation") {
        derivation_line = &l;
        for (const auto& w : SplitWords(l.value)) {
          try {
            d.derivation.push_back(Rational::Parse(w));
          } catch (const std::invalid_argument&) {
            Invalid(l, "derivation entries must be rationals, got '" + w + "'");
          }
        }
      } else {
        Fail(l, "unknown key '" + l.key + "'", {"derivation", "ideal", "outside"});
      }
    }
    if (!seen.count("ideal") || !seen.count("outside") || !seen.count("derivation")) {
      throw ValidationError("[deformation] needs ideal, outside and derivation");
    }
    if (std::find(d.ideal.begin(), d.ideal.end(), d.outside) != d.ideal.end()) {
      throw ValidationError("[deformation] outside index lies in the ideal");
    }
    if (d.derivation.size() != d.ideal.size()) {
      Invalid(*derivation_line, "derivation has " + std::to_string(d.derivation.size()) + " entries for an ideal of dimension " +
                                    std::to_string(d.ideal.size()));
    }
    file_.deformation = std::move(d);
  }

  void ParseCertificate(const std::vector<Line>& lines) {
    CertificateBlock c;
    std::set<std::string> names;
    std::set<std::pair<std::size_t, std::size_t>> cells;
    bool orientation_seen = false;
    ScalarEnv env = Env(true);
    static const std::regex kPoly("p[1-9][0-9]*");
    for (const auto& l : lines) {
      const auto words = SplitWords(l.key);
      if (l.key == "orientation") {
        if (orientation_seen) Invalid(l, "orientation repeated");
        orientation_seen = true;
        if (l.value == "forward") {
          c.orientation = Orientation::kForward;
        } else if (l.value == "inverse") {
          c.orientation = Orientation::kInverse;
        } else {
          Fail(l, "unknown orientation '" + l.value + "'", {"forward", "inverse"});
        }
      } else if (std::regex_match(l.key, kPoly)) {
        if (!names.insert(l.key).second) Invalid(l, l.key + " defined twice");
        Expr e = ParseExpr(l);
        try {
          evaluate_scalar(e, env);
        } catch (const Error& err) {
          Invalid(l, err.what());
        }
        c.polys.push_back(PolyLine{l.key, std::move(e)});
      } else if (words.size() == 3 && words[0] == "g") {
        const std::size_t r = Index(l, words[1]);
        const std::size_t col = Index(l, words[2]);
        if (!cells.insert({r, col}).second) Invalid(l, "entry g " + words[1] + " " + words[2] + " repeated");
        c.entries.push_back(EntryLine{r, col, ParseExpr(l)});
      } else {
        Fail(l, "unknown key '" + l.key + "'", {"g r c", "orientation", "pK"});
      }
    }
    for (const auto& p : c.polys) env.named[p.name] = evaluate_scalar(p.value, env);
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
      try {
        evaluate_scalar(c.entries[k].value, env);
      } catch (const Error& err) {
        throw ValidationError("certificate entry g " + std::to_string(c.entries[k].row) + " " +
                              std::to_string(c.entries[k].col) + ": " + err.what());
      }
    }
    file_.certificate = std::move(c);
  }

  void ParseErrata(const std::vector<Line>& lines) {
    for (const auto& l : lines) {
      if (l.value.rfind("erratum", 0) != 0) Fail(l, "expected 'erratum target | original | corrected | note'", {"erratum"});
      std::vector<std::string> parts;
      std::vector<int> columns;
      const std::string rest = l.value.substr(7);
      std::size_t start = 0;
      for (;;) {
        const std::size_t bar = rest.find('|', start);
        const std::string piece = rest.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        parts.push_back(Trim(piece));
        const auto lead = piece.find_first_not_of(" \t");
        columns.push_back(l.value_column + 7 + static_cast<int>(start + (lead == std::string::npos ? 0 : lead)));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (parts.size() != 4) Fail(l, "erratum needs 4 '|'-separated fields", {"|"});
      Erratum e{parts[0], parts[1], parts[2], parts[3]};
      if (e.note.empty()) Invalid(l, "erratum lacks a justification");
      if (e.target != "orientation") {
        e.original = expression_text(parse_expression(parts[1], l.number, columns[1]));
        e.corrected = expression_text(parse_expression(parts[2], l.number, columns[2]));
      }
      errata_lines_.push_back(l);
      file_.errata.push_back(std::move(e));
    }
  }

  void ParseSemisimple(const std::vector<Line>& lines) {
    std::vector<std::vector<Rational>> rows(file_.dimension);
    std::set<std::size_t> seen;
    for (const auto& l : lines) {
      const auto words = SplitWords(l.key);
      if (words.size() != 2 || words[0] != "row") Fail(l, "expected 'row i = ...'", {"row"});
      const std::size_t i = Index(l, words[1]);
      if (!seen.insert(i).second) Invalid(l, "row repeated");
      for (const auto& w : SplitWords(l.value)) {
        try {
          rows[i - 1].push_back(Rational::Parse(w));
        } catch (const std::invalid_argument&) {
          Invalid(l, "matrix entries must be rationals, got '" + w + "'");
        }
      }
      if (rows[i - 1].size() != file_.dimension) Invalid(l, "row has the wrong number of entries");
    }
    if (seen.size() != file_.dimension) throw ValidationError("[semisimple-derivation] needs every row");
    file_.semisimple_derivation = std::move(rows);
  }

  void ValidateErrata() {
    for (std::size_t k = 0; k < file_.errata.size(); ++k) {
      const Erratum& e = file_.errata[k];
      const Line& l = errata_lines_[k];
      if (!file_.certificate) Invalid(l, "errata require a [certificate] section");
      try {
        classify_erratum(file_, e);
      } catch (const ValidationError& err) {
        Invalid(l, err.what());
      }
    }
  }

  std::string_view text_;
  std::map<std::string, std::vector<Line>> sections_;
  std::vector<std::string> order_;
  std::vector<Line> errata_lines_;
  AlgebraFile file_;
};

ScalarEnv PolyEnv(const AlgebraFile& file) {
  ScalarEnv env;
  env.allow_t = true;
  env.allow_alpha = file.has_alpha();
  return env;
}

std::map<std::string, Scalar> VerbatimPolys(const AlgebraFile& file) {
  std::map<std::string, Scalar> out;
  if (!file.certificate) return out;
  const ScalarEnv env = PolyEnv(file);
  for (const auto& p : file.certificate->polys) out[p.name] = evaluate_scalar(p.value, env);
  return out;
}

// Parses "gR,C" into 1-based indices.
std::pair<std::size_t, std::size_t> EntryTarget(const std::string& target, std::size_t n) {
  static const std::regex kEntry("g([0-9]{1,3}),([0-9]{1,3})");
  std::smatch m;
  if (!std::regex_match(target, m, kEntry)) throw ValidationError("unknown erratum target '" + target + "'");
  const std::size_t r = std::stoul(m[1]), c = std::stoul(m[2]);
  if (r < 1 || r > n || c < 1 || c > n) throw ValidationError("erratum target '" + target + "' out of range");
  return {r, c};
}

Scalar EntryValue(const AlgebraFile& file, std::size_t r, std::size_t c, const ScalarEnv& env) {
  for (const auto& e : file.certificate->entries) {
    if (e.row == r && e.col == c) return evaluate_scalar(e.value, env);
  }
  return Scalar();
}

std::set<Exponent> Support(const Scalar& s) {
  std::set<Exponent> out;
  for (const auto& term : s.terms()) out.insert(term.exponent);
  return out;
}

const char* OrientationText(Orientation o) { return o == Orientation::kForward ? "forward" : "inverse"; }

}  // namespace

AlgebraFile parse_algebra(std::string_view text) { return FileParser(text).Parse(); }

AlgebraFile load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on " + path.string());
  try {
    return parse_algebra(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what(), e.line(), e.column(), e.expected());
  } catch (const ValidationError& e) {
    throw ValidationError(path.filename().string() + ": " + e.what());
  }
}

std::string serialize_algebra(const AlgebraFile& file) {
  std::ostringstream os;
  os << "[algebra]\n";
  os << "name = " << file.name << "\n";
  os << "label = " << file.label << "\n";
  os << "dimension = " << file.dimension << "\n";
  os << "params =";
  for (const auto& p : file.params) os << " " << p;
  os << "\n";
  if (!file.basis_change.empty()) {
    os << "\n[basis-change]\n";
    for (const auto& b : file.basis_change) os << "Y" << b.index << " = " << expression_text(b.value) << "\n";
  }
  if (!file.brackets.empty()) {
    os << "\n[brackets]\n";
    for (const auto& b : file.brackets) {
      os << "bracket " << b.i << " " << b.j << " = " << expression_text(b.value) << "\n";
    }
  }
  if (file.deformation) {
    const auto& d = *file.deformation;
    os << "\n[deformation]\nideal =";
    for (auto i : d.ideal) os << " " << i;
    os << "\noutside = " << d.outside << "\nderivation =";
    for (const auto& r : d.derivation) os << " " << r.str();
    os << "\n";
  }
  if (file.certificate) {
    const auto& c = *file.certificate;
    os << "\n[certificate]\n";
    if (c.orientation != Orientation::kForward) os << "orientation = " << OrientationText(c.orientation) << "\n";
    for (const auto& p : c.polys) os << p.name << " = " << expression_text(p.value) << "\n";
    for (const auto& e : c.entries) os << "g " << e.row << " " << e.col << " = " << expression_text(e.value) << "\n";
  }
  if (!file.errata.empty()) {
    os << "\n[errata]\n";
    for (const auto& e : file.errata) {
      os << "erratum " << e.target << " | " << e.original << " | " << e.corrected << " | " << e.note << "\n";
    }
  }
  if (file.semisimple_derivation) {
    os << "\n[semisimple-derivation]\n";
    const auto& rows = *file.semisimple_derivation;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << "row " << i + 1 << " =";
      for (const auto& x : rows[i]) os << " " << x.str();
      os << "\n";
    }
  }
  return os.str();
}

const char* ErratumClassName(ErratumClass c) {
  switch (c) {
    case ErratumClass::kTypographical:
      return "typographical";
    case ErratumClass::kCoefficient:
      return "coefficient";
    case ErratumClass::kStructural:
      return "structural";
  }
  return "structural";
}

ErratumClass classify_erratum(const AlgebraFile& file, const Erratum& e) {
  if (!file.certificate) throw ValidationError("errata require a certificate");
  if (e.note.find_first_of("|#") != std::string::npos) throw ValidationError("erratum note may not contain '|' or '#'");
  if (e.target == "orientation") {
    for (const auto* v : {&e.original, &e.corrected}) {
      if (*v != "forward" && *v != "inverse") throw ValidationError("orientation erratum values are forward or inverse");
    }
    if (e.original != OrientationText(file.certificate->orientation)) {
      throw ValidationError("orientation erratum original does not match the file");
    }
    return e.original == e.corrected ? ErratumClass::kTypographical : ErratumClass::kStructural;
  }
  ScalarEnv env = PolyEnv(file);
  Scalar original, corrected;
  const Expr orig_expr = parse_expression(e.original);
  const Expr corr_expr = parse_expression(e.corrected);
  if (e.target.size() > 1 && e.target[0] == 'p') {
    bool found = false;
    for (const auto& p : file.certificate->polys) {
      if (p.name == e.target) {
        found = true;
        original = evaluate_scalar(p.value, env);
      }
    }
    if (!found) throw ValidationError("erratum target '" + e.target + "' is not a defined polynomial");
    if (evaluate_scalar(orig_expr, env) != original) {
      throw ValidationError("erratum original for " + e.target + " does not match the file");
    }
    corrected = evaluate_scalar(corr_expr, env);
  } else {
    const auto [r, c] = EntryTarget(e.target, file.dimension);
    env.named = VerbatimPolys(file);
    original = EntryValue(file, r, c, env);
    if (evaluate_scalar(orig_expr, env) != original) {
      throw ValidationError("erratum original for " + e.target + " does not match the file");
    }
    corrected = evaluate_scalar(corr_expr, env);
  }
  if (original == corrected) return ErratumClass::kTypographical;
  if (Support(original) == Support(corrected)) return ErratumClass::kCoefficient;
  return ErratumClass::kStructural;
}

ElaboratedAlgebra elaborate(const AlgebraFile& file, ErrataMode mode) {
  ElaboratedAlgebra out;
  out.name = file.name;
  out.label = file.label;
  const std::size_t n = file.dimension;
  out.mu = StructureConstants(n, file.name, Params{false, file.has_alpha()});
  ScalarEnv bracket_env;
  bracket_env.allow_alpha = file.has_alpha();
  for (const auto& b : file.brackets) {
    const LinearForm f = evaluate_linear(b.value, bracket_env, 'Y', n);
    Column c(n);
    for (const auto& [k, s] : f.coeffs) c[k] = s;
    out.mu.set(b.i - 1, b.j - 1, std::move(c));
  }
  if (file.deformation) {
    const auto& d = *file.deformation;
    DeformationSpec spec;
    spec.base = out.mu;
    for (auto i : d.ideal) spec.ideal.indices.push_back(i - 1);
    spec.outside = d.outside - 1;
    std::vector<Scalar> diag(d.derivation.begin(), d.derivation.end());
    spec.derivation = ScalarMatrix::Diagonal(diag);
    out.spec = std::move(spec);
  }
  if (!file.certificate) return out;

  const auto& cert = *file.certificate;
  ScalarEnv env = PolyEnv(file);
  out.orientation = cert.orientation;
  out.polys = VerbatimPolys(file);
  std::map<std::pair<std::size_t, std::size_t>, Scalar> overrides;
  if (mode == ErrataMode::kCorrected) {
    for (const auto& e : file.errata) {
      out.applied_errata.push_back(classify_erratum(file, e));
      if (e.target == "orientation") {
        out.orientation = e.corrected == "inverse" ? Orientation::kInverse : Orientation::kForward;
      } else if (e.target[0] == 'p') {
        out.polys[e.target] = evaluate_scalar(parse_expression(e.corrected), env);
      }
    }
    ScalarEnv corrected_env = env;
    corrected_env.named = out.polys;
    for (const auto& e : file.errata) {
      if (e.target != "orientation" && e.target[0] == 'g') {
        overrides[EntryTarget(e.target, n)] = evaluate_scalar(parse_expression(e.corrected), corrected_env);
      }
    }
  }
  env.named = out.polys;
  ScalarMatrix g(n);
  for (const auto& e : cert.entries) g(e.row - 1, e.col - 1) = evaluate_scalar(e.value, env);
  for (const auto& [cell, value] : overrides) g(cell.first - 1, cell.second - 1) = value;
  out.printed_g = g;
  out.forward_g = out.orientation == Orientation::kForward ? g : mat_inverse_unit(g);
  return out;
}

std::vector<std::string> corpus_names(const std::filesystem::path& dir) {
  std::error_code ec;
  std::vector<std::string> out;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".alg") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> certificate_names(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  for (const auto& name : corpus_names(dir)) {
    if (load_algebra(corpus_path(dir, name)).certificate) out.push_back(name);
  }
  return out;
}

std::filesystem::path corpus_path(const std::filesystem::path& dir, const std::string& name) {
  return dir / (name + ".alg");
}

}  // namespace filiform
