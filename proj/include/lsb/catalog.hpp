#ifndef LSB_CATALOG_HPP
#define LSB_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsb/morphism.hpp"
#include "lsb/parser.hpp"
#include "lsb/solver.hpp"

namespace lsb {

struct UnknownId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PrimalInfo {
  std::string name;
  int table = 0;  // 0: abelian duals only
  std::string label, provenance;
};

struct CatalogEntry {
  enum class Kind { Algebra, Bialgebra };
  Kind kind = Kind::Bialgebra;
  std::string id;
  int table = 0;
  std::string primal_name;
  SymbolicAlgebra primal;            // as defined in the algebra file
  std::optional<SymbolicDual> dual;  // empty for Kind::Algebra
  std::string dual_label;
  std::vector<ParamDecl> params;     // entry declarations (overrides of primal ones included)
  std::string provenance;
  std::vector<std::string> notes;

  // primal declarations with the entry's overrides applied, in primal order then new ones
  std::vector<ParamDecl> effective_params() const;
};

struct AutRecord {
  AutFamily family;
  MatrixLiteral matrix;
  std::vector<ParamDecl> params;
  std::vector<ExprPtr> nonzero;
};

struct Witness {
  std::string name;
  std::string target;
  std::vector<std::pair<std::string, ExprPtr>> target_with;  // target params fixed by expressions
  MatrixLiteral matrix;
  std::vector<ParamDecl> params;
  std::vector<std::pair<std::string, ExprPtr>> lets;  // evaluated in order, may override family params
  std::vector<ExprPtr> nonzero;
  std::vector<std::pair<int, int>> forced;  // 1-based (row, col), stated zero
  std::vector<std::string> notes;
};

struct SolutionRecord {
  std::string id;
  std::vector<std::string> algebras;
  std::vector<std::pair<std::string, ExprPtr>> at;  // primal params fixed to constants
  std::string family_text;                          // statements as written, reparsed per algebra
  SymbolicDual family;                              // over the first algebra
  std::vector<ParamDecl> params;
  std::vector<Witness> witnesses;
  std::string status;  // set when there is no witness
  std::string provenance;
  std::vector<std::string> notes;
};

class Catalog {
 public:
  AlgebraFile algebras;
  std::vector<std::pair<std::string, std::string>> aliases;
  std::vector<PrimalInfo> primals;
  std::vector<CatalogEntry> entries;
  std::vector<AutRecord> automorphisms;
  std::vector<SolutionRecord> solutions;

  // Algebra file text then manifest text.
  static Catalog parse(const std::string& algebra_text, const std::string& manifest_text,
                       const std::string& algebra_source = "algebras.lsb",
                       const std::string& manifest_source = "manifest.lsb");
  // algebras.lsb and manifest.lsb in dir
  static Catalog load(const std::string& dir);
  // $LSB_DATA_DIR if set, else the data directory of the source tree
  static Catalog load_default();
  static std::string default_dir();

  // name or alias, nullptr if neither
  const SymbolicAlgebra* find_algebra(const std::string& id) const;
  const SymbolicAlgebra& algebra(const std::string& id) const;  // throws UnknownId
  const PrimalInfo* primal_info(const std::string& name) const;
  const AutRecord* automorphisms_of(const std::string& id) const;
  // by record id, else every record listing the algebra
  std::vector<const SolutionRecord*> solutions_for(const std::string& id) const;
};

// Resolution order: entry id, algebra name or alias, dual label (first entry in
// manifest order). Throws UnknownId.
CatalogEntry load_entry(const Catalog& cat, const std::string& id);

std::string print_manifest(const Catalog& cat);

// One line of a report.
struct CheckRecord {
  std::string entry, check;
  size_t residual_nonzero_count = 0;
  std::string status;  // pass, fail, unsampled, note
  std::string detail;
};

struct Report {
  std::vector<CheckRecord> records;
  std::vector<std::string> summary;
  bool ok() const;  // no record is fail or unsampled
  std::string text() const;
  // one JSON object per line: entry, check, residual_nonzero_count, status, detail
  std::string as_records() const;
  void append(const Report& other);
};

struct SamplingConfig {
  std::optional<int> table;
  // replaces the sample set of every parameter with this name; an empty list disables sampling
  std::map<std::string, std::vector<mpq_class>> overrides;
  bool symbolic = true;  // try the parameter-free polynomial check first
};

// Statements `NAME = {v, ...};`, `#` comments.
SamplingConfig parse_sampling_file(const std::string& text, const std::string& source = "<samples>");

// Checks: primal_sj, dual_sj, mixed, double_sj, ad_invariance. A check passes
// symbolically when its residual vanishes as a polynomial in the parameters;
// every sample must give zero either way. Without samples and without a
// symbolic zero the check is "unsampled".
Report verify_entry(const CatalogEntry& e, const SamplingConfig& cfg = {});
// The same five checks for any pair; parameters are the algebra's declarations.
Report verify_bialgebra(const std::string& label, const SymbolicAlgebra& g, const SymbolicDual& d,
                        const SamplingConfig& cfg = {});
// Structure rules and super Jacobi, symbolic in the parameters and at their samples.
Report verify_algebra(const std::string& label, const SymbolicAlgebra& g, const SamplingConfig& cfg = {});
Report verify_catalog(const Catalog& cat, const SamplingConfig& cfg = {});

// Family containment in solve_duals of each listed algebra, every witness at
// each admissible sample point (at least three), and the forced entries.
Report verify_solutions(const Catalog& cat, const std::string& id);

// The swapped pair (dual read as primal, primal as dual) through every check.
Report verify_swapped(const CatalogEntry& e, const SamplingConfig& cfg = {});

}  // namespace lsb

#endif
