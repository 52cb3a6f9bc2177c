#pragma once
// Document-driven front end: a JSON workspace file declares the field, the
// deformation unit, the algebra relations, named modules and named map
// families; a Session realizes everything over the declared field and
// answers the queries the command-line tool exposes. All table output is
// CSV, dense `i,dim` rows over the computed window or sparse `i,j,dim` rows
// for bigraded tables.
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gorhom/field.hpp"
#include "gorhom/homology.hpp"

namespace gorhom {

// ------------------------------------------------------------- declarations
// Module declarations reference earlier names only, so realization is a
// single forward pass.
struct ModuleDecl {
  std::string type;  // image | cokernel | kernel | cyclic | free | sum |
                     // star_dual | matlis_dual | residue_field
  std::vector<int> row_degs, col_degs;             // matrix types
  std::vector<std::vector<std::string>> entries;   // row-major polynomials
  std::vector<std::string> annihilators;           // cyclic
  std::vector<int> generators;                     // free
  std::vector<std::string> of;                     // sum and dual references

  bool operator==(const ModuleDecl&) const = default;
};

struct FamilyDecl {
  std::string type;  // complex (bound symbol i) | cyclic (bound symbol q)
  std::vector<int> row_degs, col_degs;            // complex, degrees at index 0
  std::vector<std::vector<std::string>> entries;  // complex template
  std::vector<std::string> annihilators;          // cyclic template

  bool operator==(const FamilyDecl&) const = default;
};

struct WorkspaceDocument {
  FieldSpec field;
  std::string alpha = "1";
  int cap = 10;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, ModuleDecl>> modules;
  std::vector<std::pair<std::string, FamilyDecl>> families;
  int default_steps = 15;
  int default_window = 8;

  bool operator==(const WorkspaceDocument&) const = default;
};

// Parse and fully validate a document; schema violations carry the JSON
// pointer of the offending value. Every polynomial string is parsed and
// homogeneity-checked over the declared field.
WorkspaceDocument parse_document(const std::string& json_text);
WorkspaceDocument load_document(const std::string& path);
std::string serialize_document(const WorkspaceDocument& doc);

// ------------------------------------------------------------------ tables
std::string homology_totals_csv(const HomologyTable& t, int lo, int hi);
std::string homology_bigraded_csv(const HomologyTable& t, int lo, int hi);
HomologyTable parse_homology_csv(const std::string& text);

// ----------------------------------------------------------------- session
// One realized workspace. Construction builds the algebra and every module
// in document order; queries are by name.
class Session {
 public:
  explicit Session(WorkspaceDocument doc);
  ~Session();
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;

  const WorkspaceDocument& doc() const;

  // "dim=12 hilbert=1,5,5,1 gorenstein=true"
  std::string algebra_info() const;

  struct ResolveOutput {
    std::string csv;       // sparse betti rows i,j,dim
    std::string verdict;   // "linear" or "nonlinear", plus the series line
    bool series_checked = false;
    bool series_match = true;
  };
  // series spec "num|den" with comma-separated integer coefficient lists,
  // e.g. "2|1,-1" for 2/(1-t); empty string skips the comparison
  ResolveOutput resolve(const std::string& module, int steps,
                        const std::string& series = "") const;

  // functor is "ext" or "tor"
  std::string table_csv(const std::string& functor, const std::string& m,
                        const std::string& n, int steps, bool bigraded) const;
  std::string tate_csv(const std::string& functor, const std::string& family,
                       const std::string& n, int window) const;

  // one line per q: "q=3: nonzero={0,2,3} residues=n/a"
  std::string scan_lines(const std::string& family, const std::string& m, long long q_lo,
                         long long q_hi, int steps) const;

  // implementation detail, public so the per-field instantiations in the
  // translation unit can derive from it
  struct Ops;

 private:
  std::unique_ptr<Ops> ops;
};

// "Q" or "F<p>"
FieldSpec parse_field_spec(const std::string& s);

// machine-readable reproduction report (see scenario.hpp for the checklist)
struct ReproReport;
std::string report_json(const ReproReport& rep);

// Build the built-in scenario over the named field and run the checklist.
// `full` switches the execution windows to the literal stated depths.
ReproReport run_reproduction(const std::string& field, const std::string& alpha, int steps,
                             int window, bool full);

}  // namespace gorhom
