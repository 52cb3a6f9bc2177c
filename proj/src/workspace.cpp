// Document parsing/serialization, CSV emit/parse, and the field-dispatched
// Session. Schema errors carry JSON pointers so a bad file is fixable
// without reading this code.
#include "gorhom/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gorhom/scenario.hpp"
#include "gorhom/resolve.hpp"

namespace gorhom {

using J = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw input_error("schema error at " + (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const J& member(const J& j, const std::string& ptr, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing required member");
  return *it;
}

std::string get_string(const J& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

int get_int(const J& j, const std::string& ptr) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> get_string_array(const J& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_string(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

std::vector<int> get_int_array(const J& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

// row-major matrix of polynomial strings with a declared shape
std::vector<std::vector<std::string>> get_entries(const J& j, const std::string& ptr,
                                                  std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(ptr, "expected an array of rows");
  if (j.size() != rows)
    fail(ptr, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row = get_string_array(j[r], ptr + "/" + std::to_string(r));
    if (row.size() != cols)
      fail(ptr + "/" + std::to_string(r),
           "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    out.push_back(std::move(row));
  }
  return out;
}

void reject_unknown_keys(const J& j, const std::string& ptr,
                         std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) fail(ptr + "/" + it.key(), "unknown member");
  }
}

ModuleDecl parse_module_decl(const J& j, const std::string& ptr,
                             const std::set<std::string>& earlier) {
  if (!j.is_object()) fail(ptr, "expected an object");
  ModuleDecl d;
  d.type = get_string(member(j, ptr, "type"), ptr + "/type");
  if (d.type == "image" || d.type == "cokernel" || d.type == "kernel") {
    reject_unknown_keys(j, ptr, {"type", "row_degrees", "col_degrees", "entries"});
    d.row_degs = get_int_array(member(j, ptr, "row_degrees"), ptr + "/row_degrees");
    d.col_degs = get_int_array(member(j, ptr, "col_degrees"), ptr + "/col_degrees");
    if (d.row_degs.empty()) fail(ptr + "/row_degrees", "expected at least one generator degree");
    d.entries = get_entries(member(j, ptr, "entries"), ptr + "/entries", d.row_degs.size(),
                            d.col_degs.size());
  } else if (d.type == "cyclic") {
    reject_unknown_keys(j, ptr, {"type", "annihilators"});
    d.annihilators = get_string_array(member(j, ptr, "annihilators"), ptr + "/annihilators");
  } else if (d.type == "free") {
    reject_unknown_keys(j, ptr, {"type", "generators"});
    d.generators = get_int_array(member(j, ptr, "generators"), ptr + "/generators");
    if (d.generators.empty()) fail(ptr + "/generators", "expected at least one generator degree");
  } else if (d.type == "sum") {
    reject_unknown_keys(j, ptr, {"type", "of"});
    d.of = get_string_array(member(j, ptr, "of"), ptr + "/of");
    if (d.of.empty()) fail(ptr + "/of", "expected at least one summand");
    for (std::size_t i = 0; i < d.of.size(); ++i)
      if (!earlier.count(d.of[i]))
        fail(ptr + "/of/" + std::to_string(i),
             "references module '" + d.of[i] + "' which is not declared earlier");
  } else if (d.type == "star_dual" || d.type == "matlis_dual") {
    reject_unknown_keys(j, ptr, {"type", "of"});
    d.of = {get_string(member(j, ptr, "of"), ptr + "/of")};
    if (!earlier.count(d.of[0]))
      fail(ptr + "/of", "references module '" + d.of[0] + "' which is not declared earlier");
  } else if (d.type == "residue_field") {
    reject_unknown_keys(j, ptr, {"type"});
  } else {
    fail(ptr + "/type", "unknown module type '" + d.type + "'");
  }
  return d;
}

FamilyDecl parse_family_decl(const J& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  FamilyDecl d;
  d.type = get_string(member(j, ptr, "type"), ptr + "/type");
  if (d.type == "complex") {
    reject_unknown_keys(j, ptr, {"type", "row_degrees", "col_degrees", "entries"});
    d.row_degs = get_int_array(member(j, ptr, "row_degrees"), ptr + "/row_degrees");
    d.col_degs = get_int_array(member(j, ptr, "col_degrees"), ptr + "/col_degrees");
    if (d.row_degs.empty() || d.col_degs.empty())
      fail(ptr, "complex template needs row and column generator degrees");
    d.entries = get_entries(member(j, ptr, "entries"), ptr + "/entries", d.row_degs.size(),
                            d.col_degs.size());
  } else if (d.type == "cyclic") {
    reject_unknown_keys(j, ptr, {"type", "annihilators"});
    d.annihilators = get_string_array(member(j, ptr, "annihilators"), ptr + "/annihilators");
  } else {
    fail(ptr + "/type", "unknown family type '" + d.type + "'");
  }
  return d;
}

// every polynomial string parsed over the declared field, homogeneity
// included, so Session construction cannot hit a malformed expression
template <class F>
void check_document_polys(const F& fld, const WorkspaceDocument& doc) {
  typename F::Elem alpha;
  try {
    alpha = fld.from_string(doc.alpha);
  } catch (const Error& e) {
    fail("/alpha", e.what());
  }
  if (fld.is_zero(alpha)) fail("/alpha", "the deformation scalar must be a unit");

  PolyParser<F> plain(fld, doc.variables);
  plain.scalars["a"] = alpha;

  auto parse_at = [&](const PolyParser<F>& P, const std::string& src, const std::string& ptr) {
    try {
      Poly<F> p = P.parse(src);
      if (!p.homogeneous_degree()) fail(ptr, "polynomial is not homogeneous: '" + src + "'");
      return p;
    } catch (const ParseError& e) {
      fail(ptr, std::string(e.what()) + " in '" + src + "'");
    }
  };

  for (std::size_t i = 0; i < doc.relations.size(); ++i)
    parse_at(plain, doc.relations[i], "/relations/" + std::to_string(i));

  auto check_matrix = [&](const PolyParser<F>& P, const std::vector<int>& rd,
                          const std::vector<int>& cd,
                          const std::vector<std::vector<std::string>>& entries,
                          const std::string& ptr) {
    for (std::size_t r = 0; r < entries.size(); ++r)
      for (std::size_t c = 0; c < entries[r].size(); ++c) {
        const std::string eptr = ptr + "/" + std::to_string(r) + "/" + std::to_string(c);
        Poly<F> p = parse_at(P, entries[r][c], eptr);
        if (!p.is_zero() && *p.homogeneous_degree() != cd[c] - rd[r])
          fail(eptr, "entry must be homogeneous of degree " + std::to_string(cd[c] - rd[r]) +
                         ", got degree " + std::to_string(*p.homogeneous_degree()));
      }
  };

  for (const auto& [name, d] : doc.modules) {
    const std::string ptr = "/modules/" + name;
    if (d.type == "image" || d.type == "cokernel" || d.type == "kernel")
      check_matrix(plain, d.row_degs, d.col_degs, d.entries, ptr + "/entries");
    else if (d.type == "cyclic")
      for (std::size_t i = 0; i < d.annihilators.size(); ++i)
        parse_at(plain, d.annihilators[i], ptr + "/annihilators/" + std::to_string(i));
  }
  for (const auto& [name, d] : doc.families) {
    const std::string ptr = "/families/" + name;
    if (d.type == "complex") {
      PolyParser<F> P = plain;
      P.bound_ints["i"] = 0;
      check_matrix(P, d.row_degs, d.col_degs, d.entries, ptr + "/entries");
    } else {
      PolyParser<F> P = plain;
      P.bound_ints["q"] = 0;
      for (std::size_t i = 0; i < d.annihilators.size(); ++i)
        parse_at(P, d.annihilators[i], ptr + "/annihilators/" + std::to_string(i));
    }
  }
}

}  // namespace

FieldSpec parse_field_spec(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw input_error("bad field spec '" + s + "'; use Q or F<prime>");
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (p > (1ull << 62)) throw input_error("field modulus too large in '" + s + "'");
    }
    PrimeField check(p);  // validates primality
    return FieldSpec::prime(p);
  }
  throw input_error("bad field spec '" + s + "'; use Q or F<prime>");
}

WorkspaceDocument parse_document(const std::string& json_text) {
  J j;
  try {
    j = J::parse(json_text);
  } catch (const J::parse_error& e) {
    throw input_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected a JSON object");
  reject_unknown_keys(
      j, "", {"field", "alpha", "cap", "variables", "relations", "modules", "families",
              "defaults"});

  WorkspaceDocument doc;
  const J& jf = member(j, "", "field");
  if (!jf.is_object()) fail("/field", "expected an object");
  reject_unknown_keys(jf, "/field", {"kind", "p"});
  std::string kind = get_string(member(jf, "/field", "kind"), "/field/kind");
  if (kind == "Q") {
    if (jf.contains("p")) fail("/field/p", "the rational field takes no modulus");
    doc.field = FieldSpec::rationals();
  } else if (kind == "Fp") {
    std::uint64_t p = 0;
    const J& jp = member(jf, "/field", "p");
    if (!jp.is_number_unsigned() && !jp.is_number_integer()) fail("/field/p", "expected an integer");
    long long sp = jp.get<long long>();
    if (sp < 2) fail("/field/p", "expected a prime at least 2");
    p = static_cast<std::uint64_t>(sp);
    try {
      PrimeField check(p);
    } catch (const Error& e) {
      fail("/field/p", e.what());
    }
    doc.field = FieldSpec::prime(p);
  } else {
    fail("/field/kind", "unknown field kind '" + kind + "'; use Q or Fp");
  }

  if (j.contains("alpha")) doc.alpha = get_string(j["alpha"], "/alpha");
  if (j.contains("cap")) {
    doc.cap = get_int(j["cap"], "/cap");
    if (doc.cap < 1) fail("/cap", "degree cap must be at least 1");
  }

  doc.variables = get_string_array(member(j, "", "variables"), "/variables");
  if (doc.variables.empty()) fail("/variables", "expected at least one variable");
  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.variables.size(); ++i) {
      if (doc.variables[i].empty() || doc.variables[i] == "a" || doc.variables[i] == "i" ||
          doc.variables[i] == "q")
        fail("/variables/" + std::to_string(i),
             "variable name '" + doc.variables[i] + "' is empty or reserved");
      if (!seen.insert(doc.variables[i]).second)
        fail("/variables/" + std::to_string(i), "duplicate variable '" + doc.variables[i] + "'");
    }
  }
  doc.relations = get_string_array(member(j, "", "relations"), "/relations");

  if (j.contains("modules")) {
    const J& jm = j["modules"];
    if (!jm.is_object()) fail("/modules", "expected an object mapping names to declarations");
    std::set<std::string> earlier;
    for (auto it = jm.begin(); it != jm.end(); ++it) {
      doc.modules.emplace_back(it.key(),
                               parse_module_decl(it.value(), "/modules/" + it.key(), earlier));
      earlier.insert(it.key());
    }
  }
  if (j.contains("families")) {
    const J& jm = j["families"];
    if (!jm.is_object()) fail("/families", "expected an object mapping names to declarations");
    for (auto it = jm.begin(); it != jm.end(); ++it)
      doc.families.emplace_back(it.key(), parse_family_decl(it.value(), "/families/" + it.key()));
  }
  if (j.contains("defaults")) {
    const J& jd = j["defaults"];
    if (!jd.is_object()) fail("/defaults", "expected an object");
    reject_unknown_keys(jd, "/defaults", {"steps", "window"});
    if (jd.contains("steps")) {
      doc.default_steps = get_int(jd["steps"], "/defaults/steps");
      if (doc.default_steps < 0) fail("/defaults/steps", "expected a nonnegative integer");
    }
    if (jd.contains("window")) {
      doc.default_window = get_int(jd["window"], "/defaults/window");
      if (doc.default_window < 0) fail("/defaults/window", "expected a nonnegative integer");
    }
  }

  if (doc.field.kind == FieldSpec::Kind::Q)
    check_document_polys(RationalField{}, doc);
  else
    check_document_polys(PrimeField(doc.field.p), doc);
  return doc;
}

WorkspaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open document '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const WorkspaceDocument& doc) {
  J j;
  if (doc.field.kind == FieldSpec::Kind::Q)
    j["field"] = J{{"kind", "Q"}};
  else
    j["field"] = J{{"kind", "Fp"}, {"p", doc.field.p}};
  j["alpha"] = doc.alpha;
  j["cap"] = doc.cap;
  j["variables"] = doc.variables;
  j["relations"] = doc.relations;
  J jm = J::object();
  for (const auto& [name, d] : doc.modules) {
    J e{{"type", d.type}};
    if (d.type == "image" || d.type == "cokernel" || d.type == "kernel") {
      e["row_degrees"] = d.row_degs;
      e["col_degrees"] = d.col_degs;
      e["entries"] = d.entries;
    } else if (d.type == "cyclic") {
      e["annihilators"] = d.annihilators;
    } else if (d.type == "free") {
      e["generators"] = d.generators;
    } else if (d.type == "sum") {
      e["of"] = d.of;
    } else if (d.type == "star_dual" || d.type == "matlis_dual") {
      e["of"] = d.of[0];
    }
    jm[name] = std::move(e);
  }
  j["modules"] = std::move(jm);
  J jf = J::object();
  for (const auto& [name, d] : doc.families) {
    J e{{"type", d.type}};
    if (d.type == "complex") {
      e["row_degrees"] = d.row_degs;
      e["col_degrees"] = d.col_degs;
      e["entries"] = d.entries;
    } else {
      e["annihilators"] = d.annihilators;
    }
    jf[name] = std::move(e);
  }
  j["families"] = std::move(jf);
  j["defaults"] = J{{"steps", doc.default_steps}, {"window", doc.default_window}};
  return j.dump(2) + "\n";
}

// ------------------------------------------------------------------ tables
std::string homology_totals_csv(const HomologyTable& t, int lo, int hi) {
  std::ostringstream os;
  os << "i,dim\n";
  for (int i = lo; i <= hi; ++i) os << i << "," << t.total_at(i) << "\n";
  return os.str();
}

std::string homology_bigraded_csv(const HomologyTable& t, int lo, int hi) {
  std::ostringstream os;
  os << "i,j,dim\n";
  for (int i = lo; i <= hi; ++i) {
    if (i < t.lo_i || i > t.hi_i()) continue;
    for (const auto& [j, d] : t.graded[static_cast<std::size_t>(i - t.lo_i)])
      if (d != 0) os << i << "," << j << "," << d << "\n";
  }
  return os.str();
}

HomologyTable parse_homology_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw input_error("empty CSV");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  bool bigraded;
  if (line == "i,dim")
    bigraded = false;
  else if (line == "i,j,dim")
    bigraded = true;
  else
    throw input_error("bad CSV header '" + line + "'; expected i,dim or i,j,dim");

  std::vector<std::vector<long long>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    std::vector<long long> vals;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw input_error("bad CSV cell '" + cell + "' on line " + std::to_string(lineno));
      }
    }
    if (vals.size() != (bigraded ? 3u : 2u))
      throw input_error("bad CSV row on line " + std::to_string(lineno));
    rows.push_back(std::move(vals));
  }

  HomologyTable t;
  if (rows.empty()) return t;
  int lo = static_cast<int>(rows[0][0]), hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, static_cast<int>(r[0]));
    hi = std::max(hi, static_cast<int>(r[0]));
  }
  t.lo_i = lo;
  t.graded.assign(static_cast<std::size_t>(hi - lo + 1), {});
  for (const auto& r : rows) {
    auto& row = t.graded[static_cast<std::size_t>(r[0] - lo)];
    if (bigraded) {
      if (r[2] != 0) row[static_cast<int>(r[1])] += r[2];
    } else if (r[1] != 0) {
      row[0] += r[1];
    }
  }
  return t;
}

// ----------------------------------------------------------------- session
struct Session::Ops {
  WorkspaceDocument document;
  virtual ~Ops() = default;
  virtual std::string algebra_info() const = 0;
  virtual Session::ResolveOutput resolve(const std::string&, int, const std::string&) const = 0;
  virtual std::string table_csv(const std::string&, const std::string&, const std::string&, int,
                                bool) const = 0;
  virtual std::string tate_csv(const std::string&, const std::string&, const std::string&,
                               int) const = 0;
  virtual std::string scan_lines(const std::string&, const std::string&, long long, long long,
                                 int) const = 0;
};

namespace {

// "num|den" with comma-separated integer coefficients
std::pair<std::vector<long long>, std::vector<long long>> parse_series_spec(
    const std::string& spec) {
  auto bar = spec.find('|');
  if (bar == std::string::npos)
    throw input_error("bad series spec '" + spec + "'; use num|den, e.g. 2|1,-1");
  auto parse_list = [&](const std::string& part) {
    std::vector<long long> out;
    std::istringstream ls(part);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw input_error("bad coefficient '" + cell + "' in series spec '" + spec + "'");
      }
    }
    if (out.empty()) throw input_error("empty coefficient list in series spec '" + spec + "'");
    return out;
  };
  return {parse_list(spec.substr(0, bar)), parse_list(spec.substr(bar + 1))};
}

std::string joined(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

template <class F>
struct SessionImpl final : Session::Ops {
  F fld;
  typename F::Elem alpha;
  long long s = 0;
  GradedAlgebra<F> A;
  std::vector<std::pair<std::string, GradedModule<F>>> mods;

  SessionImpl(WorkspaceDocument d, F f) : fld(f) {
    document = std::move(d);
    alpha = fld.from_string(document.alpha);
    s = order_of_unit(fld, alpha);

    PolyParser<F> P(fld, document.variables);
    P.scalars["a"] = alpha;
    std::vector<Poly<F>> rels;
    for (const auto& r : document.relations) rels.push_back(P.parse(r));
    A = build_algebra(fld, document.variables, std::move(rels), document.cap);

    for (const auto& [name, decl] : document.modules) {
      try {
        mods.emplace_back(name, realize_decl(decl, name));
      } catch (const Error& e) {
        if (e.kind == Error::Kind::Input)
          throw input_error("module '" + name + "': " + e.what());
        throw;
      }
    }
  }

  PolyParser<F> parser() const {
    PolyParser<F> P(fld, document.variables);
    P.scalars["a"] = alpha;
    return P;
  }

  PolyMat<F> build_matrix(const std::vector<int>& rd, const std::vector<int>& cd,
                          const std::vector<std::vector<std::string>>& entries,
                          const PolyParser<F>& P) const {
    PolyMat<F> m = PolyMat<F>::make(rd, cd);
    for (long r = 0; r < m.rows(); ++r)
      for (long c = 0; c < m.cols(); ++c)
        m.at(r, c) = P.parse(entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return m;
  }

  const GradedModule<F>& find_module(const std::string& name) const {
    for (const auto& [n, m] : mods)
      if (n == name) return m;
    std::string known;
    for (const auto& [n, m] : mods) known += (known.empty() ? "" : ", ") + n;
    throw input_error("unknown module '" + name + "'; declared: " +
                      (known.empty() ? std::string("none") : known));
  }

  const FamilyDecl& find_family(const std::string& name, const std::string& want_type) const {
    for (const auto& [n, f] : document.families)
      if (n == name) {
        if (f.type != want_type)
          throw input_error("family '" + name + "' has type '" + f.type + "', expected '" +
                            want_type + "'");
        return f;
      }
    throw input_error("unknown family '" + name + "'");
  }

  GradedModule<F> realize_decl(const ModuleDecl& d, const std::string& name) const {
    PolyParser<F> P = parser();
    if (d.type == "image")
      return realize_image(A, build_matrix(d.row_degs, d.col_degs, d.entries, P), name);
    if (d.type == "cokernel")
      return realize_cokernel(A, build_matrix(d.row_degs, d.col_degs, d.entries, P), name);
    if (d.type == "kernel")
      return realize_kernel(A, build_matrix(d.row_degs, d.col_degs, d.entries, P), name);
    if (d.type == "cyclic") {
      std::vector<Poly<F>> gens;
      for (const auto& g : d.annihilators) gens.push_back(P.parse(g));
      return cyclic_quotient(A, gens, name);
    }
    if (d.type == "free") return realize_free(A, d.generators, name);
    if (d.type == "sum") {
      std::vector<const GradedModule<F>*> parts;
      for (const auto& n : d.of) parts.push_back(&find_module(n));
      return direct_sum(A, parts, name);
    }
    if (d.type == "star_dual") return star_dual(A, presentation_of(find_module(d.of[0])), name);
    if (d.type == "matlis_dual") return matlis_dual(find_module(d.of[0]), name);
    if (d.type == "residue_field") {
      std::vector<Poly<F>> vars;
      for (const auto& v : document.variables) vars.push_back(P.parse(v));
      return cyclic_quotient(A, vars, name);
    }
    throw internal_error("unhandled module type '" + d.type + "'");
  }

  // family differential at one index: generator degrees shift with the index
  PolyMat<F> family_map(const FamilyDecl& f, long long i) const {
    PolyParser<F> P = parser();
    P.bound_ints["i"] = i;
    std::vector<int> rd = f.row_degs, cd = f.col_degs;
    for (int& x : rd) x += static_cast<int>(i);
    for (int& x : cd) x += static_cast<int>(i);
    return build_matrix(rd, cd, f.entries, P);
  }

  std::string algebra_info() const override {
    std::ostringstream os;
    os << "dim=" << A.total_dim() << " hilbert=" << joined(A.hilbert())
       << " gorenstein=" << (A.is_gorenstein() ? "true" : "false");
    return os.str();
  }

  int effective_steps(int steps) const { return steps < 0 ? document.default_steps : steps; }

  Session::ResolveOutput resolve(const std::string& module, int steps,
                                 const std::string& series) const override {
    steps = effective_steps(steps);
    const GradedModule<F>& M = find_module(module);
    FreeResolution<F> res = minimal_free_resolution(M, steps);
    BettiTable t = res.betti();

    Session::ResolveOutput out;
    std::ostringstream csv;
    csv << "i,j,dim\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (const auto& [j, b] : t.rows[i])
        if (b != 0) csv << i << "," << j << "," << b << "\n";
    out.csv = csv.str();

    int first = 0;
    if (!res.gen_degs[0].empty())
      first = *std::min_element(res.gen_degs[0].begin(), res.gen_degs[0].end());
    out.verdict = resolution_is_linear(t, first) ? "linear" : "nonlinear";

    if (!series.empty()) {
      auto [num, den] = parse_series_spec(series);
      auto expect = series_expand(num, den, steps + 1);
      std::vector<long> want(expect.begin(), expect.end());
      std::vector<long> got;
      for (int i = 0; i <= steps; ++i) got.push_back(t.total(static_cast<std::size_t>(i)));
      out.series_checked = true;
      out.series_match = want == got;
      out.verdict += out.series_match
                         ? "; series match: " + joined(got)
                         : "; series mismatch: expected " + joined(want) + " actual " + joined(got);
    }
    return out;
  }

  std::string table_csv(const std::string& functor, const std::string& m, const std::string& n,
                        int steps, bool bigraded) const override {
    steps = effective_steps(steps);
    if (functor != "ext" && functor != "tor")
      throw input_error("unknown functor '" + functor + "'; use ext or tor");
    const GradedModule<F>& M = find_module(m);
    const GradedModule<F>& N = find_module(n);
    FreeResolution<F> res = minimal_free_resolution(M, steps + 1);
    HomologyTable t = functor == "ext" ? ext_table(res, N, steps) : tor_table(res, N, steps);
    return bigraded ? homology_bigraded_csv(t, 0, steps) : homology_totals_csv(t, 0, steps);
  }

  std::string tate_csv(const std::string& functor, const std::string& family,
                       const std::string& n, int window) const override {
    if (window < 0) window = document.default_window;
    if (functor != "ext" && functor != "tor")
      throw input_error("unknown functor '" + functor + "'; use ext or tor");
    const FamilyDecl& fam = find_family(family, "complex");
    const GradedModule<F>& N = find_module(n);
    std::vector<PolyMat<F>> maps;
    for (int i = -window; i <= window + 1; ++i) maps.push_back(family_map(fam, i));
    HomologyTable t = functor == "ext" ? complex_hom_homology(maps, -window, N)
                                       : complex_tensor_homology(maps, -window, N);
    return homology_totals_csv(t, -window, window);
  }

  std::string scan_lines(const std::string& family, const std::string& m, long long q_lo,
                         long long q_hi, int steps) const override {
    steps = effective_steps(steps);
    if (q_lo > q_hi) throw input_error("empty scan range");
    const FamilyDecl& fam = find_family(family, "cyclic");
    const GradedModule<F>& M = find_module(m);
    FreeResolution<F> res = minimal_free_resolution(M, steps + 1);

    std::ostringstream os;
    for (long long q = q_lo; q <= q_hi; ++q) {
      PolyParser<F> P = parser();
      P.bound_ints["q"] = q;
      std::vector<Poly<F>> gens;
      for (const auto& g : fam.annihilators) gens.push_back(P.parse(g));
      GradedModule<F> Tq = cyclic_quotient(A, gens, "T" + std::to_string(q));
      HomologyTable t = ext_table(res, Tq, steps);

      std::vector<int> nz;
      for (int i : t.nonzero_indices())
        if (i <= steps) nz.push_back(i);
      os << "q=" << q << ": nonzero={";
      for (std::size_t k = 0; k < nz.size(); ++k) os << (k ? "," : "") << nz[k];
      os << "} residues=";
      if (s == 0) {
        os << "n/a";
      } else {
        std::set<long long> rs;
        for (int i : nz)
          if (i >= 1) rs.insert(((i % s) + s) % s);
        os << "{";
        bool first = true;
        for (long long r : rs) {
          os << (first ? "" : ",") << r;
          first = false;
        }
        os << "}";
      }
      os << "\n";
    }
    return os.str();
  }
};

}  // namespace

Session::Session(WorkspaceDocument doc) {
  const FieldSpec spec = doc.field;
  if (spec.kind == FieldSpec::Kind::Q)
    ops = std::make_unique<SessionImpl<RationalField>>(std::move(doc), RationalField{});
  else
    ops = std::make_unique<SessionImpl<PrimeField>>(std::move(doc), PrimeField(spec.p));
}

Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

const WorkspaceDocument& Session::doc() const { return ops->document; }
std::string Session::algebra_info() const { return ops->algebra_info(); }
Session::ResolveOutput Session::resolve(const std::string& module, int steps,
                                        const std::string& series) const {
  return ops->resolve(module, steps, series);
}
std::string Session::table_csv(const std::string& functor, const std::string& m,
                               const std::string& n, int steps, bool bigraded) const {
  return ops->table_csv(functor, m, n, steps, bigraded);
}
std::string Session::tate_csv(const std::string& functor, const std::string& family,
                              const std::string& n, int window) const {
  return ops->tate_csv(functor, family, n, window);
}
std::string Session::scan_lines(const std::string& family, const std::string& m, long long q_lo,
                                long long q_hi, int steps) const {
  return ops->scan_lines(family, m, q_lo, q_hi, steps);
}

}  // namespace gorhom
