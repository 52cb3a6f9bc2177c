// Command-line front end. Talks to the engine exclusively through the C
// interface; every subcommand maps onto one call. Exit codes: 0 success,
// 1 failed check, 2 input error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gorhom.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { gh_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct SessionGuard {
  gh_session* s = nullptr;
  ~SessionGuard() { gh_session_close(s); }
};

int fail_input(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return GH_INPUT_ERROR;
}

int report_status(int rc) {
  if (rc != GH_OK) std::cerr << "error: " << gh_last_error() << "\n";
  return rc;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return GH_OK;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return fail_input("cannot write to '" + out_path + "'");
  out << text;
  return GH_OK;
}

// "a..b" with signed bounds
bool parse_range(const std::string& spec, long long& lo, long long& hi) {
  auto dots = spec.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stoll(spec.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = spec.substr(dots + 2);
    hi = std::stoll(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-algebra workbench: exact resolutions, ext/tor tables, "
               "complete-resolution windows, vanishing-pattern scans"};
  app.require_subcommand(1);

  std::string file, out_path;
  std::string module_name, m_name = "M", n_name, family, functor = "tor", series, q_range;
  std::string field, alpha;
  int steps = -1, window = -1;
  bool bigraded = false, full = false;

  auto* algebra = app.add_subcommand("algebra", "summarize the declared algebra");
  algebra->add_option("--file", file, "workspace document")->required();
  std::string action;
  algebra->add_option("action", action, "what to print (info)")->required();
  algebra->add_option("--out", out_path, "write to file instead of stdout");

  auto* resolve = app.add_subcommand("resolve", "minimal free resolution of a module");
  resolve->add_option("--file", file, "workspace document")->required();
  resolve->add_option("--module", module_name, "module name")->required();
  resolve->add_option("--steps", steps, "homological depth (default from document)");
  resolve->add_option("--series", series,
                      "compare betti totals against num|den, e.g. 2|1,-1 for 2/(1-t)");
  resolve->add_option("--out", out_path, "write the CSV to file instead of stdout");

  auto* ext = app.add_subcommand("ext", "extension dimension table");
  auto* tor = app.add_subcommand("tor", "torsion dimension table");
  for (auto* cmd : {ext, tor}) {
    cmd->add_option("--file", file, "workspace document")->required();
    cmd->add_option("--M", m_name, "resolved module")->required();
    cmd->add_option("--N", n_name, "argument module")->required();
    cmd->add_option("--steps", steps, "table depth (default from document)");
    cmd->add_flag("--bigraded", bigraded, "emit sparse i,j,dim rows");
    cmd->add_option("--out", out_path, "write the CSV to file instead of stdout");
  }

  auto* tate = app.add_subcommand("tate", "stable table over a complete-resolution window");
  tate->add_option("--file", file, "workspace document")->required();
  tate->add_option("--N", n_name, "argument module")->required();
  tate->add_option("--window", window, "half-window (default from document)");
  tate->add_option("--functor", functor, "tor or ext")->check(CLI::IsMember({"tor", "ext"}));
  tate->add_option("--family", family, "complex family name")->default_val("C");
  tate->add_option("--out", out_path, "write the CSV to file instead of stdout");

  auto* scan = app.add_subcommand("scan", "vanishing patterns across a cyclic family");
  scan->add_option("--file", file, "workspace document")->required();
  scan->add_option("--family", family, "cyclic family name")->required();
  scan->add_option("--q-range", q_range, "parameter range a..b")->required();
  scan->add_option("--M", m_name, "resolved module (default M)");
  scan->add_option("--steps", steps, "table depth (default from document)");
  scan->add_option("--out", out_path, "write to file instead of stdout");

  auto* reproduce = app.add_subcommand("reproduce", "run the built-in reproduction checklist");
  reproduce->add_option("--field", field, "Q or F<prime>")->required();
  reproduce->add_option("--alpha", alpha, "deformation unit, e.g. 2 or 3/5")->required();
  reproduce->add_option("--steps", steps, "homological depth")->default_val(15);
  reproduce->add_option("--window", window, "stable half-window")->default_val(8);
  reproduce->add_flag("--full", full, "use the literal stated depth windows");
  reproduce->add_option("--out", out_path, "write the report to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return GH_OK;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GH_INPUT_ERROR;
  }

  if (reproduce->parsed()) {
    Owned json;
    int rc = gh_reproduce(field.c_str(), alpha.c_str(), steps, window, full ? 1 : 0, &json.p);
    if (rc == GH_INPUT_ERROR) return report_status(rc);
    if (int wrc = write_output(json.str(), out_path); wrc != GH_OK) return wrc;
    if (rc == GH_CHECK_FAIL) std::cerr << "error: " << gh_last_error() << "\n";
    return rc;
  }

  SessionGuard session;
  if (int rc = gh_session_open(file.c_str(), &session.s); rc != GH_OK) return report_status(rc);

  if (algebra->parsed()) {
    if (action != "info") return fail_input("unknown action '" + action + "'; supported: info");
    Owned info;
    if (int rc = gh_algebra_info(session.s, &info.p); rc != GH_OK) return report_status(rc);
    return write_output(info.str() + "\n", out_path);
  }

  if (resolve->parsed()) {
    Owned csv, verdict;
    int rc = gh_resolve(session.s, module_name.c_str(), steps,
                        series.empty() ? nullptr : series.c_str(), &csv.p, &verdict.p);
    if (rc == GH_INPUT_ERROR) return report_status(rc);
    if (int wrc = write_output(csv.str(), out_path); wrc != GH_OK) return wrc;
    std::cerr << verdict.str() << "\n";
    return rc;
  }

  if (ext->parsed() || tor->parsed()) {
    Owned csv;
    int rc = gh_table(session.s, ext->parsed() ? "ext" : "tor", m_name.c_str(), n_name.c_str(),
                      steps, bigraded ? 1 : 0, &csv.p);
    if (rc != GH_OK) return report_status(rc);
    return write_output(csv.str(), out_path);
  }

  if (tate->parsed()) {
    Owned csv;
    int rc = gh_tate(session.s, functor.c_str(), family.c_str(), n_name.c_str(), window, &csv.p);
    if (rc != GH_OK) return report_status(rc);
    return write_output(csv.str(), out_path);
  }

  if (scan->parsed()) {
    long long q_lo = 0, q_hi = 0;
    if (!parse_range(q_range, q_lo, q_hi))
      return fail_input("bad --q-range '" + q_range + "'; use a..b");
    Owned lines;
    int rc = gh_scan(session.s, family.c_str(), m_name.c_str(), q_lo, q_hi, steps, &lines.p);
    if (rc != GH_OK) return report_status(rc);
    return write_output(lines.str(), out_path);
  }

  return fail_input("no subcommand");
}
