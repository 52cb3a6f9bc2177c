// Reproduction entry point: build the built-in scenario over the requested
// field and emit the checklist as JSON.
#include "json.hpp"

#include "gorhom/scenario.hpp"
#include "gorhom/workspace.hpp"

namespace gorhom {

std::string report_json(const ReproReport& rep) {
  nlohmann::ordered_json j;
  j["field"] = rep.field;
  j["alpha"] = rep.alpha;
  j["order"] = rep.s;
  j["steps"] = rep.steps;
  j["window"] = rep.window;
  j["full_windows"] = rep.full_windows;
  j["all_pass"] = rep.all_pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["pass"] = c.pass;
    e["provenance"] = c.provenance;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

ReproReport run_reproduction(const std::string& field, const std::string& alpha, int steps,
                             int window, bool full) {
  if (steps < 1) throw input_error("reproduction needs at least one homological step");
  if (window < 1) throw input_error("reproduction needs a positive half-window");
  FieldSpec spec = parse_field_spec(field);
  WindowPlan plan = full ? WindowPlan::literal() : WindowPlan::reduced();
  if (spec.kind == FieldSpec::Kind::Q) {
    RationalField f;
    auto sc = build_scenario(f, f.from_string(alpha));
    return reproduce_all(sc, steps, window, plan);
  }
  PrimeField f(spec.p);
  auto sc = build_scenario(f, f.from_string(alpha));
  return reproduce_all(sc, steps, window, plan);
}

}  // namespace gorhom
