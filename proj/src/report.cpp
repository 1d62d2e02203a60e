#include "distinguish/report.hpp"

#include <chrono>
#include <stdexcept>

#include "distinguish/construction.hpp"

namespace distinguish {

namespace {

Json labels_json(const Labelling& phi) {
  Json out = Json::array();
  for (Label l : phi.labels())
    out.push_back(l);
  return out;
}

Json points_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (Point p : points)
    out.push_back(p);
  return out;
}

void ensure_distinguishing(const GroupAction& action, const Labelling& phi, const char* what) {
  if (!is_distinguishing(action, phi).distinguishing)
    throw std::logic_error(std::string(what) + " labelling failed verification");
}

Json exact_section(const GroupAction& action, std::optional<Label> k_max) {
  SolveResult result = exact_distinguishing_number(action, k_max);
  Json out;
  out["k_max"] = result.k_max;
  if (result.found()) {
    ensure_distinguishing(action, *result.witness, "exact");
    out["distinguishing_number"] = result.k;
    out["witness"] = labels_json(*result.witness);
  } else {
    out["distinguishing_number"] = nullptr;
    out["exceeds_k_max"] = true;
  }
  return out;
}

Json construction_section(const GroupAction& action) {
  ConstructionTrace trace = run_construction(action);
  if (auto why = validate_trace(trace); !why.empty())
    throw std::logic_error("construction trace invalid: " + why);
  ensure_distinguishing(action, trace.labelling, "construction");
  Json out;
  out["label_count"] = trace.label_count();
  out["factorial_bound"] = factorial_bound(action.order());
  out["labelling"] = labels_json(trace.labelling);
  out["stages"] = Json::array();
  for (const auto& stage : trace.stages) {
    Json s;
    s["group_order"] = stage.group.order();
    s["remaining"] = points_json(stage.remaining);
    s["chosen"] = points_json(stage.chosen);
    out["stages"].push_back(std::move(s));
  }
  out["final_group_order"] = trace.final_group.order();
  WitnessChain chain = extract_witness_chain(trace);
  out["chain"] = points_json(chain.points);
  LowerBoundReport bound = verify_lower_bound(trace, chain);
  Json b;
  b["orbit_sizes"] = bound.orbit_sizes;
  b["final_orbit_size"] = bound.final_orbit_size;
  b["final_stabilizer_size"] = bound.final_stabilizer_size;
  b["product"] = bound.product;
  b["group_order"] = bound.group_order;
  b["holds"] = bound.holds();
  out["bound"] = std::move(b);
  return out;
}

Json action_summary(const GroupAction& action) {
  Json out;
  out["group_order"] = action.order();
  out["domain_size"] = action.domain_size();
  out["kernel_order"] = action.kernel_indices().size();
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Json action_report(const Json& input, const ActionRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  GroupAction action = parse_action_document(input);
  Json report;
  report["input_digest"] = digest(input);
  report["kind"] = "action";
  report["action"] = action_summary(action);
  if (request.exact || !request.construct)
    report["exact"] = exact_section(action, request.k_max);
  if (request.construct)
    report["construction"] = construction_section(action);
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

Json graph_report(const Json& input, const GraphRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = parse_graph_document(input);
  Json report;
  report["input_digest"] = digest(input);
  report["kind"] = "graph";
  report["vertices"] = g.vertex_count();
  report["edges"] = g.edges().size();
  report["max_degree"] = g.max_degree();

  if (request.tree) {
    TreeLabelling result = tree_labelling_with_decoration(g, request.limits);
    GroupAction action = graph_action(g, request.limits);
    ensure_distinguishing(action, result.labelling, "tree");
    Json t;
    t["label_count"] = result.labelling.distinct_labels();
    t["bound"] = std::max<std::size_t>(g.max_degree(), 2);
    t["labelling"] = labels_json(result.labelling);
    t["leaf_orbits"] = result.decoration.leaf_orbit_sequence;
    report["tree"] = std::move(t);
  }
  const bool exact = request.exact || (!request.tree && !request.construct);
  if (exact || request.construct) {
    GroupAction action = graph_action(g, request.limits);
    report["action"] = action_summary(action);
    if (exact)
      report["exact"] = exact_section(action, std::nullopt);
    if (request.construct)
      report["construction"] = construction_section(action);
  }
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

}  // namespace distinguish
