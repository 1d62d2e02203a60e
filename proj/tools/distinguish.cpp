// Command-line front end: distinguish action|graph|verify|fixture.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "distinguish/catalog.hpp"
#include "distinguish/error.hpp"
#include "distinguish/report.hpp"
#include "distinguish/verify.hpp"

namespace {

using namespace distinguish;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitPrecondition = 4;

Json load_document(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw InputError(path + ": cannot open");
    text << in.rdbuf();
  }
  return parse_json_text(text.str(), path == "-" ? "<stdin>" : path);
}

std::string fixture_names() {
  std::string out;
  for (const auto& a : named_actions())
    out += (out.empty() ? "" : ", ") + a.name;
  for (const auto& g : named_graphs())
    out += ", " + g.name;
  return out;
}

Json fixture_document(const std::string& name) {
  for (const auto& a : named_actions())
    if (a.name == name)
      return action_document(a.action);
  for (const auto& g : named_graphs())
    if (g.name == name)
      return graph_document(g.graph);
  throw InputError("unknown fixture \"" + name + "\"; available: " + fixture_names());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing numbers of finite group actions and graphs"};
  app.require_subcommand(1);

  std::string path;
  ActionRequest action_request;
  Label k_max = 0;
  auto* action_cmd = app.add_subcommand("action", "Analyse an action document");
  action_cmd->add_option("path", path, "Action document, or - for stdin")->required();
  action_cmd->add_flag("--exact", action_request.exact, "Exact distinguishing number");
  action_cmd->add_flag("--construct", action_request.construct, "Orbit-by-orbit construction trace");
  action_cmd->add_option("--kmax", k_max, "Largest label count to search")->check(CLI::PositiveNumber);

  GraphRequest graph_request;
  auto* graph_cmd = app.add_subcommand("graph", "Analyse a graph document");
  graph_cmd->add_option("path", path, "Graph document, or - for stdin")->required();
  graph_cmd->add_flag("--exact", graph_request.exact, "Exact distinguishing number");
  graph_cmd->add_flag("--tree", graph_request.tree, "Leaf-orbit tree labelling");
  graph_cmd->add_flag("--construct", graph_request.construct, "Construction on Aut(G)");
  graph_cmd->add_option("--max-vertices", graph_request.limits.max_vertices,
                        "Vertex limit for automorphism search")
      ->capture_default_str();
  graph_cmd->add_option("--element-cap", graph_request.limits.element_cap,
                        "Largest automorphism group enumerated")
      ->capture_default_str();

  std::string check = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("check", check, "all, or one check name")->capture_default_str();

  std::string fixture;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a named document");
  fixture_cmd->add_option("name", fixture, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*action_cmd) {
      if (k_max != 0)
        action_request.k_max = k_max;
      std::cout << action_report(load_document(path), action_request).dump(2) << "\n";
    } else if (*graph_cmd) {
      std::cout << graph_report(load_document(path), graph_request).dump(2) << "\n";
    } else if (*verify_cmd) {
      std::vector<CheckResult> results;
      if (check == "all")
        results = run_all();
      else
        results.push_back(run_check(check));
      bool all_passed = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all_passed = all_passed && r.passed;
      }
      return all_passed ? 0 : 1;
    } else if (*fixture_cmd) {
      std::cout << fixture_document(fixture).dump(2) << "\n";
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
