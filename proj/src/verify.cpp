#include "distinguish/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "distinguish/catalog.hpp"
#include "distinguish/construction.hpp"
#include "distinguish/error.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/random.hpp"

namespace distinguish {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename... Parts>
void require(bool ok, const Parts&... parts) {
  if (ok)
    return;
  std::ostringstream out;
  (out << ... << parts);
  throw CheckFailure(out.str());
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::vector<GroupAction> random_actions(const VerifyOptions& options, std::size_t count) {
  Rng rng(options.seed);
  std::vector<GroupAction> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_action(rng));
  return out;
}

// Named actions whose exact D is cheap to compute.
std::vector<NamedAction> small_named_actions() {
  auto all = named_actions();
  std::erase_if(all, [](const NamedAction& a) { return a.action.domain_size() > 24; });
  return all;
}

AutomorphismLimits figure_limits() { return {14, kDefaultElementCap}; }

std::size_t orbit_of_cycle_type(const GroupAction& conj, const std::vector<std::size_t>& type) {
  const auto& g = conj.group();
  std::size_t count = 0;
  for (const Perm& p : g.elements())
    if (cycle_type(p) == type)
      ++count;
  return count;
}

std::string check_orbit_stabilizer(const VerifyOptions& options) {
  std::vector<GroupAction> actions;
  for (auto& a : small_named_actions())
    actions.push_back(a.action);
  for (auto& a : random_actions(options, options.random_actions))
    actions.push_back(a);
  std::size_t points = 0;
  for (const auto& action : actions) {
    for (Point x = 0; x < action.domain_size(); ++x) {
      std::size_t orbit_size = orbit(action, x).size();
      std::size_t stab_size = pointwise_stabilizer_indices(action, {&x, 1}).size();
      require(orbit_size * stab_size == action.order(), "|G.x| |Stab(x)| = ", orbit_size, " * ",
              stab_size, " != |G| = ", action.order());
      ++points;
    }
  }
  return std::to_string(actions.size()) + " actions, " + std::to_string(points) + " points";
}

std::string check_trivial_action(const VerifyOptions& options) {
  std::vector<GroupAction> actions;
  for (auto& a : small_named_actions())
    actions.push_back(a.action);
  for (auto& a : random_actions(options, options.random_actions))
    actions.push_back(a);
  actions.push_back(trivial_action(symmetric_group(4), 5));
  actions.push_back(trivial_action(cyclic_group(5), 1));
  std::size_t trivial = 0;
  for (const auto& action : actions) {
    Label d = exact_distinguishing_number(action).k;
    require((d == 1) == action.is_trivial(), "D = ", d, " but trivial = ", action.is_trivial());
    if (action.is_trivial())
      require(is_distinguishing(action, Labelling::constant(action.domain_size())).distinguishing,
              "constant labelling fails on a trivial action");
    trivial += action.is_trivial();
  }
  return std::to_string(actions.size()) + " actions, " + std::to_string(trivial) +
         " trivial, D = 1 exactly on those";
}

std::string check_translation(const VerifyOptions& options) {
  std::vector<PermGroup> groups = {cyclic_group(2), cyclic_group(4), symmetric_group(3),
                                   cyclic_group(7), symmetric_group(4)};
  Rng rng(options.seed + 1);
  while (groups.size() < 15) {
    auto a = random_action(rng, {5, 2, 10, 60});
    if (a.order() >= 2)
      groups.push_back(a.group());
  }
  for (const auto& group : groups) {
    GroupAction action = translation_action(group);
    require(action.is_faithful(), "translation action not faithful");
    std::vector<Label> labels(group.order(), 1);
    labels[group.identity_index()] = 2;
    require(is_distinguishing(action, Labelling(labels, 2)).distinguishing,
            "identity-marked labelling fails for a group of order ", group.order());
    if (group.order() <= 24) {
      Label d = exact_distinguishing_number(action).k;
      require(d == 2, "D = ", d, " for translation by a group of order ", group.order());
    }
  }
  Label trivial = exact_distinguishing_number(translation_action(PermGroup::generate(1, {}))).k;
  require(trivial == 1, "trivial group translation gives D = ", trivial);
  return std::to_string(groups.size()) + " groups, D = 2 each; trivial group D = 1";
}

std::string check_orbit_induction(const VerifyOptions& options) {
  // The Figure 3 split, (1 2) -> 2 on the transpositions, does not
  // distinguish that orbit on its own, so the gluing must refuse it.
  GroupAction conj = conjugation_action(3);
  const PermGroup& s3 = conj.group();
  const Point t12 = static_cast<Point>(*s3.index_of(Perm::from_cycles(3, "(1 2)")));
  auto transpositions = orbit(conj, t12);
  std::vector<Label> on_orbit;
  for (Point x : transpositions)
    on_orbit.push_back(x == t12 ? 2 : 1);
  std::vector<Point> rest;
  for (Point x = 0; x < conj.domain_size(); ++x)
    if (!std::binary_search(transpositions.begin(), transpositions.end(), x))
      rest.push_back(x);
  std::vector<Label> on_rest(rest.size(), 1);
  on_rest.front() = 2;
  bool refused = false;
  try {
    combine_orbit_labellings(conj, transpositions, Labelling(on_orbit, 2), Labelling(on_rest, 2));
  } catch (const PreconditionError&) {
    refused = true;
  }
  require(refused, "non-distinguishing orbit labelling accepted");

  std::size_t glued_count = 0;
  for (const auto& action : random_actions(options, options.random_actions)) {
    auto partition = orbit_partition(action);
    if (partition.size() < 2)
      continue;
    const auto& block = partition.blocks.front();
    std::vector<Point> complement;
    for (Point x = 0; x < action.domain_size(); ++x)
      if (!std::binary_search(block.begin(), block.end(), x))
        complement.push_back(x);
    auto first = exact_distinguishing_number(action.restrict_to_subset(block));
    auto second = exact_distinguishing_number(action.restrict_to_subset(complement));
    Labelling result = combine_orbit_labellings(action, block, *first.witness, *second.witness);
    require(is_distinguishing(action, result).distinguishing, "glued labelling not distinguishing");
    require(result.label_count() <= std::max(first.k, second.k), "glued labelling uses ",
            result.label_count(), " labels, more than max(", first.k, ", ", second.k, ")");
    ++glued_count;
  }
  return std::to_string(glued_count) + " gluings distinguishing; non-distinguishing part refused";
}

std::string check_relatively_prime(const VerifyOptions&) {
  std::size_t cases = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    GroupAction conj = conjugation_action(n);
    const PermGroup& sn = conj.group();
    std::string full = "(";
    std::string shifted = "(";
    for (std::size_t i = 1; i <= n; ++i) {
      full += std::to_string(i) + (i < n ? " " : ")");
      if (i >= 2)
        shifted += std::to_string(i) + (i < n ? " " : ")");
    }
    auto o1 = orbit(conj, static_cast<Point>(*sn.index_of(Perm::from_cycles(n, full))));
    auto o2 = orbit(conj, static_cast<Point>(*sn.index_of(Perm::from_cycles(n, shifted))));
    require(std::gcd(sn.order() / o1.size(), sn.order() / o2.size()) == 1,
            "stabilizer orders not coprime for n = ", n);
    Labelling phi = relatively_prime_orbit_labelling(conj, o1, o2);
    require(is_distinguishing(conj, phi).distinguishing, "n = ", n, " labelling fails");
    ++cases;
  }
  // Z_6 on Z_2 and Z_3 cosets: stabilizers of order 3 and 2.
  GroupAction z6 = GroupAction::from_element_map(cyclic_group(6), 5, [](const Perm& g) {
    Point shift = g(0);
    std::vector<Point> image = {static_cast<Point>(shift % 2), static_cast<Point>(1 - shift % 2),
                                0, 0, 0};
    for (Point i = 0; i < 3; ++i)
      image[2 + i] = 2 + (i + shift) % 3;
    return Perm(image);
  });
  Labelling phi = relatively_prime_orbit_labelling(z6, std::vector<Point>{0, 1},
                                                   std::vector<Point>{2, 3, 4});
  require(is_distinguishing(z6, phi).distinguishing, "Z_6 labelling fails");
  ++cases;

  bool rejected = false;
  try {
    GroupAction s4 = natural_action(4, 0);
    std::vector<Point> all = {0, 1, 2, 3};
    relatively_prime_orbit_labelling(s4, all, all);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  require(rejected, "gcd-violating pair accepted");
  return std::to_string(cases) + " coprime pairs distinguished; gcd violation rejected";
}

std::string check_conjugation(const VerifyOptions&) {
  std::ostringstream summary;
  for (std::size_t n = 3; n <= 6; ++n) {
    GroupAction conj = conjugation_action(n);
    const PermGroup& sn = conj.group();
    auto partition = orbit_partition(conj);
    std::size_t total = 0;
    for (const auto& block : partition.blocks) {
      total += block.size();
      require(orbit_of_cycle_type(conj, cycle_type(sn.element(block.front()))) == block.size(),
              "orbit is not a full cycle-type class for n = ", n);
    }
    require(total == factorial(n), "class sizes do not sum to n!");

    std::vector<std::size_t> n_cycle = {n};
    std::vector<std::size_t> shifted = {n - 1, 1};
    require(orbit_of_cycle_type(conj, n_cycle) == factorial(n - 1), "n-cycle class size");
    require(orbit_of_cycle_type(conj, shifted) == n * factorial(n - 2), "(n-1)-cycle class size");

    if (n <= 4) {
      Label d = exact_distinguishing_number(conj).k;
      require(d == 2, "exact D = ", d, " for n = ", n);
      summary << "n=" << n << ": D=2 exact; ";
    } else {
      require(!conj.is_trivial(), "conjugation is trivial");
      summary << "n=" << n << ": 2-labelling verified; ";
    }
  }
  // Stabilizer sizes at n = 4.
  GroupAction conj = conjugation_action(4);
  const auto& s4 = conj.group();
  Point c4 = static_cast<Point>(*s4.index_of(Perm::from_cycles(4, "(1 2 3 4)")));
  Point c3 = static_cast<Point>(*s4.index_of(Perm::from_cycles(4, "(2 3 4)")));
  require(pointwise_stabilizer_indices(conj, {&c4, 1}).size() == 4, "Stab((1 2 3 4)) != 4");
  require(pointwise_stabilizer_indices(conj, {&c3, 1}).size() == 3, "Stab((2 3 4)) != 3");
  return summary.str() + "class sizes match";
}

void check_trace(const GroupAction& action, const std::string& what) {
  ConstructionTrace trace = run_construction(action);
  auto why = validate_trace(trace);
  require(why.empty(), what, ": ", why);
  require(is_distinguishing(action, trace.labelling).distinguishing, what,
          ": construction output not distinguishing");
  const Label k = trace.label_count();
  require(k <= factorial_bound(action.order()), what, ": k = ", k, " exceeds factorial bound");
  WitnessChain chain = extract_witness_chain(trace);
  if (k >= 2) {
    require(chain.size() == k, what, ": chain length ", chain.size(), " != k = ", k);
    LowerBoundReport bound = verify_lower_bound(trace, chain);
    require(bound.holds(), what, ": bound product ", bound.product, " vs |G| = ",
            bound.group_order);
  }
}

std::string check_construction(const VerifyOptions& options) {
  std::size_t count = 0;
  for (const auto& a : named_actions()) {
    check_trace(a.action, a.name);
    ++count;
  }
  for (const auto& g : named_graphs()) {
    check_trace(graph_action(g.graph, figure_limits()), g.name);
    ++count;
  }
  for (const auto& a : random_actions(options, options.random_actions)) {
    check_trace(a, "random action " + std::to_string(count));
    ++count;
  }
  return std::to_string(count) + " traces valid";
}

std::string check_ack_bound(const VerifyOptions& options) {
  std::size_t count = 0;
  std::vector<GroupAction> actions;
  for (auto& a : small_named_actions())
    actions.push_back(a.action);
  for (auto& a : random_actions(options, options.random_actions))
    actions.push_back(a);
  for (const auto& action : actions) {
    auto result = exact_distinguishing_number(action);
    require(result.found(), "no labelling within factorial bound");
    require(result.k <= factorial_bound(action.order()), "D exceeds factorial bound");
    require(is_distinguishing(action, *result.witness).distinguishing, "witness fails");
    ++count;
  }
  return std::to_string(count) + " actions within the factorial bound";
}

std::string check_full_orbit(const VerifyOptions&) {
  require(verify_full_orbit_characterization(natural_action(3, 2)).verdict == Verdict::holds,
          "natural S_3 plus 2 fixed points");
  require(verify_full_orbit_characterization(conjugation_action(3)).verdict ==
              Verdict::hypothesis_not_met,
          "S_3 conjugation");
  std::size_t total = 0;
  std::size_t with_d3 = 0;
  const PermGroup s3 = symmetric_group(3);
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const auto& action : homomorphic_actions(s3, m)) {
      auto verdict = verify_full_orbit_characterization(action);
      auto brute = brute_force_distinguishing_number(action);
      require(brute.has_value() && *brute == verdict.distinguishing_number,
              "solver and brute force disagree on an S_3 action on ", m, " points");
      require(verdict.verdict != Verdict::violated, "m = ", m, ": ", verdict.detail);
      require((verdict.distinguishing_number == 3) == verdict.structure_present, "m = ", m,
              ": D = ", verdict.distinguishing_number, " vs structure ",
              verdict.structure_present);
      ++total;
      with_d3 += verdict.distinguishing_number == 3;
    }
  }
  return std::to_string(total) + " homomorphisms S_3 -> Sym(m), m <= 5; " +
         std::to_string(with_d3) + " with D = 3, all with one full 3-orbit";
}

std::string check_s4(const VerifyOptions&) {
  auto report = s4_case_analysis();
  require(report.values() == std::vector<Label>{1, 2, 3, 4}, "witness values");
  require(report.faithful_values() == std::vector<Label>{2, 3, 4}, "faithful values");
  for (const auto& w : report.witnesses)
    require(w.distinguishing_number <= factorial_bound(24), w.name, " exceeds factorial bound");

  GroupAction pairs = s4_inverse_pair_action();
  require(pairs.is_faithful(), "inverse-pair action not faithful");
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Label> labels(6);
    for (unsigned i = 0; i < 6; ++i)
      labels[i] = 1 + ((mask >> i) & 1U);
    require(!is_distinguishing(pairs, Labelling(labels, 2)).distinguishing,
            "a 2-labelling distinguishes the inverse pairs");
  }
  require(is_distinguishing(pairs, s4_inverse_pair_labelling()).distinguishing,
          "Figure 5 labelling fails");
  // Pairs {0,1}, {2,3}, {4,5} form a block system.
  for (const Perm& img : pairs.images())
    for (Point x = 0; x < 6; x += 2)
      require(img(x) / 2 == img(x + 1) / 2, "inverse pair split by conjugation");
  return "D = 1, 2, 3, 4; all 64 two-labellings of the inverse pairs fail";
}

std::size_t tree_bound(const Graph& t) { return std::max<std::size_t>(t.max_degree(), 2); }

void check_tree(const Graph& t, const AutomorphismLimits& limits) {
  auto result = graph_distinguishing_number(t, limits);
  require(result.found() && result.k <= tree_bound(t), "tree with max degree ", t.max_degree(),
          " has D = ", result.k);
  Labelling phi = tree_distinguishing_labelling(t, limits);
  require(phi.distinct_labels() <= tree_bound(t), "constructive labelling uses ",
          phi.distinct_labels(), " labels");
  require(is_distinguishing(graph_action(t, limits), phi).distinguishing,
          "constructive labelling not distinguishing");
}

std::string check_trees(const VerifyOptions& options) {
  static const std::size_t kFreeTrees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  const AutomorphismLimits limits{12, 400'000};
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= options.max_tree_vertices_exhaustive; ++n) {
    auto trees = enumerate_free_trees(n);
    if (n <= 12)
      require(trees.size() == kFreeTrees[n - 1], "found ", trees.size(), " trees on ", n,
              " vertices");
    for (const auto& t : trees)
      check_tree(t, limits);
    exhaustive += trees.size();
  }

  Rng rng(options.seed + 2);
  std::size_t sampled = 0;
  std::size_t rejected = 0;
  while (sampled < options.random_trees) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    Graph t = random_tree(rng, n);
    try {
      automorphism_group(t, limits);
    } catch (const ResourceError&) {
      ++rejected;
      continue;
    }
    check_tree(t, limits);
    ++sampled;
  }

  for (std::size_t i = 2; i <= 4; ++i) {
    std::vector<std::size_t> lengths;
    for (std::size_t j = 0; j < 2; ++j)
      lengths.push_back(2 + j);
    Graph t = make_star_path_tree(i, lengths);
    Label d = graph_distinguishing_number(t).k;
    require(d == i, "star-path tree with ", i, " leaves has D = ", d);
  }
  Label fig7 = graph_distinguishing_number(make_figure7_tree()).k;
  require(fig7 == 3, "Figure 7 tree has D = ", fig7);
  return std::to_string(exhaustive) + " free trees, " + std::to_string(sampled) +
         " random trees (" + std::to_string(rejected) +
         " over the element cap resampled); star-path D = 2, 3, 4; Figure 7 D = 3";
}

std::string check_complete_graph(const VerifyOptions& options) {
  std::size_t fixtures = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t isolated = 0; isolated <= 1; ++isolated) {
      for (Graph base : {make_complete(n), make_empty(n)}) {
        Graph g = disjoint_union(base, make_empty(isolated));
        auto v = check_complete_graph_characterization(g);
        require(v.verdict == Verdict::holds, "K_", n, " or its complement plus ", isolated,
                " isolated: ", v.detail);
        ++fixtures;
      }
    }
  }
  require(check_complete_graph_characterization(make_cycle(5)).verdict ==
              Verdict::hypothesis_not_met,
          "C_5 should not meet the hypothesis");

  Rng rng(options.seed + 3);
  std::size_t hypothesis = 0;
  std::map<std::size_t, std::size_t> violations_by_n;
  std::string first_violation;
  for (std::size_t i = 0; i < options.random_graphs; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph g = random_graph(rng, n, p);
    auto v = check_complete_graph_characterization(g);
    if (v.n != 0 && v.distinguishing_number == v.n)
      ++hypothesis;
    if (v.verdict == Verdict::violated) {
      if (violations_by_n.empty()) {
        std::ostringstream edges;
        for (auto [a, b] : g.edges())
          edges << " " << a << "-" << b;
        first_violation = std::to_string(n) + " vertices, edges" + edges.str() + ": " + v.detail;
      }
      ++violations_by_n[v.n];
    }
  }
  if (!violations_by_n.empty()) {
    std::ostringstream by_n;
    for (auto [n, count] : violations_by_n)
      by_n << " n=" << n << ": " << count << ";";
    require(false, "of ", hypothesis, " sampled graphs with |Aut| = n! and D = n, violations by",
            by_n.str(), " first: ", first_violation);
  }
  return std::to_string(fixtures) + " complete/empty fixtures hold; " +
         std::to_string(hypothesis) + " of " + std::to_string(options.random_graphs) +
         " random graphs meet the hypothesis, none violate";
}

std::string check_cycles(const VerifyOptions&) {
  std::ostringstream out;
  for (std::size_t n = 3; n <= 12; ++n) {
    Label d = graph_distinguishing_number(make_cycle(n)).k;
    Label expected = n <= 5 ? 3 : 2;
    require(d == expected, "D(C_", n, ") = ", d);
    out << (n > 3 ? ", " : "") << "C_" << n << "=" << d;
  }
  return out.str();
}

std::string check_figure2(const VerifyOptions&) {
  auto graphs = make_figure2_graphs();
  const Label expected[] = {4, 3, 2};
  std::ostringstream out;
  for (std::size_t i = 0; i < 3; ++i) {
    PermGroup aut = automorphism_group(graphs[i], figure_limits());
    require(aut.order() == 72, "|Aut(G_", i + 1, ")| = ", aut.order());
    Label d = graph_distinguishing_number(graphs[i], figure_limits()).k;
    require(d == expected[i], "D(G_", i + 1, ") = ", d);
    out << (i ? ", " : "") << "D(G_" << i + 1 << ")=" << d;
  }
  return out.str() + "; |Aut| = 72 each";
}

std::string check_figures(const VerifyOptions&) {
  std::size_t drawn = 0;
  for (const auto& g : named_graphs()) {
    GroupAction action = graph_action(g.graph, figure_limits());
    require(action.is_faithful(), g.name, ": graph action has a kernel");
    PermGroup aut = action.group();
    for (const Perm& p : aut.elements())
      for (auto [u, v] : g.graph.edges())
        require(g.graph.adjacent(p(u), p(v)), g.name, ": automorphism breaks an edge");
    if (aut.order() <= 200)
      require(aut.is_closed(), g.name, ": automorphisms not closed");
    if (g.drawn_labelling) {
      require(is_distinguishing(action, *g.drawn_labelling).distinguishing, g.name,
              ": drawn labelling not distinguishing");
      ++drawn;
    }
    if (g.expected_d) {
      Label d = exact_distinguishing_number(action).k;
      require(d == *g.expected_d, g.name, ": D = ", d);
    }
  }
  // Around-the-cycle reading 1,2,2,3,1 of the C_5 picture also distinguishes.
  require(is_distinguishing(graph_action(make_cycle(5)), Labelling({1, 2, 2, 3, 1}, 3))
              .distinguishing,
          "C_5 labelling 1,2,2,3,1 fails");

  require(is_distinguishing(conjugation_action(3), s3_conjugation_labelling()).distinguishing,
          "Figure 3 labelling fails");
  require(is_distinguishing(s4_inverse_pair_action(), s4_inverse_pair_labelling()).distinguishing,
          "Figure 5 labelling fails");

  ConstructionTrace trace = run_construction(graph_action(make_figure4_graph()));
  require(trace.label_count() == 4, "Figure 4 construction uses ", trace.label_count(),
          " labels");
  WitnessChain chain = extract_witness_chain(trace);
  LowerBoundReport bound = verify_lower_bound(trace, chain);
  require(bound.holds() && bound.group_order == 72, "Figure 4 bound fails");

  Graph fig7 = make_figure7_tree();
  require(fig7.max_degree() == 5, "Figure 7 max degree ", fig7.max_degree());
  Labelling tree_phi = tree_distinguishing_labelling(fig7);
  require(tree_phi.distinct_labels() <= 5, "Figure 7 tree labelling too large");
  return std::to_string(drawn) + " drawn labellings verified; Figure 4 trace uses 4 labels, "
         "bound product " + std::to_string(bound.product) + " <= 72";
}

using CheckFn = std::string (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"orbit-stabilizer", check_orbit_stabilizer},
      {"trivial-action", check_trivial_action},
      {"translation", check_translation},
      {"orbit-induction", check_orbit_induction},
      {"relatively-prime", check_relatively_prime},
      {"conjugation", check_conjugation},
      {"construction", check_construction},
      {"ack-bound", check_ack_bound},
      {"full-orbit", check_full_orbit},
      {"s4", check_s4},
      {"trees", check_trees},
      {"complete-graph", check_complete_graph},
      {"cycles", check_cycles},
      {"figure2", check_figure2},
      {"figures", check_figures},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

CheckResult run_check(std::string_view name, const VerifyOptions& options) {
  for (const auto& [check_name, fn] : registry()) {
    if (check_name != name)
      continue;
    CheckResult result{check_name, false, {}};
    try {
      result.detail = fn(options);
      result.passed = true;
    } catch (const CheckFailure& e) {
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.detail = std::string("unexpected error: ") + e.what();
    }
    return result;
  }
  std::string known;
  for (const auto& n : check_names())
    known += (known.empty() ? "" : ", ") + n;
  throw InputError("unknown check \"" + std::string(name) + "\"; available: " + known);
}

std::vector<CheckResult> run_all(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& name : check_names())
    out.push_back(run_check(name, options));
  return out;
}

}  // namespace distinguish
