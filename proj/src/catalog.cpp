#include "distinguish/catalog.hpp"

#include <algorithm>
#include <set>

#include "distinguish/construction.hpp"
#include "distinguish/error.hpp"

namespace distinguish {

GroupAction translation_action(const PermGroup& group) {
  return GroupAction::from_element_map(group, group.order(), [&](const Perm& g) {
    std::vector<Point> image(group.order());
    for (std::size_t h = 0; h < group.order(); ++h)
      image[h] = static_cast<Point>(*group.index_of(compose(g, group.element(h))));
    return Perm(std::move(image));
  });
}

GroupAction conjugation_action(std::size_t n) {
  if (n < 3 || n > 6)
    throw InputError("conjugation action is available for 3 <= n <= 6, got " +
                     std::to_string(n));
  PermGroup sn = symmetric_group(n);
  return GroupAction::from_element_map(sn, sn.order(), [&](const Perm& g) {
    Perm g_inv = g.inverse();
    std::vector<Point> image(sn.order());
    for (std::size_t h = 0; h < sn.order(); ++h)
      image[h] = static_cast<Point>(*sn.index_of(compose(compose(g, sn.element(h)), g_inv)));
    return Perm(std::move(image));
  });
}

GroupAction natural_action(std::size_t n, std::size_t fixed_points) {
  if (n < 1)
    throw InputError("natural action needs n >= 1");
  PermGroup sn = symmetric_group(n);
  if (fixed_points == 0)
    return GroupAction::natural(sn);
  return GroupAction::from_element_map(sn, n + fixed_points, [&](const Perm& g) {
    std::vector<Point> image(n + fixed_points);
    for (std::size_t x = 0; x < image.size(); ++x)
      image[x] = x < n ? g(static_cast<Point>(x)) : static_cast<Point>(x);
    return Perm(std::move(image));
  });
}

GroupAction trivial_action(const PermGroup& group, std::size_t points) {
  return GroupAction::from_element_map(group, points,
                                       [&](const Perm&) { return Perm::identity(points); });
}

std::vector<Perm> s4_four_cycles() {
  std::vector<Perm> out;
  for (const char* c : {"(1 2 3 4)", "(1 4 3 2)", "(1 2 4 3)", "(1 3 4 2)", "(1 3 2 4)", "(1 4 2 3)"})
    out.push_back(Perm::from_cycles(4, c));
  return out;
}

GroupAction s4_inverse_pair_action() {
  const auto cycles = s4_four_cycles();
  PermGroup s4 = symmetric_group(4);
  GroupAction action = GroupAction::from_element_map(s4, cycles.size(), [&](const Perm& g) {
    Perm g_inv = g.inverse();
    std::vector<Point> image(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      Perm conj = compose(compose(g, cycles[i]), g_inv);
      auto it = std::find(cycles.begin(), cycles.end(), conj);
      image[i] = static_cast<Point>(it - cycles.begin());
    }
    return Perm(std::move(image));
  });
  if (!action.is_faithful())
    throw std::logic_error("S_4 on its 4-cycles should be faithful");
  return action;
}

namespace {

std::size_t element_index(const PermGroup& group, std::string_view cycles) {
  return *group.index_of(Perm::from_cycles(group.degree(), cycles));
}

}  // namespace

Labelling s3_conjugation_labelling() {
  PermGroup s3 = symmetric_group(3);
  std::vector<Label> labels(s3.order(), 1);
  labels[element_index(s3, "(1 2)")] = 2;
  labels[element_index(s3, "(1 2 3)")] = 2;
  return Labelling(std::move(labels), 2);
}

Labelling s4_inverse_pair_labelling() { return Labelling({2, 1, 3, 2, 1, 3}, 3); }

std::vector<GroupAction> homomorphic_actions(const PermGroup& source, std::size_t m) {
  const PermGroup target = symmetric_group(m);
  const auto gens = source.generators();
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t t = 0; t < target.order(); ++t)
      if (gens[j].order() % target.element(t).order() == 0)
        candidates[j].push_back(t);

  std::vector<GroupAction> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  if (std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); }))
    return out;
  for (;;) {
    std::vector<Perm> images;
    for (std::size_t j = 0; j < gens.size(); ++j)
      images.push_back(target.element(candidates[j][pick[j]]));
    try {
      out.push_back(GroupAction::from_generator_images(source, m, images));
    } catch (const InputError&) {
      // not a homomorphism
    }
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == candidates[j].size())
      pick[j++] = 0;
    if (j == pick.size())
      break;
  }
  return out;
}

FullOrbitVerdict verify_full_orbit_characterization(const GroupAction& action) {
  FullOrbitVerdict out;
  out.n = factorial_root(action.order());
  if (out.n == 0) {
    out.detail = "|G| = " + std::to_string(action.order()) + " is not a factorial";
    return out;
  }
  out.distinguishing_number = exact_distinguishing_number(action).k;

  auto partition = orbit_partition(action);
  std::size_t full_orbits = 0;
  std::size_t other_nontrivial = 0;
  const std::vector<Point>* candidate = nullptr;
  for (const auto& block : partition.blocks) {
    if (out.n >= 2 && block.size() == out.n) {
      ++full_orbits;
      candidate = &block;
    } else if (block.size() != 1) {
      ++other_nontrivial;
    }
  }
  if (out.n == 1) {
    out.structure_present = other_nontrivial == 0;
  } else if (full_orbits == 1 && other_nontrivial == 0) {
    std::set<std::vector<Point>> restrictions;
    for (const Perm& img : action.images()) {
      std::vector<Point> r;
      for (Point x : *candidate)
        r.push_back(img(x));
      restrictions.insert(std::move(r));
    }
    out.structure_present = restrictions.size() == action.order();
  }

  if (out.distinguishing_number == out.n) {
    out.verdict = out.structure_present ? Verdict::holds : Verdict::violated;
    out.detail = out.structure_present
                     ? "one orbit of size n carries all n! permutations, the rest are fixed"
                     : "D = n but no single full orbit with fixed complement";
  } else {
    out.verdict = out.structure_present ? Verdict::violated : Verdict::hypothesis_not_met;
    out.detail = "D = " + std::to_string(out.distinguishing_number) + " differs from n = " +
                 std::to_string(out.n) +
                 (out.structure_present ? " although the full-orbit structure is present"
                                        : "; full-orbit structure absent");
  }
  return out;
}

std::vector<Label> S4CaseReport::values() const {
  std::vector<Label> out;
  for (const auto& w : witnesses)
    out.push_back(w.distinguishing_number);
  return out;
}

std::vector<Label> S4CaseReport::faithful_values() const {
  std::vector<Label> out;
  for (const auto& w : witnesses)
    if (w.faithful)
      out.push_back(w.distinguishing_number);
  return out;
}

S4CaseReport s4_case_analysis() {
  PermGroup s4 = symmetric_group(4);
  S4CaseReport report;
  auto add = [&](std::string name, GroupAction action) {
    Label d = exact_distinguishing_number(action).k;
    bool faithful = action.is_faithful();
    report.witnesses.push_back({std::move(name), std::move(action), d, faithful});
  };
  add("trivial", trivial_action(s4, 1));
  add("translation", translation_action(s4));
  add("inverse-pairs", s4_inverse_pair_action());
  add("natural", natural_action(4));
  return report;
}

std::vector<NamedAction> named_actions() {
  std::vector<NamedAction> out;
  out.push_back({"trivial", trivial_action(symmetric_group(3), 2), 1, "trivial action"});
  out.push_back({"figure3", conjugation_action(3), 2, "S_3 conjugating itself"});
  out.push_back({"s4-conjugation", conjugation_action(4), 2, "S_4 conjugating itself"});
  out.push_back({"s3-translation", translation_action(symmetric_group(3)), 2,
                 "S_3 translating itself"});
  out.push_back({"z4-translation", translation_action(cyclic_group(4)), 2,
                 "Z_4 translating itself"});
  out.push_back({"s4-trivial", trivial_action(symmetric_group(4), 1), 1, "S_4 on one point"});
  out.push_back({"s4-translation", translation_action(symmetric_group(4)), 2,
                 "S_4 translating itself"});
  out.push_back({"figure5", s4_inverse_pair_action(), 3, "S_4 conjugating its 4-cycles"});
  out.push_back({"s4-natural", natural_action(4), 4, "S_4 permuting 4 points"});
  out.push_back({"s4-natural-plus-3", natural_action(4, 3), 4, "S_4 on 4 points plus 3 fixed"});
  out.push_back({"s3-natural-plus-2", natural_action(3, 2), 3, "S_3 on 3 points plus 2 fixed"});
  return out;
}

NamedAction named_action(std::string_view name) {
  for (auto& a : named_actions())
    if (a.name == name)
      return a;
  throw InputError("unknown action fixture \"" + std::string(name) + "\"");
}

std::vector<NamedGraph> named_graphs() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 3; n <= 12; ++n) {
    std::optional<Labelling> drawn;
    if (n == 5)
      drawn = Labelling({1, 2, 3, 1, 2}, 3);
    if (n == 6)
      drawn = Labelling({1, 2, 1, 1, 2, 2}, 2);
    out.push_back({"c" + std::to_string(n), make_cycle(n), n <= 5 ? 3U : 2U, drawn});
  }
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"k" + std::to_string(n), make_complete(n), static_cast<Label>(n), {}});
  auto fig2 = make_figure2_graphs();
  out.push_back({"figure2-g1", fig2[0], 4, Labelling({1, 2, 3, 1, 2, 4}, 4)});
  out.push_back({"figure2-g2", fig2[1], 3, Labelling({1, 2, 3, 1, 2, 3, 1, 2}, 3)});
  out.push_back({"figure2-g3", fig2[2], 2,
                 Labelling({1, 2, 2, 2, 1, 2, 1, 1, 2, 2, 2, 1, 2, 2}, 2)});
  out.push_back({"figure4", make_figure4_graph(), 3, Labelling({2, 3, 1, 1, 4, 3, 2, 1}, 4)});
  out.push_back({"figure7", make_figure7_tree(), 3, Labelling({1, 1, 2, 3, 1, 1, 1, 1, 1}, 3)});
  return out;
}

NamedGraph named_graph(std::string_view name) {
  for (auto& g : named_graphs())
    if (g.name == name)
      return g;
  throw InputError("unknown graph fixture \"" + std::string(name) + "\"");
}

}  // namespace distinguish
