#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distinguish/action.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/labelling.hpp"

namespace distinguish {

/// A group acting on its own elements by left multiplication, g.h = gh.
/// Point i is group.element(i).
GroupAction translation_action(const PermGroup& group);

/// S_n acting on its own elements by conjugation, g.h = g h g^-1, for
/// 3 <= n <= 6. Point i is symmetric_group(n).element(i).
GroupAction conjugation_action(std::size_t n);

/// S_n permuting its n points, plus `fixed_points` extra points it fixes.
GroupAction natural_action(std::size_t n, std::size_t fixed_points = 0);

/// A group acting trivially on `points` points.
GroupAction trivial_action(const PermGroup& group, std::size_t points);

/// The six 4-cycles of S_4 in the order (1234), (1432), (1243), (1342),
/// (1324), (1423): consecutive entries are mutually inverse.
std::vector<Perm> s4_four_cycles();

/// S_4 conjugating its six 4-cycles (ordered as s4_four_cycles()).
GroupAction s4_inverse_pair_action();

/// Label 2 on the transposition (1 2) and the 3-cycle (1 2 3), 1 elsewhere,
/// on conjugation_action(3).
Labelling s3_conjugation_labelling();

/// Per-pair labels {1,2}, {2,3}, {3,1} on s4_inverse_pair_action().
Labelling s4_inverse_pair_labelling();

/// All actions of `source` on m points, one per homomorphism into Sym(m),
/// found by trying every tuple of generator images.
std::vector<GroupAction> homomorphic_actions(const PermGroup& source, std::size_t m);

struct FullOrbitVerdict {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::size_t n = 0;  // n with n! == |G|, 0 if none
  Label distinguishing_number = 0;
  bool structure_present = false;  // one n-orbit carrying all n! permutations, rest fixed
  std::string detail;
};

/// When |G| = n! and D = n, checks that exactly one orbit has n points, G
/// induces all n! permutations on it, and every other orbit is a fixed point.
/// Also checks the converse: that structure always comes with D = n.
FullOrbitVerdict verify_full_orbit_characterization(const GroupAction& action);

struct S4Witness {
  std::string name;
  GroupAction action;
  Label distinguishing_number = 0;
  bool faithful = false;
};

struct S4CaseReport {
  std::vector<S4Witness> witnesses;  // trivial, translation, inverse pairs, natural

  std::vector<Label> values() const;
  std::vector<Label> faithful_values() const;
};

/// Exact distinguishing numbers of the four S_4 witnesses.
S4CaseReport s4_case_analysis();

struct NamedAction {
  std::string name;
  GroupAction action;
  std::optional<Label> expected_d;
  std::string source;
};

/// Every named action, in a fixed order.
std::vector<NamedAction> named_actions();

/// Throws InputError for unknown names.
NamedAction named_action(std::string_view name);

struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<Label> expected_d;
  std::optional<Labelling> drawn_labelling;  // labelling shown in the source figure
};

std::vector<NamedGraph> named_graphs();
NamedGraph named_graph(std::string_view name);

}  // namespace distinguish
