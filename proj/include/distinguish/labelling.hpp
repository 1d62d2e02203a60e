#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distinguish/action.hpp"

namespace distinguish {

using Label = std::uint32_t;

/// A map from domain points to labels 1..label_count.
class Labelling {
 public:
  Labelling() = default;

  /// Throws InputError if any entry falls outside 1..label_count.
  Labelling(std::vector<Label> labels, Label label_count);

  /// label_count is taken as the largest entry (1 for an empty domain).
  explicit Labelling(std::vector<Label> labels);

  static Labelling constant(std::size_t size);

  std::size_t size() const { return labels_.size(); }
  Label label_count() const { return label_count_; }
  Label operator[](std::size_t x) const { return labels_[x]; }
  std::span<const Label> labels() const { return labels_; }

  /// Number of distinct labels actually used.
  Label distinct_labels() const;

  /// False when some label in 1..label_count never occurs.
  bool uses_all_labels() const { return distinct_labels() == label_count_; }

  /// Restricted-growth relabelling: label j first occurs before label j+1,
  /// and label_count shrinks to the number of labels in use.
  Labelling canonical() const;

  bool operator==(const Labelling&) const = default;

 private:
  std::vector<Label> labels_;
  Label label_count_ = 1;
};

struct DistinguishingCertificate {
  Labelling labelling;
  std::size_t preserving_subgroup_order = 0;
  std::size_t kernel_order = 0;
  bool distinguishing = false;
};

/// True iff phi(g.x) = phi(x) for every x.
bool is_preserved_by(const GroupAction& action, const Labelling& phi, std::size_t element);

/// Element indices preserving phi.
std::vector<std::size_t> preserving_indices(const GroupAction& action, const Labelling& phi);

/// {g : phi o g = phi} as an enumerated subgroup.
PermGroup preserving_subgroup(const GroupAction& action, const Labelling& phi);

/// phi is distinguishing iff only kernel elements preserve it.
DistinguishingCertificate is_distinguishing(const GroupAction& action, const Labelling& phi);

struct SolveResult {
  Label k_max = 0;
  Label k = 0;  // 0 when no labelling with at most k_max labels distinguishes
  std::optional<Labelling> witness;

  bool found() const { return k != 0; }
};

/// Smallest k <= k_max admitting a distinguishing labelling, with a witness.
///
/// Tries k = 1, 2, ... in turn and enumerates restricted-growth labellings
/// depth first. A branch is cut as soon as some non-kernel element that
/// fixes every unassigned point preserves the assigned labels, since that
/// element then preserves every completion. k_max defaults to the least k
/// with k! >= |G|, which always suffices.
SolveResult exact_distinguishing_number(const GroupAction& action,
                                        std::optional<Label> k_max = std::nullopt);

inline constexpr double kBruteForceBudget = 1e8;

/// Unpruned oracle: checks every one of k^|X| labellings for k = 1..k_max.
/// Throws ResourceError when k_max^|X| exceeds kBruteForceBudget. Returns
/// nullopt when no k <= k_max works.
std::optional<Label> brute_force_distinguishing_number(const GroupAction& action,
                                                       std::optional<Label> k_max = std::nullopt);

/// Glues a labelling of the orbit `orbit_points` (indexed like that span) with
/// a labelling of the complement (indexed by the complement in ascending
/// order). Both parts are checked to be distinguishing for their restricted
/// actions first; throws PreconditionError otherwise.
Labelling combine_orbit_labellings(const GroupAction& action,
                                   std::span<const Point> orbit_points,
                                   const Labelling& on_orbit, const Labelling& on_rest);

/// Label 2 on the least point of each orbit and 1 elsewhere. Requires
/// gcd(|G|/|O1|, |G|/|O2|) = 1; throws PreconditionError otherwise.
Labelling relatively_prime_orbit_labelling(const GroupAction& action,
                                           std::span<const Point> first_orbit,
                                           std::span<const Point> second_orbit);

}  // namespace distinguish
