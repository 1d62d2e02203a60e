#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "distinguish/action.hpp"
#include "distinguish/labelling.hpp"

namespace distinguish {

/// Least k with k! >= gamma_order. Throws InputError for gamma_order == 0.
Label factorial_bound(std::size_t gamma_order);

/// n >= 1 with n! == order, or 0 when order is not a factorial.
std::size_t factorial_root(std::size_t order);

/// One pass of the orbit-by-orbit loop: the subgroup acting at this stage,
/// the points still labelled 1, and the representatives labelled next.
struct ConstructionStage {
  GroupAction group;          // Gamma_i, acting on the whole domain
  std::vector<Point> remaining;  // X_i
  std::vector<Point> chosen;     // X'_{i+1}
};

struct ConstructionTrace {
  GroupAction action;
  std::vector<ConstructionStage> stages;  // stages[i-1] holds stage i
  GroupAction final_group;                // Gamma_k, trivial on final_remaining
  std::vector<Point> final_remaining;     // X_k
  Labelling labelling;

  std::size_t iteration_count() const { return stages.size(); }
  Label label_count() const { return static_cast<Label>(stages.size() + 1); }

  /// Gamma_i for 1 <= i <= label_count().
  const GroupAction& group(std::size_t i) const;
  /// X_i for 1 <= i <= label_count().
  const std::vector<Point>& remaining(std::size_t i) const;
  /// X'_i for 2 <= i <= label_count().
  const std::vector<Point>& chosen(std::size_t i) const;
};

/// Starts from the all-1 labelling with Gamma_1 = G and X_1 = X. While Gamma_i
/// moves some point of X_i, takes the least point of each nontrivial
/// Gamma_i-orbit in X_i, labels those points i+1, removes them from X_i and
/// passes to their pointwise stabilizer in Gamma_i.
ConstructionTrace run_construction(const GroupAction& action);

/// y_1, ..., y_k with phi(y_i) = i, y_{i+1} in Gamma_{i-1}.y_i for
/// 2 <= i <= k-1 and y_1 in Gamma_{k-1}.y_k. points[0] is y_1.
struct WitnessChain {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  Point y(std::size_t i) const { return points.at(i - 1); }
};

/// Builds the chain back to front: y_1 is the least point of X_k with a
/// nontrivial Gamma_{k-1}-orbit, y_k is that orbit's point in X'_k, and each
/// y_{i-1} is the point of X'_{i-1} in Gamma_{i-2}.y_i. Empty when no
/// iteration ran.
WitnessChain extract_witness_chain(const ConstructionTrace& trace);

struct LowerBoundReport {
  std::size_t group_order = 0;
  std::vector<std::size_t> orbit_sizes;  // |Gamma_{i-1}.y_i| for i = 2..j
  std::size_t final_orbit_size = 0;      // |Gamma_j.y_1|
  std::size_t final_stabilizer_size = 0; // |Stab_{Gamma_j}(y_1)|
  std::size_t product = 1;               // saturates at SIZE_MAX
  bool product_within_order = true;
  bool orbit_sizes_large_enough = true;  // |Gamma_{i-1}.y_i| >= j - i + 2

  bool holds() const { return product_within_order && orbit_sizes_large_enough; }
};

/// Multiplies the nested orbit sizes along the chain and compares the product
/// against |G|. Throws PreconditionError if the chain does not satisfy its
/// defining conditions for this trace.
LowerBoundReport verify_lower_bound(const ConstructionTrace& trace, const WitnessChain& chain);

/// Structural checks of a trace (set differences, stabilizer chain, one
/// representative per nontrivial orbit, termination). Empty string when all
/// hold, otherwise a description of the first violation.
std::string validate_trace(const ConstructionTrace& trace);

}  // namespace distinguish
