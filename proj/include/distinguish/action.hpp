#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "distinguish/group.hpp"
#include "distinguish/perm.hpp"

namespace distinguish {

/// A homomorphism from an enumerated PermGroup into Sym(X), stored as one
/// image permutation per group element (parallel to group().elements()).
/// Immutable and cheap to copy.
class GroupAction {
 public:
  /// Checks image sizes, that the identity acts trivially, and that
  /// image(s * e) = image(s) * image(e) for every generator s and element e,
  /// which by induction on word length makes the map a homomorphism.
  GroupAction(PermGroup group, std::size_t domain_size, std::vector<Perm> element_images);

  /// The group acting on its own `degree` points.
  static GroupAction natural(PermGroup group);

  /// Builds the action from per-generator images (parallel to
  /// group.generators()). Throws InputError when no homomorphism sends the
  /// generators to these images.
  static GroupAction from_generator_images(PermGroup group, std::size_t domain_size,
                                           std::span<const Perm> generator_images);

  /// Evaluates `image_of(element)` for every element, then validates as above.
  static GroupAction from_element_map(PermGroup group, std::size_t domain_size,
                                      const std::function<Perm(const Perm&)>& image_of);

  const PermGroup& group() const;
  std::size_t order() const;
  std::size_t domain_size() const;
  const Perm& image(std::size_t element) const;
  std::span<const Perm> images() const;
  Point apply(std::size_t element, Point x) const { return image(element)(x); }

  /// Element indices whose images generate the image group.
  std::span<const std::size_t> generator_indices() const;

  /// Element indices acting as the identity on the whole domain.
  std::span<const std::size_t> kernel_indices() const;
  bool is_trivial() const { return kernel_indices().size() == order(); }
  bool is_faithful() const { return kernel_indices().size() == 1; }

  /// The subgroup formed by `elements` (indices into this action's group,
  /// assumed closed) acting on the same domain. Its generator list is its
  /// full element list.
  GroupAction restrict_to_subgroup(std::span<const std::size_t> elements) const;

  /// The action on an invariant subset, re-indexed so that subset[i] becomes
  /// point i. Throws PreconditionError if the subset is not invariant.
  GroupAction restrict_to_subset(std::span<const Point> subset) const;

  /// Exhaustive O(|G|^2) check of the homomorphism property.
  bool is_homomorphism_exhaustive() const;

 private:
  struct Data;
  explicit GroupAction(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Disjoint orbits covering the domain; blocks ordered by representative.
struct OrbitPartition {
  std::vector<std::vector<Point>> blocks;  // each sorted ascending
  std::vector<Point> representatives;      // min of each block
  std::vector<std::size_t> block_of;       // point -> block index

  std::size_t size() const { return blocks.size(); }
};

/// The orbit of x, closed under generator images; sorted ascending.
std::vector<Point> orbit(const GroupAction& action, Point x);

OrbitPartition orbit_partition(const GroupAction& action);

/// Indices of the elements fixing every point of `points`.
std::vector<std::size_t> pointwise_stabilizer_indices(const GroupAction& action,
                                                      std::span<const Point> points);

/// Stab(Y) as an enumerated subgroup whose generator list is its element list.
PermGroup pointwise_stabilizer(const GroupAction& action, std::span<const Point> points);

/// Stab(X): the elements fixing every point of the domain.
PermGroup action_kernel(const GroupAction& action);

}  // namespace distinguish
