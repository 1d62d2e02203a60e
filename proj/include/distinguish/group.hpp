#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "distinguish/perm.hpp"

namespace distinguish {

inline constexpr std::size_t kDefaultElementCap = 50'000;

/// A finite permutation group with every element enumerated.
///
/// Cheap to copy: the element list is shared and immutable. Element order is
/// deterministic and every downstream tie-break (orbit representatives,
/// construction choices, solver witnesses) indexes into it.
class PermGroup {
 public:
  /// The trivial group on zero points.
  PermGroup();

  /// Breadth-first closure of `generators` on `degree` points. Generators are
  /// sorted lexicographically and deduplicated first; the identity is element 0
  /// and new elements are appended in discovery order (g * e for each queued e,
  /// generators in sorted order). Throws ResourceError once the closure would
  /// exceed `element_cap`.
  static PermGroup generate(std::size_t degree, std::vector<Perm> generators,
                            std::size_t element_cap = kDefaultElementCap);

  /// Wraps an already enumerated subgroup. The caller guarantees closure; the
  /// identity must be present. When `generators` is empty a small generating
  /// set is picked greedily from `elements` in order.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  std::size_t degree() const;
  std::size_t order() const;
  std::span<const Perm> elements() const;
  std::span<const Perm> generators() const;
  const Perm& element(std::size_t index) const;
  std::size_t identity_index() const;

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  /// Exhaustive O(|G|^2) closure check under composition and inverse.
  bool is_closed() const;

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<Data> index(std::size_t degree, std::vector<Perm> elements);

  std::shared_ptr<const Data> data_;
};

/// Free-function spelling of PermGroup::generate.
PermGroup enumerate_group(std::size_t degree, std::vector<Perm> generators,
                          std::size_t element_cap = kDefaultElementCap);

/// The symmetric group on n points generated by (1 2) and (1 2 ... n).
PermGroup symmetric_group(std::size_t n);

/// The cyclic group generated by (1 2 ... n).
PermGroup cyclic_group(std::size_t n);

}  // namespace distinguish
