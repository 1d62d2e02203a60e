#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distinguish {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. image()[i] is where point i goes.
class Perm {
 public:
  Perm() = default;

  /// Throws InputError unless `image` is a permutation of 0..size-1.
  explicit Perm(std::vector<Point> image);

  static Perm identity(std::size_t degree);

  /// Parses 1-based cycle notation such as "(1 2)(3 4 5)". Points not
  /// mentioned are fixed. "()" or "" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point x) const { return image_[x]; }
  std::span<const Point> images() const { return image_; }

  Perm inverse() const;
  bool is_identity() const;

  /// Smallest n >= 1 with this^n = identity.
  std::size_t order() const;

  /// 1-based cycle notation, fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> image_;
};

/// p after q: the result maps i to p(q(i)). Throws InputError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

/// Cycle type as a descending list of cycle lengths (fixed points included).
std::vector<std::size_t> cycle_type(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace distinguish
