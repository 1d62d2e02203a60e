#pragma once

#include <cstddef>
#include <random>

#include "distinguish/action.hpp"
#include "distinguish/graph.hpp"

namespace distinguish {

using Rng = std::mt19937_64;

struct RandomActionOptions {
  std::size_t max_degree = 6;       // m, the group lives in S_m
  std::size_t max_generators = 3;
  std::size_t max_domain = 10;
  std::size_t max_order = 720;
};

/// A subgroup of S_m generated by 1..max_generators uniform permutations,
/// acting on a disjoint union of pieces drawn from: its natural action,
/// fixed points, the sign action on two points, unordered pairs of points,
/// and the regular action. The domain has at least one and at most
/// max_domain points.
GroupAction random_action(Rng& rng, const RandomActionOptions& options = {});

/// Uniform labelled tree on n vertices, from a random Pruefer sequence.
Graph random_tree(Rng& rng, std::size_t n);

/// G(n, p): each of the n(n-1)/2 edges present independently.
Graph random_graph(Rng& rng, std::size_t n, double p);

}  // namespace distinguish
