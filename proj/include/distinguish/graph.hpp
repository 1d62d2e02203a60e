#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "distinguish/action.hpp"
#include "distinguish/labelling.hpp"

namespace distinguish {

using Edge = std::pair<Point, Point>;

/// Simple undirected graph. Edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Point u, Point v) const { return adjacency_[u * n_ + v]; }
  std::size_t degree(Point v) const { return neighbors_[v].size(); }
  const std::vector<Point>& neighbors(Point v) const { return neighbors_[v]; }
  std::size_t max_degree() const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edges_.size() + 1 == n_; }

  /// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
  Graph induced(std::span<const Point> vertices) const;

  Graph complement() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<Point>> neighbors_;
};

struct AutomorphismLimits {
  std::size_t max_vertices = 12;
  std::size_t element_cap = kDefaultElementCap;
};

/// Every adjacency-preserving vertex permutation, found by backtracking over
/// vertices in index order. Candidates are restricted to vertices of the same
/// colour under iterated degree refinement and must agree on adjacency with
/// every earlier assignment. Elements come out in lexicographic order of
/// their image arrays. Throws ResourceError past either limit.
PermGroup automorphism_group(const Graph& g, const AutomorphismLimits& limits = {});

/// Aut(G) acting on the vertices. The kernel is always trivial.
GroupAction graph_action(const Graph& g, const AutomorphismLimits& limits = {});

/// Exact distinguishing number of Aut(G) on V(G).
SolveResult graph_distinguishing_number(const Graph& g, const AutomorphismLimits& limits = {});

/// Record of the leaf-orbit recursion.
struct TreeDecoration {
  std::vector<std::vector<Point>> leaf_orbit_sequence;  // original vertex ids, outermost first
  std::vector<std::size_t> degrees;
};

struct TreeLabelling {
  Labelling labelling;
  TreeDecoration decoration;
};

/// Distinguishing labelling of a tree using at most max(maxdeg, 2) labels.
/// Removes the vertex orbit containing the least-index leaf, labels the
/// remaining tree recursively, then gives the removed leaves sharing a
/// neighbour the labels 1, 2, 3, ... in index order. Throws
/// PreconditionError if `t` is not a tree.
TreeLabelling tree_labelling_with_decoration(const Graph& t,
                                             const AutomorphismLimits& limits = {});

Labelling tree_distinguishing_labelling(const Graph& t, const AutomorphismLimits& limits = {});

enum class Verdict { holds, hypothesis_not_met, violated };

std::string to_string(Verdict v);

struct CompleteGraphVerdict {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::size_t aut_order = 0;
  std::size_t n = 0;  // n with n! == |Aut|, 0 if none
  Label distinguishing_number = 0;
  bool structure_present = false;
  std::string detail;
};

/// When |Aut(G)| = n! and D(G) = n: checks that exactly one vertex orbit has
/// n vertices, Aut(G) induces all n! permutations on it, it spans K_n or its
/// complement, and every other orbit is a single vertex.
CompleteGraphVerdict check_complete_graph_characterization(const Graph& g,
                                                           const AutomorphismLimits& limits = {});

/// One representative of every isomorphism class of trees on n vertices
/// (grown leaf by leaf and deduplicated by a centre-rooted canonical code).
std::vector<Graph> enumerate_free_trees(std::size_t n);

/// Canonical string of a tree; equal exactly for isomorphic trees.
std::string tree_canonical_code(const Graph& t);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_empty(std::size_t n);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Two triangles, two claws K_{1,3}, and two spiders with three legs of
/// length 2: all three have automorphism group S_2[S_3] of order 72.
std::array<Graph, 3> make_figure2_graphs();

/// Two claws; leaves are 0..5 (0-2 on apex 6, 3-5 on apex 7).
Graph make_figure4_graph();

/// Root 0 with three leaves and two pendant paths of 2 and 3 vertices.
Graph make_figure7_tree();

/// Root 0 with `leaves` pendant leaves and one pendant path per entry of
/// `path_lengths` (vertex counts, pairwise distinct and >= 2).
Graph make_star_path_tree(std::size_t leaves, const std::vector<std::size_t>& path_lengths);

}  // namespace distinguish
