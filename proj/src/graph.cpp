#include "distinguish/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "distinguish/construction.hpp"
#include "distinguish/error.hpp"

namespace distinguish {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), adjacency_(vertex_count * vertex_count, false), neighbors_(vertex_count) {
  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_)
      throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(n_) + "-1");
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (adjacency_[u * n_ + v])
      throw InputError("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    adjacency_[u * n_ + v] = adjacency_[v * n_ + u] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& nb : neighbors_)
    std::sort(nb.begin(), nb.end());
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : neighbors_)
    d = std::max(d, nb.size());
  return d;
}

bool Graph::is_connected() const {
  if (n_ == 0)
    return false;
  std::vector<bool> seen(n_, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point v = stack.back();
    stack.pop_back();
    for (Point w : neighbors_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

Graph Graph::induced(std::span<const Point> vertices) const {
  std::vector<Point> position(n_, static_cast<Point>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    position[vertices[i]] = static_cast<Point>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (position[u] != static_cast<Point>(-1) && position[v] != static_cast<Point>(-1))
      edges.emplace_back(position[u], position[v]);
  return Graph(vertices.size(), std::move(edges));
}

Graph Graph::complement() const {
  std::vector<Edge> edges;
  for (Point u = 0; u < n_; ++u)
    for (Point v = u + 1; v < n_; ++v)
      if (!adjacent(u, v))
        edges.emplace_back(u, v);
  return Graph(n_, std::move(edges));
}

namespace {

// Iterated degree refinement. Colours are assigned in sorted signature order,
// so isomorphic vertices always share a colour.
std::vector<std::size_t> refined_colours(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> colour(n);
  for (Point v = 0; v < n; ++v)
    colour[v] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> signature(n);
    for (Point v = 0; v < n; ++v) {
      std::vector<std::size_t> around;
      for (Point w : g.neighbors(v))
        around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      signature[v] = {colour[v], std::move(around)};
      ids.emplace(signature[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids)
      id = next++;
    for (Point v = 0; v < n; ++v)
      colour[v] = ids[signature[v]];
    if (ids.size() == classes)
      return colour;
    classes = ids.size();
  }
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t cap)
      : g_(g), cap_(cap), colour_(refined_colours(g)), image_(g.vertex_count()),
        used_(g.vertex_count(), false) {}

  std::vector<Perm> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(Point v) {
    const std::size_t n = g_.vertex_count();
    if (v == n) {
      if (found_.size() >= cap_)
        throw ResourceError("automorphism element cap", cap_);
      found_.emplace_back(image_);
      return;
    }
    for (Point w = 0; w < n; ++w) {
      if (used_[w] || colour_[w] != colour_[v])
        continue;
      bool consistent = true;
      for (Point u = 0; u < v && consistent; ++u)
        consistent = g_.adjacent(u, v) == g_.adjacent(image_[u], w);
      if (!consistent)
        continue;
      image_[v] = w;
      used_[w] = true;
      extend(v + 1);
      used_[w] = false;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::size_t> colour_;
  std::vector<Point> image_;
  std::vector<bool> used_;
  std::vector<Perm> found_;
};

}  // namespace

PermGroup automorphism_group(const Graph& g, const AutomorphismLimits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw ResourceError("automorphism vertex limit", limits.max_vertices);
  auto elements = AutomorphismSearch(g, limits.element_cap).run();
  return PermGroup::from_elements(g.vertex_count(), std::move(elements));
}

GroupAction graph_action(const Graph& g, const AutomorphismLimits& limits) {
  GroupAction action = GroupAction::natural(automorphism_group(g, limits));
  if (!action.is_faithful())
    throw std::logic_error("graph automorphism action has a nontrivial kernel");
  return action;
}

SolveResult graph_distinguishing_number(const Graph& g, const AutomorphismLimits& limits) {
  return exact_distinguishing_number(graph_action(g, limits));
}

namespace {

void label_tree(const Graph& sub, const std::vector<Point>& ids, const AutomorphismLimits& limits,
                std::vector<Label>& labels, TreeDecoration& decoration) {
  const std::size_t n = sub.vertex_count();
  if (n == 1) {
    labels[ids[0]] = 1;
    return;
  }
  if (n == 2) {
    labels[ids[0]] = 1;
    labels[ids[1]] = 2;
    return;
  }

  auto partition = orbit_partition(graph_action(sub, limits));
  Point leaf = 0;
  while (sub.degree(leaf) != 1)
    ++leaf;
  const auto& leaf_orbit = partition.blocks[partition.block_of[leaf]];

  std::vector<bool> removed(n, false);
  std::vector<Point> original;
  for (Point v : leaf_orbit) {
    removed[v] = true;
    original.push_back(ids[v]);
  }
  decoration.leaf_orbit_sequence.push_back(std::move(original));

  std::vector<Point> rest;
  std::vector<Point> rest_ids;
  for (Point v = 0; v < n; ++v)
    if (!removed[v]) {
      rest.push_back(v);
      rest_ids.push_back(ids[v]);
    }
  label_tree(sub.induced(rest), rest_ids, limits, labels, decoration);

  for (Point u : rest) {
    Label next = 1;
    for (Point w : sub.neighbors(u))
      if (removed[w])
        labels[ids[w]] = next++;
  }
}

}  // namespace

TreeLabelling tree_labelling_with_decoration(const Graph& t, const AutomorphismLimits& limits) {
  if (!t.is_tree())
    throw PreconditionError("graph is not a tree");
  const std::size_t n = t.vertex_count();
  std::vector<Label> labels(n, 0);
  TreeLabelling result;
  for (Point v = 0; v < n; ++v)
    result.decoration.degrees.push_back(t.degree(v));
  std::vector<Point> ids(n);
  for (Point v = 0; v < n; ++v)
    ids[v] = v;
  label_tree(t, ids, limits, labels, result.decoration);
  result.labelling = Labelling(std::move(labels));

  const Label bound = static_cast<Label>(std::max<std::size_t>(t.max_degree(), 2));
  if (n >= 2 && result.labelling.label_count() > bound)
    throw std::logic_error("tree labelling used more than max(maxdeg, 2) labels");
  if (!is_distinguishing(graph_action(t, limits), result.labelling).distinguishing)
    throw std::logic_error("tree labelling is not distinguishing");
  return result;
}

Labelling tree_distinguishing_labelling(const Graph& t, const AutomorphismLimits& limits) {
  return tree_labelling_with_decoration(t, limits).labelling;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::hypothesis_not_met:
      return "hypothesis-not-met";
    case Verdict::violated:
      return "violated";
  }
  return "unknown";
}

namespace {

std::size_t distinct_restrictions(const GroupAction& action, std::span<const Point> block) {
  std::set<std::vector<Point>> seen;
  for (const Perm& img : action.images()) {
    std::vector<Point> r;
    r.reserve(block.size());
    for (Point x : block)
      r.push_back(img(x));
    seen.insert(std::move(r));
  }
  return seen.size();
}

}  // namespace

CompleteGraphVerdict check_complete_graph_characterization(const Graph& g,
                                                           const AutomorphismLimits& limits) {
  CompleteGraphVerdict out;
  GroupAction action = graph_action(g, limits);
  out.aut_order = action.order();
  out.n = factorial_root(out.aut_order);
  auto solved = exact_distinguishing_number(action);
  out.distinguishing_number = solved.k;

  auto partition = orbit_partition(action);
  std::size_t big = 0;
  std::size_t others = 0;
  const std::vector<Point>* block_n = nullptr;
  for (const auto& block : partition.blocks) {
    if (out.n >= 2 && block.size() == out.n) {
      ++big;
      block_n = &block;
    } else if (block.size() != 1) {
      ++others;
    }
  }

  if (out.n == 1) {
    out.structure_present = others == 0;
  } else if (out.n >= 2 && big == 1 && others == 0) {
    Graph inside = g.induced(*block_n);
    std::size_t pairs = out.n * (out.n - 1) / 2;
    bool complete_or_empty = inside.edges().empty() || inside.edges().size() == pairs;
    std::size_t full = 1;
    for (std::size_t i = 2; i <= out.n; ++i)
      full *= i;
    out.structure_present =
        complete_or_empty && distinct_restrictions(action, *block_n) == full;
  }

  if (out.n == 0) {
    out.detail = "|Aut| = " + std::to_string(out.aut_order) + " is not a factorial";
    out.verdict = Verdict::hypothesis_not_met;
  } else if (out.distinguishing_number != out.n) {
    out.detail = "D = " + std::to_string(out.distinguishing_number) + " differs from n = " +
                 std::to_string(out.n);
    // One full n-orbit with everything else fixed forces D = n.
    out.verdict = out.structure_present ? Verdict::violated : Verdict::hypothesis_not_met;
  } else {
    out.verdict = out.structure_present ? Verdict::holds : Verdict::violated;
    out.detail = out.structure_present
                     ? "one orbit spans K_n or its complement, the rest are fixed"
                     : "|Aut| = n! and D = n but the orbit structure differs";
  }
  return out;
}

namespace {

std::string rooted_code(const Graph& t, Point v, Point parent) {
  std::vector<std::string> children;
  for (Point w : t.neighbors(v))
    if (w != parent)
      children.push_back(rooted_code(t, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children)
    out += c;
  return out + ")";
}

std::vector<Point> tree_centres(const Graph& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<Point> layer;
  for (Point v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1)
      layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Point> next;
    for (Point v : layer)
      for (Point w : t.neighbors(v))
        if (--degree[w] == 1)
          next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_code(const Graph& t) {
  if (!t.is_tree())
    throw PreconditionError("graph is not a tree");
  std::string best;
  for (Point c : tree_centres(t)) {
    std::string code = rooted_code(t, c, static_cast<Point>(-1));
    if (best.empty() || code < best)
      best = std::move(code);
  }
  return best;
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  if (n == 0)
    return {};
  std::map<std::string, Graph> level{{"()", Graph(1, {})}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [code, tree] : level) {
      for (Point v = 0; v < tree.vertex_count(); ++v) {
        auto edges = tree.edges();
        edges.emplace_back(v, static_cast<Point>(size - 1));
        Graph grown(size, std::move(edges));
        next.emplace(tree_canonical_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, tree] : level)
    out.push_back(std::move(tree));
  return out;
}

Graph make_path(std::size_t n) {
  if (n < 1)
    throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Point v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle(std::size_t n) {
  if (n < 3)
    throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Point v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Point>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph make_complete(std::size_t n) { return make_empty(n).complement(); }

Graph make_empty(std::size_t n) { return Graph(n, {}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Point>(a.vertex_count());
  for (auto [u, v] : b.edges())
    edges.emplace_back(u + shift, v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::array<Graph, 3> make_figure2_graphs() {
  Graph triangle = make_complete(3);
  // Spider: legs 0-3, 1-4, 2-5 with centre 6 on the middle vertices.
  Graph spider(7, {{3, 6}, {4, 6}, {5, 6}, {0, 3}, {1, 4}, {2, 5}});
  return {disjoint_union(triangle, triangle), make_figure4_graph(),
          disjoint_union(spider, spider)};
}

Graph make_figure4_graph() {
  return Graph(8, {{0, 6}, {1, 6}, {2, 6}, {3, 7}, {4, 7}, {5, 7}});
}

Graph make_figure7_tree() { return make_star_path_tree(3, {2, 3}); }

Graph make_star_path_tree(std::size_t leaves, const std::vector<std::size_t>& path_lengths) {
  std::set<std::size_t> distinct(path_lengths.begin(), path_lengths.end());
  if (distinct.size() != path_lengths.size())
    throw InputError("path lengths must be pairwise distinct");
  if (!distinct.empty() && *distinct.begin() < 2)
    throw InputError("path lengths must be at least 2");
  std::vector<Edge> edges;
  Point next = 1;
  for (std::size_t i = 0; i < leaves; ++i)
    edges.emplace_back(0, next++);
  for (std::size_t len : path_lengths) {
    Point prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

}  // namespace distinguish
