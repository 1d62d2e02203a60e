#include "distinguish/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "distinguish/catalog.hpp"

namespace distinguish {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Perm random_perm(Rng& rng, std::size_t m) {
  std::vector<Point> image(m);
  std::iota(image.begin(), image.end(), Point{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Perm(std::move(image));
}

bool is_odd(const Perm& p) {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type(p))
    transpositions += len - 1;
  return transpositions % 2 == 1;
}

// Each piece maps a group element to its permutation of the piece's points.
using Piece = std::function<std::vector<Point>(const Perm&)>;

Piece natural_piece(std::size_t m) {
  return [m](const Perm& g) {
    std::vector<Point> out(m);
    for (std::size_t x = 0; x < m; ++x)
      out[x] = g(static_cast<Point>(x));
    return out;
  };
}

Piece pairs_piece(std::size_t m) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < m; ++a)
    for (Point b = a + 1; b < m; ++b)
      pairs.emplace_back(a, b);
  return [pairs](const Perm& g) {
    std::vector<Point> out;
    for (auto [a, b] : pairs) {
      const Point ga = g(a);
      const Point gb = g(b);
      const std::pair<Point, Point> image(std::min(ga, gb), std::max(ga, gb));
      auto it = std::find(pairs.begin(), pairs.end(), image);
      out.push_back(static_cast<Point>(it - pairs.begin()));
    }
    return out;
  };
}

}  // namespace

GroupAction random_action(Rng& rng, const RandomActionOptions& options) {
  for (;;) {
    const std::size_t m = uniform(rng, std::min<std::size_t>(2, options.max_degree),
                                  options.max_degree);
    std::vector<Perm> gens;
    const std::size_t gen_count = uniform(rng, 1, options.max_generators);
    for (std::size_t i = 0; i < gen_count; ++i)
      gens.push_back(random_perm(rng, m));
    PermGroup group = PermGroup::generate(m, gens);
    if (group.order() > options.max_order)
      continue;

    std::vector<std::pair<std::size_t, Piece>> pieces;
    std::size_t total = 0;
    const std::size_t piece_count = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < piece_count; ++i) {
      std::size_t size = 0;
      Piece piece;
      std::size_t kind = uniform(rng, 0, 4);
      if (i == 0 && kind == 1)
        kind = 0;  // fixed points only join a moving piece
      switch (kind) {
        case 0:
          size = m;
          piece = natural_piece(m);
          break;
        case 1:
          size = uniform(rng, 1, 2);
          piece = [size](const Perm&) {
            std::vector<Point> out(size);
            std::iota(out.begin(), out.end(), Point{0});
            return out;
          };
          break;
        case 2:
          size = 2;
          piece = [](const Perm& g) {
            return is_odd(g) ? std::vector<Point>{1, 0} : std::vector<Point>{0, 1};
          };
          break;
        case 3:
          size = m * (m - 1) / 2;
          piece = pairs_piece(m);
          break;
        default: {
          size = group.order();
          auto translation = translation_action(group);
          piece = [translation, group](const Perm& g) {
            const Perm& image = translation.image(*group.index_of(g));
            return std::vector<Point>(image.images().begin(), image.images().end());
          };
        }
      }
      if (size == 0 || total + size > options.max_domain)
        continue;
      pieces.emplace_back(size, std::move(piece));
      total += size;
    }
    if (total == 0)
      continue;

    return GroupAction::from_element_map(group, total, [&](const Perm& g) {
      std::vector<Point> image;
      Point offset = 0;
      for (const auto& [size, piece] : pieces) {
        for (Point y : piece(g))
          image.push_back(offset + y);
        offset += static_cast<Point>(size);
      }
      return Perm(std::move(image));
    });
  }
}

Graph random_tree(Rng& rng, std::size_t n) {
  if (n <= 1)
    return Graph(n, {});
  if (n == 2)
    return Graph(2, {{0, 1}});
  std::vector<Point> code(n - 2);
  for (auto& c : code)
    c = static_cast<Point>(uniform(rng, 0, n - 1));
  std::vector<std::size_t> degree(n, 1);
  for (Point c : code)
    ++degree[c];
  std::set<Point> leaves;
  for (Point v = 0; v < n; ++v)
    if (degree[v] == 1)
      leaves.insert(v);
  std::vector<Edge> edges;
  for (Point c : code) {
    Point leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1)
      leaves.insert(c);
  }
  Point a = *leaves.begin();
  Point b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace distinguish
