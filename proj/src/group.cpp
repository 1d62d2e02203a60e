#include "distinguish/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "distinguish/error.hpp"

namespace distinguish {

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Perm> elements;
  std::vector<Perm> generators;
  std::vector<std::uint32_t> sorted;  // element indices in lexicographic order
  std::size_t identity = 0;
};

std::shared_ptr<PermGroup::Data> PermGroup::index(std::size_t degree,
                                                  std::vector<Perm> elements) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = std::move(elements);
  data->sorted.resize(data->elements.size());
  std::iota(data->sorted.begin(), data->sorted.end(), 0U);
  const auto& els = data->elements;
  std::sort(data->sorted.begin(), data->sorted.end(),
            [&](std::uint32_t a, std::uint32_t b) { return els[a] < els[b]; });
  return data;
}

PermGroup::PermGroup() : PermGroup(generate(0, {})) {}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Perm> generators,
                              std::size_t element_cap) {
  if (element_cap < 1)
    throw InputError("element cap must be at least 1");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.cycle_notation() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<Perm, std::size_t, PermHash> seen{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : generators) {
      Perm next = compose(g, elements[head]);
      if (seen.contains(next))
        continue;
      if (elements.size() >= element_cap)
        throw ResourceError("group element cap", element_cap);
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }

  auto data = index(degree, std::move(elements));
  data->generators = std::move(generators);
  data->identity = 0;
  return PermGroup(std::move(data));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  for (const Perm& g : elements)
    if (g.degree() != degree)
      throw InputError("element degree mismatch");
  auto data = index(degree, std::move(elements));
  PermGroup group(data);
  auto id = group.index_of(Perm::identity(degree));
  if (!id)
    throw InputError("subgroup element list lacks the identity");
  data->identity = *id;

  if (generators.empty()) {
    // Greedy generating set: walk elements in order, adding any element not
    // yet in the generated subgroup. Old members only need products with the
    // new generator; newly discovered members need products with all of them.
    const std::size_t n = data->elements.size();
    std::vector<bool> member(n, false);
    std::vector<std::size_t> members{*id};
    member[*id] = true;
    std::vector<std::size_t> gens;
    for (std::size_t e = 0; e < n && members.size() < n; ++e) {
      if (member[e])
        continue;
      gens.push_back(e);
      const Perm& fresh = data->elements[e];
      std::deque<std::size_t> queue;
      std::size_t old_count = members.size();
      for (std::size_t i = 0; i < old_count; ++i) {
        auto idx = group.index_of(compose(fresh, data->elements[members[i]]));
        if (idx && !member[*idx]) {
          member[*idx] = true;
          members.push_back(*idx);
          queue.push_back(*idx);
        }
      }
      while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t g : gens) {
          auto idx = group.index_of(compose(data->elements[g], data->elements[x]));
          if (idx && !member[*idx]) {
            member[*idx] = true;
            members.push_back(*idx);
            queue.push_back(*idx);
          }
        }
      }
    }
    for (std::size_t g : gens)
      generators.push_back(data->elements[g]);
  }
  data->generators = std::move(generators);
  return group;
}

std::size_t PermGroup::degree() const { return data_->degree; }
std::size_t PermGroup::order() const { return data_->elements.size(); }
std::span<const Perm> PermGroup::elements() const { return data_->elements; }
std::span<const Perm> PermGroup::generators() const { return data_->generators; }
const Perm& PermGroup::element(std::size_t index) const { return data_->elements.at(index); }
std::size_t PermGroup::identity_index() const { return data_->identity; }

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  const auto& els = data_->elements;
  auto it = std::lower_bound(data_->sorted.begin(), data_->sorted.end(), p,
                             [&](std::uint32_t idx, const Perm& q) { return els[idx] < q; });
  if (it == data_->sorted.end() || els[*it] != p)
    return std::nullopt;
  return *it;
}

bool PermGroup::is_closed() const {
  for (const Perm& a : elements()) {
    if (!contains(a.inverse()))
      return false;
    for (const Perm& b : elements())
      if (!contains(compose(a, b)))
        return false;
  }
  return true;
}

PermGroup enumerate_group(std::size_t degree, std::vector<Perm> generators,
                          std::size_t element_cap) {
  return PermGroup::generate(degree, std::move(generators), element_cap);
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2)
    gens.push_back(Perm::from_cycles(n, "(1 2)"));
  if (n >= 3)
    gens.push_back(cyclic_group(n).generators().front());
  return PermGroup::generate(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> image(n);
    for (std::size_t i = 0; i < n; ++i)
      image[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(image));
  }
  return PermGroup::generate(n, std::move(gens));
}

}  // namespace distinguish
