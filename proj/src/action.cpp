#include "distinguish/action.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "distinguish/error.hpp"

namespace distinguish {

struct GroupAction::Data {
  PermGroup group;
  std::size_t domain_size = 0;
  std::vector<Perm> images;
  std::vector<std::size_t> generators;
  std::vector<std::size_t> kernel;
};

namespace {

std::vector<std::size_t> generator_indices_of(const PermGroup& group) {
  std::vector<std::size_t> out;
  for (const Perm& g : group.generators()) {
    auto idx = group.index_of(g);
    if (!idx)
      throw InputError("generator " + g.cycle_notation() + " is not a group element");
    out.push_back(*idx);
  }
  return out;
}

std::vector<std::size_t> kernel_of(std::span<const Perm> images) {
  std::vector<std::size_t> kernel;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].is_identity())
      kernel.push_back(i);
  return kernel;
}

}  // namespace

GroupAction::GroupAction(PermGroup group, std::size_t domain_size,
                         std::vector<Perm> element_images) {
  if (element_images.size() != group.order())
    throw InputError("action needs one image per group element (" +
                     std::to_string(group.order()) + "), got " +
                     std::to_string(element_images.size()));
  for (const Perm& img : element_images)
    if (img.degree() != domain_size)
      throw InputError("action image has degree " + std::to_string(img.degree()) +
                       ", expected domain size " + std::to_string(domain_size));
  if (!element_images[group.identity_index()].is_identity())
    throw InputError("identity element does not act trivially");

  auto gens = generator_indices_of(group);
  const auto elements = group.elements();
  for (std::size_t s : gens) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
      auto product = group.index_of(compose(elements[s], elements[e]));
      if (!product)
        throw InputError("group is not closed under composition");
      if (element_images[*product] != compose(element_images[s], element_images[e]))
        throw InputError("element images do not form a homomorphism");
    }
  }

  auto data = std::make_shared<Data>();
  data->kernel = kernel_of(element_images);
  data->group = std::move(group);
  data->domain_size = domain_size;
  data->images = std::move(element_images);
  data->generators = std::move(gens);
  data_ = std::move(data);
}

GroupAction GroupAction::natural(PermGroup group) {
  auto data = std::make_shared<Data>();
  data->domain_size = group.degree();
  data->images.assign(group.elements().begin(), group.elements().end());
  data->generators = generator_indices_of(group);
  data->kernel = kernel_of(data->images);
  data->group = std::move(group);
  return GroupAction(std::move(data));
}

GroupAction GroupAction::from_generator_images(PermGroup group, std::size_t domain_size,
                                               std::span<const Perm> generator_images) {
  const auto gens = group.generators();
  if (generator_images.size() != gens.size())
    throw InputError("expected " + std::to_string(gens.size()) +
                     " generator images, got " + std::to_string(generator_images.size()));
  for (const Perm& img : generator_images)
    if (img.degree() != domain_size)
      throw InputError("generator image has degree " + std::to_string(img.degree()) +
                       ", expected domain size " + std::to_string(domain_size));

  // Breadth-first over the group, assigning images along generator edges. Any
  // edge whose target already holds a different image means the generator
  // assignment does not extend to a homomorphism.
  const auto elements = group.elements();
  std::vector<std::optional<Perm>> images(group.order());
  images[group.identity_index()] = Perm::identity(domain_size);
  std::deque<std::size_t> queue{group.identity_index()};
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto target = group.index_of(compose(gens[j], elements[e]));
      if (!target)
        throw InputError("group is not closed under composition");
      Perm img = compose(generator_images[j], *images[e]);
      if (images[*target]) {
        if (*images[*target] != img)
          throw InputError("generator images do not define a homomorphism");
        continue;
      }
      images[*target] = std::move(img);
      queue.push_back(*target);
    }
  }

  auto data = std::make_shared<Data>();
  data->images.reserve(images.size());
  for (auto& img : images) {
    if (!img)
      throw InputError("generators do not generate the group");
    data->images.push_back(std::move(*img));
  }
  data->domain_size = domain_size;
  data->generators = generator_indices_of(group);
  data->kernel = kernel_of(data->images);
  data->group = std::move(group);
  return GroupAction(std::move(data));
}

GroupAction GroupAction::from_element_map(PermGroup group, std::size_t domain_size,
                                          const std::function<Perm(const Perm&)>& image_of) {
  std::vector<Perm> images;
  images.reserve(group.order());
  for (const Perm& g : group.elements())
    images.push_back(image_of(g));
  return GroupAction(std::move(group), domain_size, std::move(images));
}

const PermGroup& GroupAction::group() const { return data_->group; }
std::size_t GroupAction::order() const { return data_->images.size(); }
std::size_t GroupAction::domain_size() const { return data_->domain_size; }
const Perm& GroupAction::image(std::size_t element) const { return data_->images.at(element); }
std::span<const Perm> GroupAction::images() const { return data_->images; }
std::span<const std::size_t> GroupAction::generator_indices() const {
  return data_->generators;
}
std::span<const std::size_t> GroupAction::kernel_indices() const { return data_->kernel; }

GroupAction GroupAction::restrict_to_subgroup(std::span<const std::size_t> elements) const {
  std::vector<Perm> group_elements;
  std::vector<Perm> images;
  group_elements.reserve(elements.size());
  images.reserve(elements.size());
  for (std::size_t e : elements) {
    group_elements.push_back(group().element(e));
    images.push_back(image(e));
  }
  auto gens = group_elements;
  auto data = std::make_shared<Data>();
  data->group =
      PermGroup::from_elements(group().degree(), std::move(group_elements), std::move(gens));
  data->domain_size = domain_size();
  data->images = std::move(images);
  data->generators.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    data->generators[i] = i;
  data->kernel = kernel_of(data->images);
  return GroupAction(std::move(data));
}

GroupAction GroupAction::restrict_to_subset(std::span<const Point> subset) const {
  constexpr Point kAbsent = static_cast<Point>(-1);
  std::vector<Point> position(domain_size(), kAbsent);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= domain_size() || position[subset[i]] != kAbsent)
      throw PreconditionError("subset has out-of-range or repeated points");
    position[subset[i]] = static_cast<Point>(i);
  }
  for (std::size_t g : generator_indices())
    for (Point x : subset)
      if (position[image(g)(x)] == kAbsent)
        throw PreconditionError("subset is not invariant under the action");

  auto data = std::make_shared<Data>();
  data->images.reserve(order());
  for (const Perm& img : images()) {
    std::vector<Point> restricted(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      restricted[i] = position[img(subset[i])];
    data->images.emplace_back(std::move(restricted));
  }
  data->group = group();
  data->domain_size = subset.size();
  data->generators = data_->generators;
  data->kernel = kernel_of(data->images);
  return GroupAction(std::move(data));
}

bool GroupAction::is_homomorphism_exhaustive() const {
  const auto elements = group().elements();
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto ab = group().index_of(compose(elements[a], elements[b]));
      if (!ab || image(*ab) != compose(image(a), image(b)))
        return false;
    }
  return image(group().identity_index()).is_identity();
}

std::vector<Point> orbit(const GroupAction& action, Point x) {
  if (x >= action.domain_size())
    throw InputError("point " + std::to_string(x) + " outside domain of size " +
                     std::to_string(action.domain_size()));
  std::vector<bool> seen(action.domain_size(), false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t g : action.generator_indices()) {
      Point y = action.apply(g, out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitPartition orbit_partition(const GroupAction& action) {
  OrbitPartition partition;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  partition.block_of.assign(action.domain_size(), kUnassigned);
  for (Point x = 0; x < action.domain_size(); ++x) {
    if (partition.block_of[x] != kUnassigned)
      continue;
    auto block = orbit(action, x);
    for (Point y : block)
      partition.block_of[y] = partition.blocks.size();
    partition.representatives.push_back(x);
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

std::vector<std::size_t> pointwise_stabilizer_indices(const GroupAction& action,
                                                      std::span<const Point> points) {
  for (Point y : points)
    if (y >= action.domain_size())
      throw InputError("point " + std::to_string(y) + " outside domain");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < action.order(); ++e) {
    const Perm& img = action.image(e);
    if (std::all_of(points.begin(), points.end(), [&](Point y) { return img(y) == y; }))
      out.push_back(e);
  }
  return out;
}

PermGroup pointwise_stabilizer(const GroupAction& action, std::span<const Point> points) {
  std::vector<Perm> elements;
  for (std::size_t e : pointwise_stabilizer_indices(action, points))
    elements.push_back(action.group().element(e));
  auto gens = elements;
  return PermGroup::from_elements(action.group().degree(), std::move(elements), std::move(gens));
}

PermGroup action_kernel(const GroupAction& action) {
  std::vector<Point> all(action.domain_size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<Point>(i);
  return pointwise_stabilizer(action, all);
}

}  // namespace distinguish
