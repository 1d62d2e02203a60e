#include "distinguish/labelling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "distinguish/construction.hpp"
#include "distinguish/error.hpp"

namespace distinguish {

Labelling::Labelling(std::vector<Label> labels, Label label_count)
    : labels_(std::move(labels)), label_count_(label_count) {
  if (label_count_ < 1)
    throw InputError("label count must be at least 1");
  for (Label l : labels_)
    if (l < 1 || l > label_count_)
      throw InputError("label " + std::to_string(l) + " outside 1.." +
                       std::to_string(label_count_));
}

Labelling::Labelling(std::vector<Label> labels)
    : Labelling(labels, labels.empty() ? 1 : std::max<Label>(
                                                 1, *std::max_element(labels.begin(),
                                                                      labels.end()))) {}

Labelling Labelling::constant(std::size_t size) { return Labelling(std::vector<Label>(size, 1), 1); }

Label Labelling::distinct_labels() const {
  std::vector<bool> used(label_count_ + 1, false);
  Label count = 0;
  for (Label l : labels_)
    if (!used[l]) {
      used[l] = true;
      ++count;
    }
  return count;
}

Labelling Labelling::canonical() const {
  std::vector<Label> relabel(label_count_ + 1, 0);
  std::vector<Label> out(labels_.size());
  Label next = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    Label& r = relabel[labels_[i]];
    if (r == 0)
      r = ++next;
    out[i] = r;
  }
  return Labelling(std::move(out), std::max<Label>(next, 1));
}

namespace {

void check_size(const GroupAction& action, const Labelling& phi) {
  if (phi.size() != action.domain_size())
    throw InputError("labelling has " + std::to_string(phi.size()) +
                     " entries, domain has " + std::to_string(action.domain_size()));
}

bool preserves(const Perm& img, std::span<const Label> labels) {
  for (std::size_t x = 0; x < labels.size(); ++x)
    if (labels[img(static_cast<Point>(x))] != labels[x])
      return false;
  return true;
}

Label default_k_max(const GroupAction& action) { return factorial_bound(action.order()); }

}  // namespace

bool is_preserved_by(const GroupAction& action, const Labelling& phi, std::size_t element) {
  check_size(action, phi);
  return preserves(action.image(element), phi.labels());
}

std::vector<std::size_t> preserving_indices(const GroupAction& action, const Labelling& phi) {
  check_size(action, phi);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < action.order(); ++e)
    if (preserves(action.image(e), phi.labels()))
      out.push_back(e);
  return out;
}

PermGroup preserving_subgroup(const GroupAction& action, const Labelling& phi) {
  auto indices = preserving_indices(action, phi);
  std::vector<Perm> elements;
  elements.reserve(indices.size());
  for (std::size_t e : indices)
    elements.push_back(action.group().element(e));
  auto gens = elements;
  PermGroup group =
      PermGroup::from_elements(action.group().degree(), std::move(elements), std::move(gens));
  assert(group.order() > 500 || group.is_closed());
  return group;
}

DistinguishingCertificate is_distinguishing(const GroupAction& action, const Labelling& phi) {
  DistinguishingCertificate cert;
  cert.labelling = phi;
  cert.preserving_subgroup_order = preserving_indices(action, phi).size();
  cert.kernel_order = action.kernel_indices().size();
  cert.distinguishing = cert.preserving_subgroup_order == cert.kernel_order;
  return cert;
}

namespace {

class RestrictedGrowthSearch {
 public:
  explicit RestrictedGrowthSearch(const GroupAction& action)
      : action_(action), n_(action.domain_size()), by_last_moved_(action.domain_size()) {
    for (std::size_t e = 0; e < action.order(); ++e) {
      const Perm& img = action.image(e);
      std::size_t last = n_;
      for (std::size_t x = n_; x-- > 0;)
        if (img(static_cast<Point>(x)) != x) {
          last = x;
          break;
        }
      if (last != n_)
        by_last_moved_[last].push_back(e);
    }
  }

  std::optional<Labelling> solve(Label k) {
    k_ = k;
    labels_.assign(n_, 0);
    if (!descend(0, 0))
      return std::nullopt;
    return Labelling(labels_, k);
  }

 private:
  bool descend(std::size_t pos, Label used) {
    if (pos == n_)
      return true;
    Label top = std::min<Label>(used + 1, k_);
    for (Label l = 1; l <= top; ++l) {
      labels_[pos] = l;
      if (!dead_end(pos) && descend(pos + 1, std::max(used, l)))
        return true;
    }
    labels_[pos] = 0;
    return false;
  }

  // Elements whose last moved point is `pos` permute {0..pos}; if one of them
  // preserves the labels assigned so far it preserves every completion.
  bool dead_end(std::size_t pos) const {
    for (std::size_t e : by_last_moved_[pos]) {
      const Perm& img = action_.image(e);
      bool preserved = true;
      for (std::size_t x = 0; x <= pos && preserved; ++x)
        preserved = labels_[img(static_cast<Point>(x))] == labels_[x];
      if (preserved)
        return true;
    }
    return false;
  }

  const GroupAction& action_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> by_last_moved_;
  std::vector<Label> labels_;
  Label k_ = 1;
};

}  // namespace

SolveResult exact_distinguishing_number(const GroupAction& action, std::optional<Label> k_max) {
  SolveResult result;
  result.k_max = k_max.value_or(default_k_max(action));
  if (result.k_max < 1)
    throw InputError("k_max must be at least 1");
  RestrictedGrowthSearch search(action);
  for (Label k = 1; k <= result.k_max; ++k) {
    if (auto witness = search.solve(k)) {
      result.k = k;
      result.witness = std::move(witness);
      break;
    }
  }
  return result;
}

std::optional<Label> brute_force_distinguishing_number(const GroupAction& action,
                                                       std::optional<Label> k_max) {
  const Label limit = k_max.value_or(default_k_max(action));
  if (limit < 1)
    throw InputError("k_max must be at least 1");
  const std::size_t n = action.domain_size();
  if (std::pow(static_cast<double>(limit), static_cast<double>(n)) > kBruteForceBudget)
    throw ResourceError("brute-force labelling budget", static_cast<std::size_t>(kBruteForceBudget));

  std::vector<std::size_t> movers;
  for (std::size_t e = 0; e < action.order(); ++e)
    if (!action.image(e).is_identity())
      movers.push_back(e);

  for (Label k = 1; k <= limit; ++k) {
    std::vector<Label> labels(n, 1);
    for (;;) {
      bool distinguishing = std::none_of(movers.begin(), movers.end(), [&](std::size_t e) {
        return preserves(action.image(e), labels);
      });
      if (distinguishing)
        return k;
      std::size_t i = 0;
      while (i < n && labels[i] == k)
        labels[i++] = 1;
      if (i == n)
        break;
      ++labels[i];
    }
  }
  return std::nullopt;
}

Labelling combine_orbit_labellings(const GroupAction& action,
                                   std::span<const Point> orbit_points,
                                   const Labelling& on_orbit, const Labelling& on_rest) {
  std::vector<bool> in_orbit(action.domain_size(), false);
  for (Point x : orbit_points) {
    if (x >= action.domain_size())
      throw InputError("orbit point outside domain");
    in_orbit[x] = true;
  }
  std::vector<Point> rest;
  for (Point x = 0; x < action.domain_size(); ++x)
    if (!in_orbit[x])
      rest.push_back(x);

  if (on_orbit.size() != orbit_points.size() || on_rest.size() != rest.size())
    throw PreconditionError("labelling sizes do not match the orbit and its complement");

  GroupAction orbit_action = action.restrict_to_subset(orbit_points);
  if (orbit_partition(orbit_action).size() != (orbit_points.empty() ? 0 : 1))
    throw PreconditionError("points do not form a single orbit");
  if (!is_distinguishing(orbit_action, on_orbit).distinguishing)
    throw PreconditionError("orbit labelling is not distinguishing");
  if (!is_distinguishing(action.restrict_to_subset(rest), on_rest).distinguishing)
    throw PreconditionError("complement labelling is not distinguishing");

  std::vector<Label> labels(action.domain_size(), 1);
  for (std::size_t i = 0; i < orbit_points.size(); ++i)
    labels[orbit_points[i]] = on_orbit[i];
  for (std::size_t i = 0; i < rest.size(); ++i)
    labels[rest[i]] = on_rest[i];
  Labelling glued(std::move(labels), std::max(on_orbit.label_count(), on_rest.label_count()));
  if (!is_distinguishing(action, glued).distinguishing)
    throw std::logic_error("glued orbit labelling failed to distinguish");
  return glued;
}

Labelling relatively_prime_orbit_labelling(const GroupAction& action,
                                           std::span<const Point> first_orbit,
                                           std::span<const Point> second_orbit) {
  if (first_orbit.empty() || second_orbit.empty())
    throw PreconditionError("orbits must be non-empty");
  for (auto block : {first_orbit, second_orbit}) {
    std::vector<Point> sorted(block.begin(), block.end());
    std::sort(sorted.begin(), sorted.end());
    if (orbit(action, sorted.front()) != sorted)
      throw PreconditionError("point set is not an orbit");
  }
  const std::size_t order = action.order();
  const std::size_t stab1 = order / first_orbit.size();
  const std::size_t stab2 = order / second_orbit.size();
  if (std::gcd(stab1, stab2) != 1)
    throw PreconditionError("stabilizer orders " + std::to_string(stab1) + " and " +
                            std::to_string(stab2) + " are not relatively prime");

  std::vector<Label> labels(action.domain_size(), 1);
  labels[*std::min_element(first_orbit.begin(), first_orbit.end())] = 2;
  labels[*std::min_element(second_orbit.begin(), second_orbit.end())] = 2;
  Labelling phi(std::move(labels), 2);
  if (!is_distinguishing(action, phi).distinguishing)
    throw std::logic_error("relatively prime orbit labelling failed to distinguish");
  return phi;
}

}  // namespace distinguish
