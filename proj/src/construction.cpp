#include "distinguish/construction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "distinguish/error.hpp"

namespace distinguish {

Label factorial_bound(std::size_t gamma_order) {
  if (gamma_order == 0)
    throw InputError("group order must be positive");
  Label k = 1;
  std::size_t factorial = 1;
  while (factorial < gamma_order) {
    ++k;
    if (factorial > std::numeric_limits<std::size_t>::max() / k)
      break;
    factorial *= k;
  }
  return k;
}

std::size_t factorial_root(std::size_t order) {
  std::size_t f = 1;
  for (std::size_t n = 1; f <= order; ++n) {
    if (f > std::numeric_limits<std::size_t>::max() / n)
      break;
    f *= n;
    if (f == order)
      return n;
  }
  return 0;
}

const GroupAction& ConstructionTrace::group(std::size_t i) const {
  if (i < 1 || i > label_count())
    throw std::out_of_range("stage group index " + std::to_string(i));
  return i == label_count() ? final_group : stages[i - 1].group;
}

const std::vector<Point>& ConstructionTrace::remaining(std::size_t i) const {
  if (i < 1 || i > label_count())
    throw std::out_of_range("stage set index " + std::to_string(i));
  return i == label_count() ? final_remaining : stages[i - 1].remaining;
}

const std::vector<Point>& ConstructionTrace::chosen(std::size_t i) const {
  if (i < 2 || i > label_count())
    throw std::out_of_range("chosen set index " + std::to_string(i));
  return stages[i - 2].chosen;
}

namespace {

bool moves_some(const GroupAction& group, std::span<const Point> points) {
  for (const Perm& img : group.images())
    for (Point x : points)
      if (img(x) != x)
        return true;
  return false;
}

std::vector<Point> set_difference(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<Point>& sorted, Point x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<Point> intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Perm> sorted_elements(const GroupAction& action) {
  std::vector<Perm> out(action.group().elements().begin(), action.group().elements().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t saturating_multiply(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::string chain_violation(const ConstructionTrace& trace, const WitnessChain& chain) {
  const std::size_t j = chain.size();
  if (j == 0)
    return {};
  if (j > trace.label_count())
    return "chain longer than the label count";
  for (Point y : chain.points)
    if (y >= trace.action.domain_size())
      return "chain point outside the domain";
  for (std::size_t i = 1; i <= j; ++i)
    if (trace.labelling[chain.y(i)] != i)
      return "phi(y_" + std::to_string(i) + ") != " + std::to_string(i);
  if (j == 1)
    return {};
  for (std::size_t i = 2; i + 1 <= j; ++i)
    if (!contains(orbit(trace.group(i - 1), chain.y(i)), chain.y(i + 1)))
      return "y_" + std::to_string(i + 1) + " not in Gamma_" + std::to_string(i - 1) +
             ".y_" + std::to_string(i);
  if (!contains(orbit(trace.group(j - 1), chain.y(j)), chain.y(1)))
    return "y_1 not in Gamma_" + std::to_string(j - 1) + ".y_" + std::to_string(j);
  return {};
}

}  // namespace

ConstructionTrace run_construction(const GroupAction& action) {
  const std::size_t n = action.domain_size();
  std::vector<Label> labels(n, 1);
  std::vector<Point> remaining(n);
  for (std::size_t x = 0; x < n; ++x)
    remaining[x] = static_cast<Point>(x);

  ConstructionTrace trace{action, {}, action, {}, {}};
  GroupAction current = action;
  Label next_label = 2;

  while (moves_some(current, remaining)) {
    std::vector<bool> seen(n, false);
    std::vector<Point> chosen;
    for (Point x : remaining) {
      if (seen[x])
        continue;
      auto block = orbit(current, x);
      for (Point y : block)
        seen[y] = true;
      if (block.size() >= 2)
        chosen.push_back(block.front());  // x is the least unseen point, so block.front() == x
    }
    for (Point x : chosen)
      labels[x] = next_label;

    auto next_remaining = set_difference(remaining, chosen);
    if (next_remaining.size() >= remaining.size())
      throw std::logic_error("construction failed to shrink the unlabelled set");
    auto stabilizer = current.restrict_to_subgroup(pointwise_stabilizer_indices(current, chosen));

    trace.stages.push_back({current, remaining, chosen});
    current = std::move(stabilizer);
    remaining = std::move(next_remaining);
    ++next_label;
  }

  trace.final_group = std::move(current);
  trace.final_remaining = std::move(remaining);
  trace.labelling = Labelling(std::move(labels), static_cast<Label>(trace.stages.size() + 1));
  return trace;
}

WitnessChain extract_witness_chain(const ConstructionTrace& trace) {
  const std::size_t k = trace.label_count();
  WitnessChain chain;
  if (k < 2)
    return chain;

  std::vector<Point> points(k + 1);  // 1-based scratch
  const GroupAction& last_moving = trace.group(k - 1);
  bool found = false;
  for (Point y : trace.remaining(k)) {
    auto block = orbit(last_moving, y);
    if (block.size() < 2)
      continue;
    auto hit = intersect(block, trace.chosen(k));
    if (hit.size() != 1)
      throw std::logic_error("orbit of y_1 does not meet X'_k in exactly one point");
    points[1] = y;
    points[k] = hit.front();
    found = true;
    break;
  }
  if (!found)
    throw std::logic_error("no point of X_k has a nontrivial Gamma_{k-1}-orbit");

  for (std::size_t i = k; i >= 3; --i) {
    auto hit = intersect(orbit(trace.group(i - 2), points[i]), trace.chosen(i - 1));
    if (hit.size() != 1)
      throw std::logic_error("Gamma_" + std::to_string(i - 2) + ".y_" + std::to_string(i) +
                             " does not meet X'_" + std::to_string(i - 1) +
                             " in exactly one point");
    points[i - 1] = hit.front();
  }

  chain.points.assign(points.begin() + 1, points.end());
  if (auto why = chain_violation(trace, chain); !why.empty())
    throw std::logic_error("extracted witness chain is invalid: " + why);
  return chain;
}

LowerBoundReport verify_lower_bound(const ConstructionTrace& trace, const WitnessChain& chain) {
  if (auto why = chain_violation(trace, chain); !why.empty())
    throw PreconditionError("witness chain does not match trace: " + why);

  LowerBoundReport report;
  report.group_order = trace.action.order();
  const std::size_t j = chain.size();
  if (j == 0)
    return report;

  for (std::size_t i = 2; i <= j; ++i) {
    std::size_t size = orbit(trace.group(i - 1), chain.y(i)).size();
    report.orbit_sizes.push_back(size);
    report.product = saturating_multiply(report.product, size);
    if (size < j - i + 2)
      report.orbit_sizes_large_enough = false;
  }
  const GroupAction& last = trace.group(j);
  const Point y1 = chain.y(1);
  report.final_orbit_size = orbit(last, y1).size();
  report.final_stabilizer_size = pointwise_stabilizer_indices(last, {&y1, 1}).size();
  report.product = saturating_multiply(report.product, report.final_orbit_size);
  report.product = saturating_multiply(report.product, report.final_stabilizer_size);
  report.product_within_order = report.product <= report.group_order;
  return report;
}

std::string validate_trace(const ConstructionTrace& trace) {
  const std::size_t n = trace.action.domain_size();
  const std::size_t k = trace.label_count();
  if (trace.labelling.size() != n || trace.labelling.label_count() != k)
    return "labelling shape does not match the trace";
  if (trace.group(1).order() != trace.action.order())
    return "Gamma_1 is not the whole group";
  if (trace.remaining(1).size() != n)
    return "X_1 is not the whole domain";

  for (std::size_t i = 1; i < k; ++i) {
    const GroupAction& gamma = trace.group(i);
    const auto& here = trace.remaining(i);
    const auto& chosen = trace.chosen(i + 1);
    if (!std::includes(here.begin(), here.end(), chosen.begin(), chosen.end()))
      return "X'_" + std::to_string(i + 1) + " is not inside X_" + std::to_string(i);
    if (trace.remaining(i + 1) != set_difference(here, chosen))
      return "X_" + std::to_string(i + 1) + " != X_" + std::to_string(i) + " minus X'_" +
             std::to_string(i + 1);
    for (Point x : here) {
      auto block = orbit(gamma, x);
      std::size_t hits = intersect(block, chosen).size();
      if (block.size() >= 2 ? hits != 1 : hits != 0)
        return "X'_" + std::to_string(i + 1) + " meets the Gamma_" + std::to_string(i) +
               "-orbit of " + std::to_string(x) + " in " + std::to_string(hits) + " points";
    }
    auto stab = gamma.restrict_to_subgroup(pointwise_stabilizer_indices(gamma, chosen));
    if (sorted_elements(stab) != sorted_elements(trace.group(i + 1)))
      return "Gamma_" + std::to_string(i + 1) + " is not the stabilizer of X'_" +
             std::to_string(i + 1) + " in Gamma_" + std::to_string(i);
    if (trace.group(i + 1).order() >= gamma.order())
      return "stabilizer chain does not shrink at stage " + std::to_string(i);
    for (Point x : chosen)
      if (trace.labelling[x] != i + 1)
        return "point of X'_" + std::to_string(i + 1) + " not labelled " + std::to_string(i + 1);
  }
  if (moves_some(trace.group(k), trace.remaining(k)))
    return "loop stopped while Gamma_k still moves X_k";
  for (Point x : trace.remaining(k))
    if (trace.labelling[x] != 1)
      return "point of X_k not labelled 1";
  return {};
}

}  // namespace distinguish
