#include "distinguish/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "distinguish/error.hpp"

namespace distinguish {

Perm::Perm(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Point v : image_) {
    if (v >= image_.size() || seen[v])
      throw InputError("not a permutation of 0.." + std::to_string(image_.size()) +
                       "-1");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.image_.resize(degree);
  std::iota(p.image_.begin(), p.image_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, std::string_view cycles) {
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos])))
      ++pos;
  };

  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(')
      throw InputError("expected '(' in cycle notation \"" + std::string(cycles) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= cycles.size())
        throw InputError("unterminated cycle in \"" + std::string(cycles) + "\"");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
        throw InputError("bad character in cycle notation \"" + std::string(cycles) + "\"");
      std::size_t value = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        value = value * 10 + static_cast<std::size_t>(cycles[pos++] - '0');
      if (value < 1 || value > degree)
        throw InputError("point " + std::to_string(value) + " out of range 1.." +
                         std::to_string(degree));
      if (used[value - 1])
        throw InputError("point " + std::to_string(value) + " repeated in cycle notation");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Perm(std::move(image));
}

Perm Perm::inverse() const {
  Perm inv;
  inv.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv.image_[image_[i]] = static_cast<Point>(i);
  return inv;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i)
      return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type(*this))
    result = std::lcm(result, len);
  return result;
}

std::string Perm::cycle_notation() const {
  std::string out;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start)
      continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = image_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InputError("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()) + ")");
  std::vector<Point> image(p.degree());
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = p(q(static_cast<Point>(i)));
  return Perm(std::move(image));
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start])
      continue;
    std::size_t len = 0;
    for (std::size_t x = start; !done[x]; x = p(static_cast<Point>(x))) {
      done[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace distinguish
