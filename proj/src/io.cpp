#include "distinguish/io.hpp"

#include <algorithm>
#include <cstdio>

#include "distinguish/error.hpp"

namespace distinguish {

namespace {

std::size_t read_count(const Json& doc, const char* field) {
  if (!doc.contains(field))
    throw InputError(std::string("missing field \"") + field + "\"");
  const Json& value = doc.at(field);
  if (!value.is_number_unsigned())
    throw InputError(std::string("field \"") + field + "\" must be a non-negative integer");
  return value.get<std::size_t>();
}

Perm read_perm(const Json& value, std::size_t degree, const std::string& where) {
  if (!value.is_array() || value.size() != degree)
    throw InputError(where + " must be an array of " + std::to_string(degree) + " images");
  std::vector<Point> image;
  for (const Json& x : value) {
    if (!x.is_number_unsigned())
      throw InputError(where + " contains a non-integer entry");
    image.push_back(x.get<Point>());
  }
  try {
    return Perm(std::move(image));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json perm_json(const Perm& p) {
  Json out = Json::array();
  for (Point x : p.images())
    out.push_back(x);
  return out;
}

}  // namespace

GroupAction parse_action_document(const Json& doc) {
  if (!doc.is_object())
    throw InputError("action document must be a JSON object");
  const std::size_t degree = read_count(doc, "degree");
  if (!doc.contains("generators") || !doc.at("generators").is_array())
    throw InputError("field \"generators\" must be an array");
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < doc.at("generators").size(); ++i)
    gens.push_back(read_perm(doc.at("generators")[i], degree, "generators[" + std::to_string(i) + "]"));

  PermGroup group = PermGroup::generate(degree, gens);
  if (!doc.contains("generator_action")) {
    if (doc.contains("domain_size") && read_count(doc, "domain_size") != degree)
      throw InputError("domain_size must equal degree when generator_action is omitted");
    return GroupAction::natural(group);
  }

  const std::size_t domain = read_count(doc, "domain_size");
  const Json& acts = doc.at("generator_action");
  if (!acts.is_array() || acts.size() != gens.size())
    throw InputError("generator_action must have one entry per generator (" +
                     std::to_string(gens.size()) + ")");
  // Group generators are sorted and deduplicated; map each to its image.
  std::vector<Perm> images(group.generators().size(), Perm::identity(domain));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Perm image = read_perm(acts[i], domain, "generator_action[" + std::to_string(i) + "]");
    auto gens_sorted = group.generators();
    auto it = std::find(gens_sorted.begin(), gens_sorted.end(), gens[i]);
    std::size_t j = static_cast<std::size_t>(it - gens_sorted.begin());
    if (seen[j] && images[j] != image)
      throw InputError("generator_action gives a repeated generator two images");
    images[j] = std::move(image);
    seen[j] = true;
  }
  return GroupAction::from_generator_images(group, domain, images);
}

Json action_document(const GroupAction& action) {
  const PermGroup& group = action.group();
  Json doc;
  doc["degree"] = group.degree();
  doc["generators"] = Json::array();
  doc["domain_size"] = action.domain_size();
  doc["generator_action"] = Json::array();
  for (std::size_t idx : action.generator_indices()) {
    doc["generators"].push_back(perm_json(group.element(idx)));
    doc["generator_action"].push_back(perm_json(action.image(idx)));
  }
  return doc;
}

Graph parse_graph_document(const Json& doc) {
  if (!doc.is_object())
    throw InputError("graph document must be a JSON object");
  const std::size_t n = read_count(doc, "vertices");
  if (!doc.contains("edges") || !doc.at("edges").is_array())
    throw InputError("field \"edges\" must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc.at("edges").size(); ++i) {
    const Json& e = doc.at("edges")[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError("edges[" + std::to_string(i) + "] must be a pair of vertex indices");
    edges.emplace_back(e[0].get<Point>(), e[1].get<Point>());
  }
  return Graph(n, std::move(edges));
}

Json graph_document(const Graph& g) {
  Json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = Json::array();
  for (auto [u, v] : g.edges())
    doc["edges"].push_back({u, v});
  return doc;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": invalid JSON");
  }
}

std::string digest(const Json& doc) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace distinguish
