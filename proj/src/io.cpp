#include "bdsk/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "bdsk/errors.hpp"

namespace bdsk {

namespace {

using Json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string pointer(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += "/" + p;
  return out.empty() ? "/" : out;
}

// Parses JSON, rejecting duplicate object keys. Duplicate keys inside a
// dual map are reported as a non-functional map.
Json parse_strict(std::string_view text) {
  struct Frame {
    bool object = false;
    std::set<std::string> keys;
    std::string key;
  };
  std::vector<Frame> frames;
  auto path = [&] {
    std::vector<std::string> parts;
    for (const auto& f : frames) parts.push_back(f.object ? f.key : "[]");
    return parts;
  };
  Json::parser_callback_t callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        frames.push_back({true, {}, {}});
        break;
      case Json::parse_event_t::array_start:
        frames.push_back({false, {}, {}});
        break;
      case Json::parse_event_t::object_end:
      case Json::parse_event_t::array_end:
        frames.pop_back();
        break;
      case Json::parse_event_t::key: {
        auto& top = frames.back();
        top.key = parsed.get<std::string>();
        if (!top.keys.insert(top.key).second) {
          const auto parts = path();
          const auto where = pointer(parts);
          if (parts.size() == 3 && parts[0] == "dual_maps")
            throw NonFunctionalMapError(where, "atom has two images under label '" + parts[1] + "'");
          throw SchemaError(where, "duplicate key '" + top.key + "'");
        }
        break;
      }
      case Json::parse_event_t::value:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::parse_error& e) {
    throw SchemaError(line_column(text, e.byte), "malformed JSON");
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where, "missing field '" + key + "'");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw SchemaError(where, "unknown field '" + k + "'");
  }
}

std::vector<std::string> id_list(const Json& arr, const std::string& where, bool nonempty) {
  if (!arr.is_array()) throw SchemaError(where, "expected an array of ids");
  if (nonempty && arr.empty()) throw SchemaError(where, "must be nonempty");
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto here = where + "/" + std::to_string(i);
    if (!arr[i].is_string()) throw SchemaError(here, "expected a string id");
    auto id = arr[i].get<std::string>();
    if (id.empty()) throw SchemaError(here, "empty id");
    if (!seen.insert(id).second) throw SchemaError(here, "duplicate id '" + id + "'");
    out.push_back(std::move(id));
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

BdsSpec parse_bds(std::string_view text) {
  const auto doc = parse_strict(text);
  if (!doc.is_object()) throw SchemaError("/", "expected an object");
  only_keys(doc, {"format_version", "atoms", "labels", "dual_maps"}, "/");
  const auto& version = require(doc, "format_version", "/");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    throw SchemaError("/format_version", "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  auto atoms = id_list(require(doc, "atoms", "/"), "/atoms", true);
  auto labels = id_list(require(doc, "labels", "/"), "/labels", false);

  std::unordered_map<std::string, std::size_t> atom_index;
  for (std::size_t i = 0; i < atoms.size(); ++i) atom_index.emplace(atoms[i], i);
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index.emplace(labels[i], i);

  std::vector<BdsSpec::PartialMap> maps(labels.size(), BdsSpec::PartialMap(atoms.size()));
  const auto& dual = require(doc, "dual_maps", "/");
  if (!dual.is_object()) throw SchemaError("/dual_maps", "expected an object keyed by label");
  for (const auto& [label, entries] : dual.items()) {
    const auto where = "/dual_maps/" + label;
    auto l = label_index.find(label);
    if (l == label_index.end()) throw UndeclaredIdError(where, "undeclared label '" + label + "'");
    if (!entries.is_object()) throw SchemaError(where, "expected an object atom -> atom");
    for (const auto& [from, to] : entries.items()) {
      const auto here = where + "/" + from;
      auto u = atom_index.find(from);
      if (u == atom_index.end()) throw UndeclaredIdError(here, "undeclared atom '" + from + "'");
      if (!to.is_string()) throw SchemaError(here, "expected an atom id");
      auto v = atom_index.find(to.get<std::string>());
      if (v == atom_index.end()) throw UndeclaredIdError(here, "undeclared atom '" + to.get<std::string>() + "'");
      maps[l->second][u->second] = v->second;
    }
  }
  return BdsSpec(std::move(atoms), std::move(labels), std::move(maps));
}

std::string serialize_bds(const BdsSpec& spec) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["atoms"] = spec.atom_ids();
  doc["labels"] = spec.label_ids();
  Json maps = Json::object();
  for (std::size_t l = 0; l < spec.label_count(); ++l) {
    Json m = Json::object();
    for (std::size_t u = 0; u < spec.atom_count(); ++u)
      if (auto v = spec.image(l, u)) m[spec.atom_id(u)] = spec.atom_id(*v);
    maps[spec.label_id(l)] = std::move(m);
  }
  doc["dual_maps"] = std::move(maps);
  return doc.dump(2) + "\n";
}

GraphSpec parse_graph(std::string_view text) {
  const auto doc = parse_strict(text);
  if (!doc.is_object()) throw SchemaError("/", "expected an object");
  only_keys(doc, {"vertices", "edges"}, "/");
  auto vertices = id_list(require(doc, "vertices", "/"), "/vertices", true);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  const auto& edges = require(doc, "edges", "/");
  if (!edges.is_array()) throw SchemaError("/edges", "expected an array of edges");
  std::vector<GraphSpec::Edge> out;
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "/edges/" + std::to_string(i);
    const auto& e = edges[i];
    if (!e.is_object()) throw SchemaError(where, "expected an object");
    only_keys(e, {"name", "source", "range"}, where);
    auto field = [&](const char* key) {
      const auto& v = require(e, key, where);
      if (!v.is_string() || v.get<std::string>().empty())
        throw SchemaError(where + "/" + key, "expected a nonempty string");
      return v.get<std::string>();
    };
    auto name = field("name");
    if (!names.insert(name).second) throw SchemaError(where + "/name", "duplicate edge name '" + name + "'");
    auto endpoint = [&](const char* key) {
      auto id = field(key);
      auto it = index.find(id);
      if (it == index.end()) throw UndeclaredIdError(where + "/" + key, "undeclared vertex '" + id + "'");
      return it->second;
    };
    const auto s = endpoint("source");
    const auto r = endpoint("range");
    out.push_back({std::move(name), s, r});
  }
  return GraphSpec(std::move(vertices), std::move(out));
}

std::string serialize_graph(const GraphSpec& graph) {
  Json doc;
  doc["vertices"] = graph.vertices();
  Json edges = Json::array();
  for (const auto& e : graph.edges())
    edges.push_back({{"name", e.name}, {"source", graph.vertex(e.source)}, {"range", graph.vertex(e.range)}});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string input_digest(const BdsSpec& spec) { return hex64(fnv1a(serialize_bds(spec))); }
std::string input_digest(const GraphSpec& graph) { return hex64(fnv1a(serialize_graph(graph))); }
std::string input_digest(std::string_view text) { return hex64(fnv1a(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path, "cannot write file");
  out << contents;
}

}  // namespace bdsk
