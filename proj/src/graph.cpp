#include "bdsk/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "bdsk/errors.hpp"

namespace bdsk {

namespace {

constexpr std::size_t kBoundaryPathLimit = 1u << 16;

// Shortest edge path from `from` to `to` (zero edges when equal).
std::optional<std::vector<std::size_t>> shortest_path(const GraphSpec& g, std::size_t from, std::size_t to) {
  std::vector<std::optional<std::size_t>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto e : g.out_edges(v)) {
      const auto r = g.edge(e).range;
      if (seen[r]) continue;
      seen[r] = true;
      via[r] = e;
      queue.push_back(r);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> path;
  for (auto v = to; v != from;) {
    path.push_back(*via[v]);
    v = g.edge(*via[v]).source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::string join_edges(const GraphSpec& g, const std::vector<std::size_t>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += '.';
    out += g.edge(edges[i]).name;
  }
  return out;
}

// Number of first-return paths at v, saturated at 2.
std::size_t first_returns(const GraphSpec& g, std::size_t v) {
  const auto n = g.vertex_count();
  // Vertices other than v reachable from v without passing through v.
  std::vector<bool> from_v(n, false);
  std::deque<std::size_t> queue;
  for (auto e : g.out_edges(v)) {
    const auto r = g.edge(e).range;
    if (r != v && !from_v[r]) {
      from_v[r] = true;
      queue.push_back(r);
    }
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto e : g.out_edges(x)) {
      const auto r = g.edge(e).range;
      if (r != v && !from_v[r]) {
        from_v[r] = true;
        queue.push_back(r);
      }
    }
  }
  // Vertices other than v that reach v without passing through v.
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) in[g.edge(e).range].push_back(e);
  std::vector<bool> to_v(n, false);
  for (auto e : in[v]) {
    const auto s = g.edge(e).source;
    if (s != v && !to_v[s]) {
      to_v[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto e : in[x]) {
      const auto s = g.edge(e).source;
      if (s != v && !to_v[s]) {
        to_v[s] = true;
        queue.push_back(s);
      }
    }
  }
  std::vector<bool> live(n);
  for (std::size_t x = 0; x < n; ++x) live[x] = from_v[x] && to_v[x];

  // Count paths x ~> v through live vertices; a cycle among them pumps.
  enum class Mark { white, grey, black };
  std::vector<Mark> mark(n, Mark::white);
  std::vector<std::size_t> count(n, 0);
  bool pumping = false;
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    mark[x] = Mark::grey;
    std::size_t c = 0;
    for (auto e : g.out_edges(x)) {
      const auto r = g.edge(e).range;
      if (r == v) {
        ++c;
      } else if (live[r]) {
        if (mark[r] == Mark::grey) pumping = true;
        if (mark[r] == Mark::white) visit(r);
        c += count[r];
      }
      c = std::min<std::size_t>(c, 2);
    }
    count[x] = c;
    mark[x] = Mark::black;
  };
  std::size_t total = 0;
  for (auto e : g.out_edges(v)) {
    const auto r = g.edge(e).range;
    if (r == v) {
      ++total;
    } else if (live[r]) {
      if (mark[r] == Mark::white) visit(r);
      total += count[r];
    }
  }
  if (pumping) return 2;
  return std::min<std::size_t>(total, 2);
}

}  // namespace

GraphSpec::GraphSpec(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), out_(vertices_.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw ValidationError("empty vertex id");
    if (!seen.insert(v).second) throw ValidationError("duplicate vertex id '" + v + "'");
  }
  seen.clear();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.name.empty()) throw ValidationError("empty edge name");
    if (!seen.insert(edge.name).second) throw ValidationError("duplicate edge name '" + edge.name + "'");
    if (edge.source >= vertices_.size() || edge.range >= vertices_.size())
      throw ValidationError("edge '" + edge.name + "' has an undeclared endpoint");
    out_[edge.source].push_back(e);
  }
}

GraphSpec GraphSpec::from_ids(std::vector<std::string> vertices,
                              const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  auto lookup = [&](const std::string& id, const std::string& edge) {
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError("edge '" + edge + "' uses undeclared vertex '" + id + "'");
    return it->second;
  };
  std::vector<Edge> out;
  for (const auto& [name, s, r] : edges) out.push_back({name, lookup(s, name), lookup(r, name)});
  return GraphSpec(std::move(vertices), std::move(out));
}

std::vector<bool> GraphSpec::on_cycle() const {
  std::vector<bool> out(vertex_count(), false);
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (auto e : out_edges(v))
      if (shortest_path(*this, edge(e).range, v)) out[v] = true;
  return out;
}

BdsSpec vertex_construction(const GraphSpec& graph) {
  std::vector<std::string> labels;
  std::vector<BdsSpec::PartialMap> maps;
  for (const auto& e : graph.edges()) {
    labels.push_back(e.name);
    BdsSpec::PartialMap m(graph.vertex_count());
    m[e.range] = e.source;
    maps.push_back(std::move(m));
  }
  return BdsSpec(graph.vertices(), std::move(labels), std::move(maps));
}

bool graph_condition_k(const GraphSpec& graph) {
  const auto cyc = graph.on_cycle();
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (cyc[v] && first_returns(graph, v) < 2) return false;
  return true;
}

std::string boundary_path_id(const GraphSpec& graph, const BoundaryPath& path) {
  if (path.kind == BoundaryPath::Kind::finite_to_singular)
    return path.stem.empty() ? graph.vertex(path.start_vertex) : join_edges(graph, path.stem);
  std::string cyc = join_edges(graph, path.cycle);
  if (path.cycle.size() > 1) cyc = "(" + cyc + ")";
  cyc += "^inf";
  return path.stem.empty() ? cyc : join_edges(graph, path.stem) + "." + cyc;
}

std::vector<BoundaryPath> boundary_paths(const GraphSpec& graph) {
  const auto cyc = graph.on_cycle();
  // dE is finite iff no cycle has an exit, i.e. every cycle vertex has a
  // single outgoing edge.
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (!cyc[v] || graph.out_edges(v).size() < 2) continue;
    for (auto e : graph.out_edges(v)) {
      auto back = shortest_path(graph, graph.edge(e).range, v);
      if (!back) continue;
      std::vector<std::size_t> cycle{e};
      cycle.insert(cycle.end(), back->begin(), back->end());
      const auto exit = *std::find_if(graph.out_edges(v).begin(), graph.out_edges(v).end(),
                                      [&](std::size_t f) { return f != e; });
      throw InfiniteBoundaryError("boundary path space is infinite: cycle " + join_edges(graph, cycle) +
                                  " has exit edge " + graph.edge(exit).name);
    }
  }

  // Off-cycle vertices form a DAG, so the recursion below terminates.
  std::vector<std::optional<std::vector<BoundaryPath>>> memo(graph.vertex_count());
  std::vector<std::size_t> expected(graph.vertex_count(), 0);
  std::function<const std::vector<BoundaryPath>&(std::size_t)> from = [&](std::size_t v)
      -> const std::vector<BoundaryPath>& {
    if (memo[v]) return *memo[v];
    std::vector<BoundaryPath> paths;
    if (cyc[v]) {
      BoundaryPath p{BoundaryPath::Kind::eventually_cyclic, {}, {}, v};
      auto x = v;
      do {
        const auto e = graph.out_edges(x).front();
        p.cycle.push_back(e);
        x = graph.edge(e).range;
      } while (x != v);
      paths.push_back(std::move(p));
      expected[v] = 1;
    } else if (graph.is_sink(v)) {
      paths.push_back({BoundaryPath::Kind::finite_to_singular, {}, {}, v});
      expected[v] = 1;
    } else {
      for (auto e : graph.out_edges(v)) {
        const auto& tail = from(graph.edge(e).range);
        expected[v] += expected[graph.edge(e).range];
        for (const auto& t : tail) {
          if (paths.size() >= kBoundaryPathLimit)
            throw SizeLimitError("boundary path space exceeds " + std::to_string(kBoundaryPathLimit) + " paths");
          BoundaryPath p = t;
          p.start_vertex = v;
          p.stem.insert(p.stem.begin(), e);
          paths.push_back(std::move(p));
        }
      }
    }
    memo[v] = std::move(paths);
    return *memo[v];
  };

  std::vector<BoundaryPath> out;
  std::size_t budget = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const auto& paths = from(v);
    budget += expected[v];
    out.insert(out.end(), paths.begin(), paths.end());
  }
  if (out.size() != budget) throw Error("boundary enumeration disagrees with its path count (internal)");
  // Shortest paths first, then by start vertex and edge sequence.
  std::stable_sort(out.begin(), out.end(), [](const BoundaryPath& a, const BoundaryPath& b) {
    const auto la = a.stem.size();
    const auto lb = b.stem.size();
    return std::tie(a.kind, la, a.start_vertex, a.stem, a.cycle) < std::tie(b.kind, lb, b.start_vertex, b.stem, b.cycle);
  });
  return out;
}

BdsSpec boundary_construction(const GraphSpec& graph) {
  const auto paths = boundary_paths(graph);
  const auto cyc = graph.on_cycle();
  std::vector<std::string> ids;
  std::map<std::tuple<int, std::vector<std::size_t>, std::vector<std::size_t>, std::size_t>, std::size_t> index;
  auto key = [](const BoundaryPath& p) {
    return std::make_tuple(static_cast<int>(p.kind), p.stem, p.cycle, p.stem.empty() ? p.start_vertex : 0);
  };
  std::unordered_set<std::string> seen_ids;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ids.push_back(boundary_path_id(graph, paths[i]));
    if (!seen_ids.insert(ids.back()).second)
      throw ValidationError("boundary path id '" + ids.back() + "' is ambiguous; rename vertices or edges");
    index.emplace(key(paths[i]), i);
  }

  std::vector<std::string> labels;
  std::vector<BdsSpec::PartialMap> maps;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    labels.push_back(edge.name);
    BdsSpec::PartialMap m(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& x = paths[i];
      if (x.start_vertex != edge.range) continue;
      BoundaryPath ex = x;
      ex.start_vertex = edge.source;
      if (cyc[edge.source]) {
        // e is the cycle edge into s(x): rotate the cycle.
        ex.cycle.pop_back();
        ex.cycle.insert(ex.cycle.begin(), e);
      } else {
        ex.stem.insert(ex.stem.begin(), e);
      }
      auto it = index.find(key(ex));
      if (it == index.end()) throw Error("boundary path " + boundary_path_id(graph, ex) + " missing (internal)");
      m[i] = it->second;
    }
    maps.push_back(std::move(m));
  }
  return BdsSpec(std::move(ids), std::move(labels), std::move(maps));
}

}  // namespace bdsk
