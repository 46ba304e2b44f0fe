#include "bdsk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bdsk {

namespace {

const char* const kAtomNames[] = {"x", "y", "z", "w", "p", "q", "r", "s"};
const char* const kLabelNames[] = {"a", "b", "c", "d"};

std::vector<std::string> atom_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < std::size(kAtomNames) ? kAtomNames[i] : "u" + std::to_string(i));
  return out;
}

std::vector<std::string> label_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < std::size(kLabelNames) ? kLabelNames[i] : "l" + std::to_string(i));
  return out;
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Rng item_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

BdsSpec random_spec(Rng& rng, std::size_t max_atoms, std::size_t max_labels) {
  const auto n = uniform(rng, 1, max_atoms);
  const auto k = uniform(rng, 1, max_labels);
  std::vector<BdsSpec::PartialMap> maps(k, BdsSpec::PartialMap(n));
  for (auto& m : maps)
    for (auto& entry : m)
      if (uniform(rng, 0, 2) != 0) entry = uniform(rng, 0, n - 1);
  return BdsSpec(atom_names(n), label_names(k), std::move(maps));
}

void for_each_spec(std::size_t atoms, std::size_t labels, const std::function<void(const BdsSpec&)>& visit) {
  const auto cells = atoms * labels;
  std::vector<std::size_t> digits(cells, 0);  // 0 = undefined, d = atom d-1
  const auto ids = atom_names(atoms);
  const auto lids = label_names(labels);
  while (true) {
    std::vector<BdsSpec::PartialMap> maps(labels, BdsSpec::PartialMap(atoms));
    for (std::size_t c = 0; c < cells; ++c)
      if (digits[c]) maps[c / atoms][c % atoms] = digits[c] - 1;
    visit(BdsSpec(ids, lids, std::move(maps)));
    std::size_t c = 0;
    while (c < cells && ++digits[c] > atoms) digits[c++] = 0;
    if (c == cells) break;
  }
}

GraphSpec random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const auto n = uniform(rng, 1, max_vertices);
  const auto m = uniform(rng, 0, max_edges);
  std::vector<GraphSpec::Edge> edges;
  for (std::size_t e = 0; e < m; ++e)
    edges.push_back({"e" + std::to_string(e), uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
  return GraphSpec(vertex_names(n), std::move(edges));
}

GraphSpec random_exit_free_graph(Rng& rng, std::size_t max_vertices) {
  const auto n = uniform(rng, 1, max_vertices);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const auto cyclic = uniform(rng, 0, n);
  std::vector<GraphSpec::Edge> edges;
  auto add = [&](std::size_t s, std::size_t r) { edges.push_back({"e" + std::to_string(edges.size()), s, r}); };
  // The last `cyclic` vertices of `order` form disjoint simple cycles.
  std::size_t i = n - cyclic;
  while (i < n) {
    const auto len = uniform(rng, 1, n - i);
    for (std::size_t j = 0; j < len; ++j) add(order[i + j], order[i + (j + 1) % len]);
    i += len;
  }
  // Acyclic vertices only point forward in `order`.
  for (std::size_t j = 0; j + cyclic < n; ++j) {
    if (j + 1 == n) break;
    const auto out = uniform(rng, 0, 3);
    for (std::size_t k = 0; k < out; ++k) add(order[j], order[uniform(rng, j + 1, n - 1)]);
  }
  return GraphSpec(vertex_names(n), std::move(edges));
}

void for_each_exit_free_graph(std::size_t vertices, const std::function<void(const GraphSpec&)>& visit) {
  const auto n = vertices;
  const auto cells = n * n;
  const auto names = vertex_names(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1U) adj[c / n] |= 1U << (c % n);
    // reach[v] = vertices reachable from v by one or more edges.
    auto reach = adj;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t v = 0; v < n; ++v)
        if ((reach[v] >> k) & 1U) reach[v] |= reach[k];
    bool exit_free = true;
    for (std::size_t v = 0; v < n && exit_free; ++v)
      if (((reach[v] >> v) & 1U) && __builtin_popcount(adj[v]) > 1) exit_free = false;
    if (!exit_free) continue;
    std::vector<GraphSpec::Edge> edges;
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1U) edges.push_back({"e" + std::to_string(edges.size()), c / n, c % n});
    visit(GraphSpec(names, std::move(edges)));
  }
}

}  // namespace bdsk
