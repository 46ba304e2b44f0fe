#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "bdsk/graph.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`, so
/// sharded runs see the same items regardless of the shard count.
Rng item_rng(std::uint64_t seed, std::uint64_t index);

/// 1..max_atoms atoms, 1..max_labels labels, each dual-map entry undefined
/// with probability 1/3 and otherwise uniform.
BdsSpec random_spec(Rng& rng, std::size_t max_atoms, std::size_t max_labels);

/// Every system with exactly `atoms` atoms and `labels` labels, in
/// lexicographic order of the partial maps.
void for_each_spec(std::size_t atoms, std::size_t labels, const std::function<void(const BdsSpec&)>& visit);

/// Random multigraph with 1..max_vertices vertices and 0..max_edges edges.
GraphSpec random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

/// Random graph in which no cycle has an exit: vertices are split into
/// disjoint simple cycles and an acyclic part feeding into them.
GraphSpec random_exit_free_graph(Rng& rng, std::size_t max_vertices);

/// Every simple digraph (loops allowed, no parallel edges) on exactly
/// `vertices` vertices whose cycles have no exits.
void for_each_exit_free_graph(std::size_t vertices, const std::function<void(const GraphSpec&)>& visit);

}  // namespace bdsk
