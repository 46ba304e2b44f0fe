#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bdsk/system.hpp"

namespace bdsk {

/// A finite directed graph E = (E0, E1, r, s).
class GraphSpec {
 public:
  struct Edge {
    std::string name;
    std::size_t source = 0;
    std::size_t range = 0;
  };

  /// Throws ValidationError on duplicate vertex or edge names and on
  /// endpoints outside the vertex list.
  GraphSpec(std::vector<std::string> vertices, std::vector<Edge> edges);
  /// Same, with endpoints given by vertex id.
  static GraphSpec from_ids(std::vector<std::string> vertices,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  /// Edge indices with s(e) = v, in declaration order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  bool is_sink(std::size_t v) const { return out_.at(v).empty(); }

  /// Vertices lying on some cycle.
  std::vector<bool> on_cycle() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Atoms are vertices, labels are edges, dual(e)(r(e)) = s(e).
BdsSpec vertex_construction(const GraphSpec& graph);

/// Graph Condition (K): every vertex on a cycle has at least two distinct
/// first-return paths.
bool graph_condition_k(const GraphSpec& graph);

struct BoundaryPath {
  enum class Kind { finite_to_singular, eventually_cyclic };

  Kind kind = Kind::finite_to_singular;
  /// Finite paths: all edges; the path is the vertex itself when empty.
  /// Infinite paths: the edges before the first cycle vertex.
  std::vector<std::size_t> stem;
  /// Infinite paths only: the cycle edges starting at the end of the stem.
  std::vector<std::size_t> cycle;
  std::size_t start_vertex = 0;

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
};

/// Printable id: "v" for the empty path at v, "e.f" for finite paths,
/// "g.(e.f)^inf" for an infinite path with stem g.
std::string boundary_path_id(const GraphSpec& graph, const BoundaryPath& path);

/// All of dE. Throws InfiniteBoundaryError naming a cycle and one of its
/// exit edges when dE is infinite.
std::vector<BoundaryPath> boundary_paths(const GraphSpec& graph);

/// Atoms are boundary paths, labels are edges, dual(e)(x) = ex.
BdsSpec boundary_construction(const GraphSpec& graph);

}  // namespace bdsk
