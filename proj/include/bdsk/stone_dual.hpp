#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

/// theta^_alpha(u^) as an atom: dual(alpha_1)(... dual(alpha_n)(u)), absent
/// when u is outside R_alpha. The empty word returns u.
std::optional<std::size_t> dual_step(const BdsSpec& spec, const Word& alpha, std::size_t u);

/// (alpha, u^) is an ultrafilter cycle iff theta^_alpha fixes u^.
bool is_ultrafilter_cycle(const BdsSpec& spec, const Word& alpha, std::size_t u);

/// Labelled graph on atoms with an edge u -l-> v whenever dual(l)(u) = v,
/// plus its strongly connected components. Immutable after construction.
class DualGraph {
 public:
  struct Edge {
    std::size_t label;
    std::size_t target;
  };

  explicit DualGraph(const BdsSpec& spec);

  std::size_t size() const noexcept { return out_.size(); }
  const std::vector<Edge>& out_edges(std::size_t u) const { return out_.at(u); }
  std::size_t component(std::size_t u) const { return scc_.at(u); }
  std::size_t component_count() const noexcept { return component_count_; }
  /// Atoms reachable from u by zero or more edges.
  BooleanSet reach(std::size_t u) const;
  /// Atoms from which u is reachable.
  BooleanSet coreach(std::size_t u) const;

 private:
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> scc_;
  std::size_t component_count_ = 0;
};

struct ReturnVerdict {
  Atom atom;
  bool has_return = false;
  /// Set when every nonempty word beta with dual_step(beta, u) = u is a
  /// power of this word. It is the shortest such return word, written in
  /// reading order, so (single_power, u^) is itself an ultrafilter cycle.
  std::optional<Word> single_power;
  /// Primitive root of single_power.
  std::optional<Word> primitive_root;
};

/// Decides whether the closed-walk language at u lies in w+ for one word w,
/// by a product of the component of u with the cyclic automaton of the
/// shortest return word.
ReturnVerdict return_language_single_power(const BdsSpec& spec, const DualGraph& graph, std::size_t u);
ReturnVerdict return_language_single_power(const BdsSpec& spec, std::size_t u);

}  // namespace bdsk
