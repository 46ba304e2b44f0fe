#include "bdsk/stone_dual.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "bdsk/errors.hpp"

namespace bdsk {

std::optional<std::size_t> dual_step(const BdsSpec& spec, const Word& alpha, std::size_t u) {
  spec.check_word(alpha);
  if (u >= spec.atom_count()) throw ValidationError("atom index out of range");
  std::optional<std::size_t> cur = u;
  for (auto it = alpha.letters.rbegin(); it != alpha.letters.rend() && cur; ++it) cur = spec.image(*it, *cur);
  return cur;
}

bool is_ultrafilter_cycle(const BdsSpec& spec, const Word& alpha, std::size_t u) {
  if (alpha.empty()) throw PreconditionError("ultrafilter cycles need a nonempty word");
  return dual_step(spec, alpha, u) == u;
}

DualGraph::DualGraph(const BdsSpec& spec) : out_(spec.atom_count()), in_(spec.atom_count()) {
  const auto n = spec.atom_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t l = 0; l < spec.label_count(); ++l) {
      if (auto v = spec.image(l, u)) {
        out_[u].push_back({l, *v});
        in_[*v].push_back(u);
      }
    }
  }

  // Kosaraju: finishing order on the graph, then components on the reverse.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out_[v].size()) {
        const auto t = out_[v][i++].target;
        if (!seen[t]) {
          seen[t] = true;
          stack.emplace_back(t, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  scc_.assign(n, kUnset);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (scc_[*it] != kUnset) continue;
    std::vector<std::size_t> stack{*it};
    scc_[*it] = component_count_;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto p : in_[v]) {
        if (scc_[p] == kUnset) {
          scc_[p] = component_count_;
          stack.push_back(p);
        }
      }
    }
    ++component_count_;
  }
}

BooleanSet DualGraph::reach(std::size_t u) const {
  BooleanSet r(size(), {u});
  std::vector<std::size_t> stack{u};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& e : out_[v]) {
      if (!r.contains(e.target)) {
        r.insert(e.target);
        stack.push_back(e.target);
      }
    }
  }
  return r;
}

BooleanSet DualGraph::coreach(std::size_t u) const {
  BooleanSet r(size(), {u});
  std::vector<std::size_t> stack{u};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto p : in_[v]) {
      if (!r.contains(p)) {
        r.insert(p);
        stack.push_back(p);
      }
    }
  }
  return r;
}

ReturnVerdict return_language_single_power(const BdsSpec& spec, const DualGraph& graph, std::size_t u) {
  if (u >= spec.atom_count()) throw ValidationError("atom index out of range");
  ReturnVerdict verdict{spec.atom(u), false, std::nullopt, std::nullopt};
  const auto comp = graph.component(u);
  auto inside = [&](std::size_t v) { return graph.component(v) == comp; };

  // Shortest closed walk at u by BFS inside the component. Letters are
  // collected in the order dual_step consumes them.
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> parent(graph.size(), {kNone, kNone});
  std::vector<bool> visited(graph.size(), false);
  std::deque<std::size_t> queue{u};
  visited[u] = true;
  std::optional<std::pair<std::size_t, std::size_t>> closing;  // (last node, label)
  while (!queue.empty() && !closing) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& e : graph.out_edges(v)) {
      if (!inside(e.target)) continue;
      if (e.target == u) {
        closing = std::pair{v, e.label};
        break;
      }
      if (!visited[e.target]) {
        visited[e.target] = true;
        parent[e.target] = {v, e.label};
        queue.push_back(e.target);
      }
    }
  }
  if (!closing) return verdict;
  verdict.has_return = true;

  std::vector<std::size_t> consumed{closing->second};
  for (auto v = closing->first; v != u; v = parent[v].first) consumed.push_back(parent[v].second);
  std::reverse(consumed.begin(), consumed.end());
  const auto k = consumed.size();

  // Product of the component with the k-state cycle reading `consumed`.
  std::vector<std::vector<bool>> seen(graph.size(), std::vector<bool>(k, false));
  std::vector<std::pair<std::size_t, std::size_t>> stack{{u, 0}};
  seen[u][0] = true;
  while (!stack.empty()) {
    const auto [v, phase] = stack.back();
    stack.pop_back();
    for (const auto& e : graph.out_edges(v)) {
      if (!inside(e.target)) continue;
      if (e.label != consumed[phase]) return verdict;
      const auto next = (phase + 1) % k;
      if (e.target == u && next != 0) return verdict;
      if (!seen[e.target][next]) {
        seen[e.target][next] = true;
        stack.emplace_back(e.target, next);
      }
    }
  }

  // Reading order of a word is the reverse of consumption order.
  Word w(std::vector<std::size_t>(consumed.rbegin(), consumed.rend()));
  verdict.primitive_root = w.primitive_root();
  verdict.single_power = std::move(w);
  return verdict;
}

ReturnVerdict return_language_single_power(const BdsSpec& spec, std::size_t u) {
  return return_language_single_power(spec, DualGraph(spec), u);
}

}  // namespace bdsk
