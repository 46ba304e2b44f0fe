#include "bdsk/condition_k.hpp"

#include <algorithm>

#include "bdsk/dynamics.hpp"
#include "bdsk/errors.hpp"
#include "bdsk/stone_dual.hpp"
#include "bdsk/tails.hpp"

namespace bdsk {

namespace {

// Builds the corner data for the cyclic tail generated by (word, u^). The
// cycle only loses its exits in the quotient by the complement of the tail,
// so normalization and the images are computed there and lifted back.
CornerObstruction build_obstruction(const BdsSpec& spec, const DualGraph& graph, const Word& word, std::size_t u) {
  CornerObstruction ob;
  ob.tail_support = graph.reach(u);
  ob.atom = u;
  const auto quotient = quotient_bds(spec, spec.unit() - ob.tail_support);
  const auto base = project_to_quotient(spec, quotient, BooleanSet(spec.atom_count(), {u}));
  if (cycle_check(quotient, word, base).status != CycleStatus::cycle_no_exit)
    throw Error("cyclic witness is not a no-exit cycle in its tail quotient (internal)");
  const auto normalized = normalize_no_exit_cycle(quotient, word, base);
  ob.word = normalized.word;
  ob.n = normalized.word.size();
  ob.corner = spec.empty_set();
  for (std::size_t k = 1; k <= ob.n; ++k) {
    auto piece = lift_from_quotient(spec, quotient, apply_theta(quotient, normalized.word.prefix(k), normalized.base));
    ob.corner |= piece;
    ob.pieces.push_back(std::move(piece));
  }
  return ob;
}

}  // namespace

KVerdict decide_k_direct(const BdsSpec& spec) {
  const DualGraph graph(spec);
  for (std::size_t u = 0; u < spec.atom_count(); ++u) {
    const auto verdict = return_language_single_power(spec, graph, u);
    if (!verdict.single_power) continue;
    const auto ob = build_obstruction(spec, graph, *verdict.single_power, u);
    return {false,
            KWitness{*verdict.single_power, u, BooleanSet(spec.atom_count(), {u}), ob.tail_support, ob.n},
            KMethod::direct};
  }
  return {true, std::nullopt, KMethod::direct};
}

KVerdict decide_k_via_quotients(const BdsSpec& spec) {
  const DualGraph graph(spec);
  for (const auto& ideal : enumerate_hs_ideals(spec)) {
    if (!ideal.proper) continue;
    const auto quotient = quotient_bds(spec, ideal.atom_set);
    const auto l = check_condition_L(quotient);
    if (l.holds) continue;
    const auto normalized = normalize_no_exit_cycle(quotient, l.witness->word, l.witness->base);
    const auto lifted = lift_from_quotient(spec, quotient, normalized.base);
    const auto u = lifted.first();
    return {false,
            KWitness{normalized.word, u, BooleanSet(spec.atom_count(), {u}), graph.reach(u),
                     normalized.word.size()},
            KMethod::via_quotients};
  }
  return {true, std::nullopt, KMethod::via_quotients};
}

bool decide_strong_k(const BdsSpec& spec) {
  const DualGraph graph(spec);
  for (std::size_t u = 0; u < spec.atom_count(); ++u) {
    // When the return language at u is w+, the ultrafilter cycle (w, u^)
    // has no cycle word outside the powers of w.
    const auto verdict = return_language_single_power(spec, graph, u);
    if (verdict.has_return && verdict.single_power) return false;
  }
  return true;
}

std::vector<CornerObstruction> corner_obstructions(const BdsSpec& spec) {
  const DualGraph graph(spec);
  std::vector<CornerObstruction> out;
  for (std::size_t u = 0; u < spec.atom_count(); ++u) {
    const auto verdict = return_language_single_power(spec, graph, u);
    if (!verdict.single_power) continue;
    const auto support = graph.reach(u);
    if (std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.tail_support == support; })) continue;
    out.push_back(build_obstruction(spec, graph, *verdict.single_power, u));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tail_support < b.tail_support; });
  return out;
}

std::vector<std::string> k_annotations(const KVerdict& verdict) {
  static const std::string kMark = " (implied, not computed)";
  if (verdict.satisfied) {
    return {
        "every ideal of C*(B,L,theta) is gauge-invariant" + kMark,
        "C*(B,L,theta) has the ideal property and the weak ideal property" + kMark,
        "C*(B,L,theta) has topological dimension zero" + kMark,
        "no quotient of C*(B,L,theta) has a corner isomorphic to M_n(C(T))" + kMark,
        "maximal tails are homeomorphic to Prim C*(B,L,theta)" + kMark,
    };
  }
  const auto n = verdict.witness ? verdict.witness->corner_n : 0;
  return {
      "corner M_" + std::to_string(n) + "(C(T)) in a quotient" + kMark,
      "C*(B,L,theta) has an ideal that is not gauge-invariant" + kMark,
      "C*(B,L,theta) lacks the ideal property and has nonzero topological dimension" + kMark,
      "C*(B,L,theta) is neither of real rank zero nor purely infinite" + kMark,
  };
}

}  // namespace bdsk
