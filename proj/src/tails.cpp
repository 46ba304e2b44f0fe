#include "bdsk/tails.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "bdsk/dynamics.hpp"
#include "bdsk/errors.hpp"

namespace bdsk {

namespace {

void check_enumerable(const BdsSpec& spec) {
  if (spec.atom_count() > kEnumerationAtomLimit)
    throw SizeLimitError("exhaustive enumeration is limited to " + std::to_string(kEnumerationAtomLimit) +
                         " atoms (system has " + std::to_string(spec.atom_count()) + ")");
}

// Bitmask form of the two ideal predicates, used by the subset scans.
// pred[v] = atoms u with dual(l)(u) = v for some label l.
class MaskKernel {
 public:
  explicit MaskKernel(const BdsSpec& spec) : n_(spec.atom_count()), pred_(spec.atom_count(), 0) {
    for (std::size_t l = 0; l < spec.label_count(); ++l)
      for (std::size_t u = 0; u < n_; ++u)
        if (auto v = spec.image(l, u)) pred_[*v] |= std::uint32_t{1} << u;
  }

  bool hereditary(std::uint32_t h) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (((h >> v) & 1U) && (pred_[v] & ~h) != 0) return false;
    return true;
  }

  bool saturated(std::uint32_t h) const {
    for (std::size_t u = 0; u < n_; ++u)
      if (!((h >> u) & 1U) && pred_[u] != 0 && (pred_[u] & ~h) == 0) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> pred_;
};

bool t5_holds(const DualGraph& graph, const BooleanSet& w) {
  const auto members = w.members();
  std::vector<BooleanSet> reach;
  reach.reserve(members.size());
  for (auto c : members) reach.push_back(graph.reach(c));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      bool found = false;
      for (std::size_t c = 0; c < members.size() && !found; ++c)
        found = reach[c].contains(members[i]) && reach[c].contains(members[j]);
      if (!found) return false;
    }
  }
  return true;
}

std::optional<CyclicWitness> find_cyclic_witness(const BdsSpec& spec, const DualGraph& graph,
                                                 const BooleanSet& w) {
  for (auto u : w.members()) {
    if (graph.reach(u) != w) continue;
    auto verdict = return_language_single_power(spec, graph, u);
    if (verdict.single_power) return CyclicWitness{*verdict.single_power, u, BooleanSet(spec.atom_count(), {u})};
  }
  return std::nullopt;
}

}  // namespace

bool is_hereditary(const BdsSpec& spec, const BooleanSet& h) {
  spec.check_set(h);
  for (std::size_t l = 0; l < spec.label_count(); ++l)
    if (!apply_label(spec, l, h).subset_of(h)) return false;
  return true;
}

bool is_saturated(const BdsSpec& spec, const BooleanSet& h) {
  spec.check_set(h);
  for (std::size_t u = 0; u < spec.atom_count(); ++u) {
    if (h.contains(u)) continue;
    const auto delta = atom_delta(spec, u);
    if (delta.empty()) continue;
    const BooleanSet single(spec.atom_count(), {u});
    const bool forced = std::all_of(delta.begin(), delta.end(),
                                    [&](std::size_t l) { return apply_label(spec, l, single).subset_of(h); });
    if (forced) return false;
  }
  return true;
}

HsIdeal saturation_closure(const BdsSpec& spec, const BooleanSet& s) {
  spec.check_set(s);
  BooleanSet h = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < spec.label_count(); ++l) {
      const auto img = apply_label(spec, l, h);
      if (!img.subset_of(h)) {
        h |= img;
        changed = true;
      }
    }
    for (std::size_t u = 0; u < spec.atom_count(); ++u) {
      if (h.contains(u)) continue;
      const auto delta = atom_delta(spec, u);
      if (delta.empty()) continue;
      const BooleanSet single(spec.atom_count(), {u});
      if (std::all_of(delta.begin(), delta.end(),
                      [&](std::size_t l) { return apply_label(spec, l, single).subset_of(h); })) {
        h.insert(u);
        changed = true;
      }
    }
  }
  const bool proper = h != spec.unit();
  return {std::move(h), proper};
}

std::vector<HsIdeal> enumerate_hs_ideals(const BdsSpec& spec) {
  check_enumerable(spec);
  const MaskKernel kernel(spec);
  const auto n = spec.atom_count();
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::vector<HsIdeal> out;
  for (std::uint64_t m = 0; m <= all; ++m) {
    const auto h = static_cast<std::uint32_t>(m);
    if (!kernel.hereditary(h) || !kernel.saturated(h)) continue;
    out.push_back({BooleanSet::from_mask(n, h), h != all});
  }
  std::sort(out.begin(), out.end(), [](const HsIdeal& a, const HsIdeal& b) { return a.atom_set < b.atom_set; });
  return out;
}

BdsSpec quotient_bds(const BdsSpec& spec, const BooleanSet& h) {
  spec.check_set(h);
  if (h == spec.unit()) throw ValidationError("quotient by the improper ideal");
  if (!is_hereditary(spec, h)) throw ValidationError("quotient by a non-hereditary ideal");
  const auto keep = (spec.unit() - h).members();
  std::vector<std::size_t> new_index(spec.atom_count(), 0);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    new_index[keep[i]] = i;
    ids.push_back(spec.atom_id(keep[i]));
  }
  std::vector<BdsSpec::PartialMap> maps(spec.label_count(), BdsSpec::PartialMap(keep.size()));
  for (std::size_t l = 0; l < spec.label_count(); ++l) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (auto v = spec.image(l, keep[i])) {
        if (h.contains(*v)) throw Error("quotient_bds: dual map enters H (internal)");
        maps[l][i] = new_index[*v];
      }
    }
  }
  return BdsSpec(std::move(ids), spec.label_ids(), std::move(maps));
}

BooleanSet lift_from_quotient(const BdsSpec& parent, const BdsSpec& quotient, const BooleanSet& s) {
  quotient.check_set(s);
  BooleanSet out = parent.empty_set();
  for (auto i : s.members()) {
    auto p = parent.atom_index(quotient.atom_id(i));
    if (!p) throw ValidationError("quotient atom '" + quotient.atom_id(i) + "' unknown to parent");
    out.insert(*p);
  }
  return out;
}

BooleanSet project_to_quotient(const BdsSpec& parent, const BdsSpec& quotient, const BooleanSet& s) {
  parent.check_set(s);
  BooleanSet out = quotient.empty_set();
  for (auto i : s.members())
    if (auto q = quotient.atom_index(parent.atom_id(i))) out.insert(*q);
  return out;
}

bool is_maximal_tail(const BdsSpec& spec, const DualGraph& graph, const BooleanSet& w) {
  spec.check_set(w);
  if (w.empty()) return false;
  const auto h = spec.unit() - w;
  if (!is_hereditary(spec, h) || !is_saturated(spec, h)) return false;
  return t5_holds(graph, w);
}

bool is_maximal_tail(const BdsSpec& spec, const BooleanSet& w) { return is_maximal_tail(spec, DualGraph(spec), w); }

std::vector<MaximalTail> enumerate_maximal_tails(const BdsSpec& spec) {
  check_enumerable(spec);
  const DualGraph graph(spec);
  std::vector<MaximalTail> out;
  for (const auto& ideal : enumerate_hs_ideals(spec)) {
    if (!ideal.proper) continue;
    auto w = spec.unit() - ideal.atom_set;
    if (!t5_holds(graph, w)) continue;
    auto witness = find_cyclic_witness(spec, graph, w);
    out.push_back({std::move(w), std::move(witness)});
  }
  std::sort(out.begin(), out.end(),
            [](const MaximalTail& a, const MaximalTail& b) { return a.support < b.support; });
  return out;
}

MaximalTail tail_from_ultrafilter_cycle(const BdsSpec& spec, const Word& alpha, std::size_t u) {
  if (alpha.empty() || !is_ultrafilter_cycle(spec, alpha, u))
    throw PreconditionError("tail_from_ultrafilter_cycle: not an ultrafilter cycle");
  const DualGraph graph(spec);
  const auto verdict = return_language_single_power(spec, graph, u);
  if (!verdict.single_power || !alpha.is_power_of(*verdict.single_power))
    throw PreconditionError("tail_from_ultrafilter_cycle: return language at the atom is not a single power");
  // The tail depends only on the ultrafilter; the witness records the
  // shortest return word so that it satisfies the cyclic-tail definition.
  return {graph.reach(u), CyclicWitness{*verdict.single_power, u, BooleanSet(spec.atom_count(), {u})}};
}

std::optional<CyclicWitness> is_cyclic_tail(const BdsSpec& spec, const BooleanSet& w) {
  const DualGraph graph(spec);
  if (!is_maximal_tail(spec, graph, w)) throw PreconditionError("is_cyclic_tail: not a maximal tail");
  return find_cyclic_witness(spec, graph, w);
}

}  // namespace bdsk
