#include "bdsk/prim_space.hpp"

#include <sstream>

#include "bdsk/condition_k.hpp"
#include "bdsk/errors.hpp"
#include "bdsk/stone_dual.hpp"

namespace bdsk {

TailSpace::TailSpace(std::size_t atom_count, std::vector<MaximalTail> tails)
    : atom_count_(atom_count), tails_(std::move(tails)) {
  for (const auto& t : tails_)
    if (t.support.universe() != atom_count_) throw UniverseMismatch("tail support over the wrong atom universe");
}

TailSet TailSpace::basis(const BooleanSet& a) const {
  if (a.universe() != atom_count_) throw UniverseMismatch("basis set over the wrong atom universe");
  TailSet u = empty_tail_set();
  for (std::size_t i = 0; i < tails_.size(); ++i)
    if (tails_[i].contains(a)) u.insert(i);
  return u;
}

std::optional<BooleanSet> TailSpace::basis_refinement(const BdsSpec& spec, const BooleanSet& a1,
                                                      const BooleanSet& a2, std::size_t t) const {
  const auto& w = tail(t).support;
  const auto hit1 = a1 & w;
  const auto hit2 = a2 & w;
  if (hit1.empty() || hit2.empty()) return std::nullopt;
  const DualGraph graph(spec);
  const auto w1 = hit1.first();
  const auto w2 = hit2.first();
  for (auto c : w.members()) {
    const auto r = graph.reach(c);
    if (r.contains(w1) && r.contains(w2)) return BooleanSet(atom_count_, {c});
  }
  throw Error("basis_refinement: tail violates T5 (internal)");
}

TailSet TailSpace::closure(const TailSet& s) const {
  if (s.universe() != size()) throw UniverseMismatch("tail set over the wrong universe");
  BooleanSet covered(atom_count_);
  for (auto i : s.members()) covered |= tails_[i].support;
  TailSet out = empty_tail_set();
  for (std::size_t i = 0; i < tails_.size(); ++i)
    if (tails_[i].support.subset_of(covered)) out.insert(i);
  return out;
}

std::vector<std::vector<bool>> TailSpace::specialization() const {
  std::vector<std::vector<bool>> order(size(), std::vector<bool>(size(), false));
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t s = 0; s < size(); ++s) order[t][s] = tails_[t].support.subset_of(tails_[s].support);
  return order;
}

TailSpace build_tail_space(const BdsSpec& spec) { return TailSpace(spec.atom_count(), enumerate_maximal_tails(spec)); }

TailSet closure_of(const TailSpace& space, const TailSet& s) { return space.closure(s); }

std::vector<std::vector<bool>> specialization_order(const TailSpace& space) { return space.specialization(); }

std::optional<std::size_t> IdealLattice::index_of(const BooleanSet& h) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].atom_set == h) return i;
  return std::nullopt;
}

BooleanSet lattice_meet(const BooleanSet& h1, const BooleanSet& h2) { return h1 & h2; }

BooleanSet lattice_join(const BdsSpec& spec, const BooleanSet& h1, const BooleanSet& h2) {
  return saturation_closure(spec, h1 | h2).atom_set;
}

IdealLattice ideal_lattice(const BdsSpec& spec) {
  IdealLattice lattice;
  lattice.elements = enumerate_hs_ideals(spec);
  const auto n = lattice.elements.size();
  const DualGraph graph(spec);
  for (const auto& e : lattice.elements)
    lattice.prime.push_back(e.proper && is_maximal_tail(spec, graph, spec.unit() - e.atom_set));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& lo = lattice.elements[i].atom_set;
      const auto& hi = lattice.elements[j].atom_set;
      if (i == j || !lo.subset_of(hi)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k == i || k == j) continue;
        const auto& mid = lattice.elements[k].atom_set;
        cover = !(lo.subset_of(mid) && mid.subset_of(hi));
      }
      if (cover) lattice.covers.emplace_back(i, j);
    }
  }
  lattice.complete = decide_k_direct(spec).satisfied;
  lattice.label = lattice.complete ? "complete ideal lattice of C*(B,L,theta)" : "gauge-invariant ideals only";
  return lattice;
}

PrimReport prim_report(const BdsSpec& spec) {
  PrimReport report;
  report.condition_k = decide_k_direct(spec).satisfied;
  if (!report.condition_k)
    report.warning =
        "Condition (K) fails: maximal tails need not correspond to primitive ideals; tails listed for reference";

  const auto space = build_tail_space(spec);
  const auto lattice = ideal_lattice(spec);
  std::vector<bool> hit(lattice.elements.size(), false);
  report.bijection_ok = true;
  for (std::size_t t = 0; t < space.size(); ++t) {
    const auto& support = space.tail(t).support;
    auto ideal = spec.unit() - support;
    const auto idx = lattice.index_of(ideal);
    if (!idx || !lattice.prime[*idx] || hit[*idx]) {
      report.bijection_ok = false;
      continue;
    }
    hit[*idx] = true;
    report.entries.push_back({t, support, std::move(ideal), *idx});
  }
  for (std::size_t i = 0; i < lattice.elements.size(); ++i)
    if (lattice.prime[i] && !hit[i]) report.bijection_ok = false;

  report.order_ok = true;
  for (std::size_t t = 0; t < space.size(); ++t) {
    for (std::size_t s = 0; s < space.size(); ++s) {
      TailSet single = space.empty_tail_set();
      single.insert(s);
      const bool in_closure = space.closure(single).contains(t);
      const auto h_s = spec.unit() - space.tail(s).support;
      const auto h_t = spec.unit() - space.tail(t).support;
      if (in_closure != h_s.subset_of(h_t)) report.order_ok = false;
    }
  }
  return report;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Edges (a, b) of a partial order given as a relation matrix with
// rel[a][b] meaning a -> b, minus those implied by transitivity.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& rel) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = rel.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel[a][b]) continue;
      bool implied = false;
      for (std::size_t c = 0; c < n && !implied; ++c) implied = c != a && c != b && rel[a][c] && rel[c][b];
      if (!implied) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

std::string tail_space_dot(const BdsSpec& spec, const TailSpace& space) {
  std::ostringstream os;
  os << "digraph tails {\n";
  std::vector<std::string> names;
  for (const auto& t : space.tails()) {
    names.push_back("W=" + format_set(spec, t.support));
    os << "  " << quoted(names.back()) << " [xlabel=" << quoted("H=" + format_set(spec, spec.unit() - t.support))
       << (t.cyclic_witness ? ", style=dashed" : "") << "];\n";
  }
  // S -> T when T is in the closure of {S}, i.e. W_T <= W_S.
  const auto spec_order = space.specialization();
  std::vector<std::vector<bool>> rel(space.size(), std::vector<bool>(space.size(), false));
  for (std::size_t s = 0; s < space.size(); ++s)
    for (std::size_t t = 0; t < space.size(); ++t) rel[s][t] = spec_order[t][s];
  for (auto [s, t] : transitive_reduction(rel)) os << "  " << quoted(names[s]) << " -> " << quoted(names[t]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_dot(const BdsSpec& spec, const IdealLattice& lattice) {
  std::ostringstream os;
  os << "digraph ideals {\n";
  os << "  label=" << quoted(lattice.label) << ";\n";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    names.push_back("H=" + format_set(spec, lattice.elements[i].atom_set));
    os << "  " << quoted(names.back());
    if (lattice.prime[i]) os << " [shape=box]";
    os << ";\n";
  }
  for (auto [lo, hi] : lattice.covers) os << "  " << quoted(names[lo]) << " -> " << quoted(names[hi]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bdsk
