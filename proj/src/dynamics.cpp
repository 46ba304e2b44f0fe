#include "bdsk/dynamics.hpp"

#include <unordered_set>

#include "bdsk/errors.hpp"

namespace bdsk {

BooleanSet apply_label(const BdsSpec& spec, std::size_t label, const BooleanSet& a) {
  const auto& map = spec.dual_map(label);
  BooleanSet out = spec.empty_set();
  for (std::size_t u = 0; u < map.size(); ++u)
    if (map[u] && a.contains(*map[u])) out.insert(u);
  return out;
}

BooleanSet apply_theta(const BdsSpec& spec, const Word& alpha, const BooleanSet& a) {
  spec.check_word(alpha);
  spec.check_set(a);
  BooleanSet cur = a;
  for (auto l : alpha.letters) {
    if (cur.empty()) break;
    cur = apply_label(spec, l, cur);
  }
  return cur;
}

BooleanSet range_set(const BdsSpec& spec, const Word& alpha) { return apply_theta(spec, alpha, spec.unit()); }

BooleanSet closed_domain(const BdsSpec& spec, const Word& alpha) {
  spec.check_word(alpha);
  return spec.unit();
}

std::vector<std::size_t> atom_delta(const BdsSpec& spec, std::size_t atom) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < spec.label_count(); ++l) {
    const auto& map = spec.dual_map(l);
    for (const auto& img : map) {
      if (img == atom) {
        out.push_back(l);
        break;
      }
    }
  }
  return out;
}

SetClassification classify_set(const BdsSpec& spec, const BooleanSet& a) {
  spec.check_set(a);
  SetClassification c;
  for (std::size_t l = 0; l < spec.label_count(); ++l)
    if (!apply_label(spec, l, a).empty()) c.delta.push_back(l);
  c.lambda = c.delta.size();
  c.regular = true;
  for (auto u : a.members()) {
    if (atom_delta(spec, u).empty()) {
      c.regular = false;
      break;
    }
  }
  return c;
}

bool is_locally_finite(const BdsSpec& spec) {
  // For each ultrafilter x^ the set {x} belongs to it and has at most
  // |labels| active labels.
  for (std::size_t x = 0; x < spec.atom_count(); ++x) {
    BooleanSet witness(spec.atom_count(), {x});
    if (classify_set(spec, witness).lambda > spec.label_count()) return false;
  }
  return true;
}

CycleWitness cycle_check(const BdsSpec& spec, const Word& alpha, const BooleanSet& a) {
  spec.check_word(alpha);
  spec.check_set(a);
  if (alpha.empty()) throw PreconditionError("cycle_check needs a nonempty word");
  if (a.empty()) throw PreconditionError("cycle_check needs a nonempty base set");

  CycleWitness w{alpha, a, CycleStatus::not_cycle, std::nullopt};
  for (auto u : a.members()) {
    BooleanSet single(spec.atom_count(), {u});
    if (apply_theta(spec, alpha, single) != single) return w;
  }

  w.status = CycleStatus::cycle_no_exit;
  BooleanSet image = a;
  for (std::size_t t = 1; t <= alpha.size(); ++t) {
    image = apply_label(spec, alpha[t - 1], image);
    const auto next = alpha[t % alpha.size()];
    for (auto v : image.members()) {
      const auto d = atom_delta(spec, v);
      if (d.size() != 1 || d.front() != next) {
        w.status = CycleStatus::cycle_with_exit;
        w.exit = CycleExit{t, BooleanSet(spec.atom_count(), {v})};
        return w;
      }
    }
  }
  return w;
}

NormalizedCycle normalize_no_exit_cycle(const BdsSpec& spec, const Word& alpha, const BooleanSet& a) {
  if (alpha.empty() || a.empty() || cycle_check(spec, alpha, a).status != CycleStatus::cycle_no_exit)
    throw PreconditionError("normalize_no_exit_cycle: not a cycle without exits");

  for (std::size_t j = 1; j <= alpha.size(); ++j) {
    const Word beta = alpha.prefix(j);
    BooleanSet fixed = spec.empty_set();
    for (auto u : a.members()) {
      BooleanSet single(spec.atom_count(), {u});
      if (apply_theta(spec, beta, single) == single) fixed.insert(u);
    }
    if (fixed.empty()) continue;
    // With j minimal, no proper prefix of beta returns a fixed atom to
    // itself, so a single fixed atom already satisfies the disjointness
    // clause.
    BooleanSet b(spec.atom_count(), {fixed.first()});
    for (std::size_t k = 1; k < j; ++k)
      if (b.intersects(apply_theta(spec, beta.prefix(k), b)))
        throw Error("normalize_no_exit_cycle: disjointness violated (internal)");
    return {beta, b};
  }
  throw Error("normalize_no_exit_cycle: no prefix cycle found (internal)");
}

ConditionLResult check_condition_L(const BdsSpec& spec) {
  const auto n = spec.atom_count();
  std::vector<std::optional<std::size_t>> forced(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = atom_delta(spec, v);
    if (d.size() == 1) forced[v] = d.front();
  }

  for (std::size_t x = 0; x < n; ++x) {
    const BooleanSet start(n, {x});
    BooleanSet state = start;
    Word word;
    std::unordered_set<BooleanSet, BooleanSetHash> seen{state};
    while (true) {
      std::optional<std::size_t> letter;
      bool alive = true;
      for (auto v : state.members()) {
        if (!forced[v] || (letter && *letter != *forced[v])) {
          alive = false;
          break;
        }
        letter = forced[v];
      }
      if (!alive || !letter) break;
      word.letters.push_back(*letter);
      state = apply_label(spec, *letter, state);
      if (state == start) {
        auto witness = cycle_check(spec, word, start);
        if (witness.status != CycleStatus::cycle_no_exit)
          throw Error("check_condition_L: simulated cycle has an exit (internal)");
        return {false, std::move(witness)};
      }
      if (!seen.insert(state).second) break;
    }
  }
  return {true, std::nullopt};
}

}  // namespace bdsk
