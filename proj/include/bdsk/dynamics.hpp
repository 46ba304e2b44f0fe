#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

/// theta_alpha(A) = {u : dual(alpha)(u) defined and in A}. The empty word
/// acts as the identity.
BooleanSet apply_theta(const BdsSpec& spec, const Word& alpha, const BooleanSet& a);
/// theta_l(A) for a single label.
BooleanSet apply_label(const BdsSpec& spec, std::size_t label, const BooleanSet& a);

/// R_alpha, the least upper bound of the range of theta_alpha; the unit for
/// the empty word.
BooleanSet range_set(const BdsSpec& spec, const Word& alpha);
/// A set D with theta_alpha(D) = R_alpha. The unit always works.
BooleanSet closed_domain(const BdsSpec& spec, const Word& alpha);

struct SetClassification {
  std::vector<std::size_t> delta;  // labels with theta_l(A) nonempty
  std::size_t lambda = 0;
  bool regular = false;
};

/// Delta_A, lambda_A and regularity. A is regular iff every atom of A lies
/// in the image of some dual map, since Delta of a union is the union of
/// the atom Deltas.
SetClassification classify_set(const BdsSpec& spec, const BooleanSet& a);
/// Delta of a single atom.
std::vector<std::size_t> atom_delta(const BdsSpec& spec, std::size_t atom);

/// Every ultrafilter contains a set with finitely many active labels.
bool is_locally_finite(const BdsSpec& spec);

enum class CycleStatus { not_cycle, cycle_with_exit, cycle_no_exit };

struct CycleExit {
  std::size_t t = 0;  // 1 <= t <= |alpha|
  BooleanSet set;     // nonempty B <= theta_{alpha[1,t]}(A) with Delta_B != {alpha_{t+1}}
};

struct CycleWitness {
  Word word;
  BooleanSet base;
  CycleStatus status = CycleStatus::not_cycle;
  std::optional<CycleExit> exit;
};

/// Decides whether (alpha, A) is a cycle and whether it has an exit. Index
/// t runs over 1..|alpha| with alpha_{|alpha|+1} = alpha_1; t = |alpha|
/// covers the base set itself.
CycleWitness cycle_check(const BdsSpec& spec, const Word& alpha, const BooleanSet& a);

struct NormalizedCycle {
  Word word;
  BooleanSet base;
};

/// Shortens a no-exit cycle to (alpha_{[1,j]}, B) with j minimal and
/// B & theta_{beta[1,k]}(B) empty for 1 <= k < j. Throws PreconditionError
/// if (alpha, A) is not a cycle without exits.
NormalizedCycle normalize_no_exit_cycle(const BdsSpec& spec, const Word& alpha, const BooleanSet& a);

struct ConditionLResult {
  bool holds = true;
  std::optional<CycleWitness> witness;
};

/// Condition (L) via a forced simulation from every singleton {x}.
ConditionLResult check_condition_L(const BdsSpec& spec);

}  // namespace bdsk
