#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/stone_dual.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

/// Exhaustive enumerations scan all subsets of the atoms and refuse larger
/// systems with SizeLimitError.
inline constexpr std::size_t kEnumerationAtomLimit = 20;

/// A hereditary saturated ideal, stored by its top element H.
struct HsIdeal {
  BooleanSet atom_set;
  bool proper = true;  // false for the whole algebra

  friend bool operator==(const HsIdeal&, const HsIdeal&) = default;
};

struct CyclicWitness {
  Word word;         // alpha, in reading order
  std::size_t atom;  // u, the ultrafilter u^ fixed by alpha
  BooleanSet base;   // A in u^, here {u}
};

/// A maximal tail T = {A : A meets support}.
struct MaximalTail {
  BooleanSet support;
  std::optional<CyclicWitness> cyclic_witness;

  bool contains(const BooleanSet& a) const { return a.intersects(support); }
};

/// theta_l(H) <= H for every label.
bool is_hereditary(const BdsSpec& spec, const BooleanSet& h);
/// No regular atom outside H has all of its label images inside H.
bool is_saturated(const BdsSpec& spec, const BooleanSet& h);

/// Smallest hereditary saturated ideal containing S.
HsIdeal saturation_closure(const BdsSpec& spec, const BooleanSet& s);

/// All hereditary saturated ideals (including the empty one and the
/// improper one), in canonical order.
std::vector<HsIdeal> enumerate_hs_ideals(const BdsSpec& spec);

/// The quotient system B / I_H, realised on the complement of H. Atom ids
/// are kept so atoms can be mapped back by id. Throws ValidationError for a
/// non-hereditary or improper H.
BdsSpec quotient_bds(const BdsSpec& spec, const BooleanSet& h);
/// Lifts a set of quotient atoms back to the parent system.
BooleanSet lift_from_quotient(const BdsSpec& parent, const BdsSpec& quotient, const BooleanSet& s);
/// Restricts a parent set to the atoms of the quotient.
BooleanSet project_to_quotient(const BdsSpec& parent, const BdsSpec& quotient, const BooleanSet& s);

/// (T0)-(T5) for the tail {A : A meets W}.
bool is_maximal_tail(const BdsSpec& spec, const BooleanSet& w);
bool is_maximal_tail(const BdsSpec& spec, const DualGraph& graph, const BooleanSet& w);

/// All maximal tails in canonical support order, each annotated with its
/// cyclic witness when it has one.
std::vector<MaximalTail> enumerate_maximal_tails(const BdsSpec& spec);

/// The tail {B : theta_beta(B) in u^ for some beta}. Requires (alpha, u^) to
/// be an ultrafilter cycle whose return language at u lies in alpha+;
/// otherwise throws PreconditionError.
MaximalTail tail_from_ultrafilter_cycle(const BdsSpec& spec, const Word& alpha, std::size_t u);

/// Cyclic witness (alpha, u, {u}) of a maximal tail, if any. Throws
/// PreconditionError when W is not a maximal tail.
std::optional<CyclicWitness> is_cyclic_tail(const BdsSpec& spec, const BooleanSet& w);

}  // namespace bdsk
