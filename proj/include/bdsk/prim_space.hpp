#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/system.hpp"
#include "bdsk/tails.hpp"

namespace bdsk {

/// Sets of tails are BooleanSets over the universe {0, ..., |M|-1}.
using TailSet = BooleanSet;

/// The finite space M of maximal tails with basis U_A = {T : A in T}.
class TailSpace {
 public:
  TailSpace(std::size_t atom_count, std::vector<MaximalTail> tails);

  std::size_t size() const noexcept { return tails_.size(); }
  std::size_t atom_count() const noexcept { return atom_count_; }
  const std::vector<MaximalTail>& tails() const noexcept { return tails_; }
  const MaximalTail& tail(std::size_t i) const { return tails_.at(i); }

  TailSet empty_tail_set() const { return TailSet(size()); }
  TailSet all_tails() const { return TailSet::full(size()); }

  /// U_A.
  TailSet basis(const BooleanSet& a) const;
  /// For T in U_{A1} & U_{A2}, a C with T in U_C <= U_{A1} & U_{A2}, built
  /// from a common ancestor atom of A1 and A2 inside the tail. Absent when T
  /// is not in both basis sets.
  std::optional<BooleanSet> basis_refinement(const BdsSpec& spec, const BooleanSet& a1, const BooleanSet& a2,
                                             std::size_t t) const;

  /// Closure of S: tails whose support lies inside the union of the
  /// supports in S.
  TailSet closure(const TailSet& s) const;
  /// specialization()[t][s] == true iff t is in the closure of {s}.
  std::vector<std::vector<bool>> specialization() const;

 private:
  std::size_t atom_count_;
  std::vector<MaximalTail> tails_;
};

TailSpace build_tail_space(const BdsSpec& spec);
TailSet closure_of(const TailSpace& space, const TailSet& s);
std::vector<std::vector<bool>> specialization_order(const TailSpace& space);

struct IdealLattice {
  std::vector<HsIdeal> elements;  // canonical order
  /// Hasse edges (lower, upper) as element indices.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// True exactly on ideals whose complement is a maximal tail.
  std::vector<bool> prime;
  /// Condition (K) holds, so these are all ideals of the C*-algebra.
  bool complete = false;
  std::string label;

  std::optional<std::size_t> index_of(const BooleanSet& h) const;
};

IdealLattice ideal_lattice(const BdsSpec& spec);
/// Meet and join inside the lattice of hereditary saturated ideals.
BooleanSet lattice_meet(const BooleanSet& h1, const BooleanSet& h2);
BooleanSet lattice_join(const BdsSpec& spec, const BooleanSet& h1, const BooleanSet& h2);

struct PrimEntry {
  std::size_t tail = 0;
  BooleanSet support;
  BooleanSet ideal;  // H_T, the complement of the support
  std::size_t lattice_index = 0;
};

struct PrimReport {
  bool condition_k = false;
  std::optional<std::string> warning;
  std::vector<PrimEntry> entries;
  /// Tails and prime ideals are in bijection via T -> B \ T.
  bool bijection_ok = false;
  /// T in closure({S}) iff H_S <= H_T for every pair of tails.
  bool order_ok = false;
};

PrimReport prim_report(const BdsSpec& spec);

/// Specialization order of the tail space: an edge S -> T when T is in the
/// closure of {S} and S != T, transitively reduced.
std::string tail_space_dot(const BdsSpec& spec, const TailSpace& space);
/// Hasse diagram of the ideal lattice, nodes named "H={...}".
std::string lattice_dot(const BdsSpec& spec, const IdealLattice& lattice);

}  // namespace bdsk
