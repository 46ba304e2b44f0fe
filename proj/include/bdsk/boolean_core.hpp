#pragma once

#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

struct AlgebraOps {
  BooleanSet union_set;
  BooleanSet intersection;
  BooleanSet relative_complement;
  bool leq = false;
};

/// Union, intersection, A \ B and A <= B (A & B == A).
AlgebraOps algebra_ops(const BooleanSet& a, const BooleanSet& b);

/// The principal ideal I_A = {B : B <= A}.
class AlgebraIdeal {
 public:
  explicit AlgebraIdeal(BooleanSet generator) : generator_(std::move(generator)) {}
  const BooleanSet& generator() const noexcept { return generator_; }
  bool contains(const BooleanSet& b) const { return b.subset_of(generator_); }
  /// All members in canonical order. Exponential; generator must have at
  /// most 20 atoms.
  std::vector<BooleanSet> elements() const;

 private:
  BooleanSet generator_;
};

AlgebraIdeal generated_ideal(const BooleanSet& a);

/// Principal ultrafilter {A : atom in A}.
struct Ultrafilter {
  Atom principal_atom;
  bool contains(const BooleanSet& a) const { return a.contains(principal_atom.index); }
  friend bool operator==(const Ultrafilter& x, const Ultrafilter& y) {
    return x.principal_atom.index == y.principal_atom.index;
  }
};

/// One ultrafilter per atom, in atom order.
std::vector<Ultrafilter> enumerate_ultrafilters(const BdsSpec& spec);
/// Z(A): ultrafilters containing A, in atom order.
std::vector<Ultrafilter> cylinder(const BdsSpec& spec, const BooleanSet& a);

/// Canonical representative A \ H of [A] in B / I_H.
BooleanSet quotient_class(const BooleanSet& a, const BooleanSet& h);

}  // namespace bdsk
