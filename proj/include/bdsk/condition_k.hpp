#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bdsk/boolean_set.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

enum class KMethod { direct, via_quotients };

/// A pair ((alpha, u^), A) violating Condition (K), with the maximal tail it
/// generates and the size n of the M_n(C(T)) corner it produces.
struct KWitness {
  Word word;
  std::size_t atom = 0;
  BooleanSet base;
  BooleanSet tail_support;
  std::size_t corner_n = 0;
};

struct KVerdict {
  bool satisfied = true;
  std::optional<KWitness> witness;
  KMethod method = KMethod::direct;
};

/// Condition (K) from the return languages of the atoms.
KVerdict decide_k_direct(const BdsSpec& spec);

/// Condition (K) as "every quotient by a proper hereditary saturated ideal
/// satisfies Condition (L)". Exhaustive over ideals; SizeLimitError above the
/// enumeration cap.
KVerdict decide_k_via_quotients(const BdsSpec& spec);

/// Every ultrafilter cycle (alpha, u^) admits another cycle word at u^ that
/// is not a power of alpha.
bool decide_strong_k(const BdsSpec& spec);

struct CornerObstruction {
  BooleanSet tail_support;
  BooleanSet corner;  // B = union of theta_{alpha[1,k]}(A), k = 1..n
  std::size_t n = 0;
  Word word;
  std::size_t atom = 0;
  /// theta_{alpha[1,k]}(A) for k = 1..n, as parent-system sets.
  std::vector<BooleanSet> pieces;
};

/// One entry per cyclic maximal tail, in canonical support order.
std::vector<CornerObstruction> corner_obstructions(const BdsSpec& spec);

/// Textual consequences of the verdict for the associated C*-algebra. These
/// are implied statements, never computed.
std::vector<std::string> k_annotations(const KVerdict& verdict);

}  // namespace bdsk
