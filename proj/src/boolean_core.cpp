#include "bdsk/boolean_core.hpp"

#include <algorithm>

#include "bdsk/errors.hpp"

namespace bdsk {

AlgebraOps algebra_ops(const BooleanSet& a, const BooleanSet& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch("algebra_ops on different atom universes");
  AlgebraOps ops{a | b, a & b, a - b, false};
  ops.leq = ops.intersection == a;
  return ops;
}

std::vector<BooleanSet> AlgebraIdeal::elements() const {
  const auto atoms = generator_.members();
  if (atoms.size() > 20) throw SizeLimitError("ideal enumeration limited to 20 generator atoms");
  std::vector<BooleanSet> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    BooleanSet s(generator_.universe());
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((m >> i) & 1U) s.insert(atoms[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraIdeal generated_ideal(const BooleanSet& a) { return AlgebraIdeal(a); }

std::vector<Ultrafilter> enumerate_ultrafilters(const BdsSpec& spec) {
  std::vector<Ultrafilter> out;
  out.reserve(spec.atom_count());
  for (std::size_t i = 0; i < spec.atom_count(); ++i) out.push_back({spec.atom(i)});
  return out;
}

std::vector<Ultrafilter> cylinder(const BdsSpec& spec, const BooleanSet& a) {
  spec.check_set(a);
  std::vector<Ultrafilter> out;
  for (auto i : a.members()) out.push_back({spec.atom(i)});
  return out;
}

BooleanSet quotient_class(const BooleanSet& a, const BooleanSet& h) { return a - h; }

}  // namespace bdsk
