#include <doctest.h>

#include <random>

#include "bdsk/boolean_core.hpp"
#include "bdsk/errors.hpp"
#include "fixtures.hpp"

using namespace bdsk;

namespace {

BooleanSet random_set(std::mt19937_64& rng, std::size_t n) {
  return BooleanSet::from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, (1ULL << n) - 1)(rng));
}

}  // namespace

TEST_CASE("BooleanSet basics") {
  BooleanSet s(5, {0, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.count() == 2);
  CHECK(s.members() == std::vector<std::size_t>{0, 3});
  CHECK(s.complement() == BooleanSet(5, {1, 2, 4}));
  CHECK(BooleanSet::full(5).count() == 5);
  CHECK_THROWS_AS(s.insert(5), UniverseMismatch);
  CHECK_THROWS_AS((void)(s | BooleanSet(4)), UniverseMismatch);
  CHECK_THROWS_AS((void)BooleanSet(3).first(), Error);

  BooleanSet wide(130, {0, 64, 129});
  CHECK(wide.count() == 3);
  CHECK(wide.complement().count() == 127);
  CHECK(wide.complement().complement() == wide);
}

TEST_CASE("algebra_ops") {
  const auto swap2 = fx::swap2();
  SUBCASE("empty against {x}") {
    const auto ops = algebra_ops(swap2.empty_set(), swap2.set_of({"x"}));
    CHECK(ops.union_set == swap2.set_of({"x"}));
    CHECK(ops.intersection.empty());
    CHECK(ops.relative_complement.empty());
    CHECK(ops.leq);
  }
  SUBCASE("idempotence") {
    const auto x = swap2.set_of({"x"});
    const auto ops = algebra_ops(x, x);
    CHECK(ops.union_set == x);
    CHECK(ops.leq);
  }
  SUBCASE("SWAP2 {x} vs {y}") {
    const auto ops = algebra_ops(swap2.set_of({"x"}), swap2.set_of({"y"}));
    CHECK(ops.union_set == swap2.unit());
    CHECK(ops.intersection.empty());
    CHECK_FALSE(ops.leq);
  }
  CHECK_THROWS_AS(algebra_ops(BooleanSet(2), BooleanSet(3)), UniverseMismatch);
}

TEST_CASE("Boolean algebra laws on random sets") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto a = random_set(rng, n);
    const auto b = random_set(rng, n);
    const auto c = random_set(rng, n);
    const BooleanSet zero(n);
    CHECK((a & (b | c)) == ((a & b) | (a & c)));
    CHECK((a | (b & c)) == ((a | b) & (a | c)));
    CHECK((a & zero) == zero);
    CHECK(((a & b) | (a - b)) == a);
    CHECK(((a & b) & (a - b)) == zero);
    CHECK(algebra_ops(a, b).leq == ((a & b) == a));
  }
}

TEST_CASE("generated_ideal") {
  const auto swap2 = fx::swap2();
  CHECK(generated_ideal(swap2.empty_set()).elements() == std::vector<BooleanSet>{swap2.empty_set()});
  CHECK(generated_ideal(swap2.unit()).elements().size() == 4);
  const auto ix = generated_ideal(swap2.set_of({"x"}));
  CHECK(ix.elements() == std::vector<BooleanSet>{swap2.empty_set(), swap2.set_of({"x"})});
  CHECK(ix.contains(swap2.empty_set()));
  CHECK_FALSE(ix.contains(swap2.set_of({"y"})));
}

TEST_CASE("ultrafilters and cylinders") {
  const auto loop = fx::loop();
  const auto uf = enumerate_ultrafilters(loop);
  REQUIRE(uf.size() == 1);
  CHECK(uf[0].principal_atom.id == "x");
  CHECK(cylinder(loop, loop.set_of({"x"})) == uf);
  CHECK(cylinder(loop, loop.empty_set()).empty());

  const auto swap2 = fx::swap2();
  const auto both = cylinder(swap2, swap2.unit());
  REQUIRE(both.size() == 2);
  CHECK(both[0].principal_atom.id == "x");
  CHECK(both[1].principal_atom.id == "y");

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 6;
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < n; ++k) ids.push_back("a" + std::to_string(k));
    const BdsSpec spec(ids, {"l"}, {BdsSpec::PartialMap(n)});
    const auto a = random_set(rng, n);
    const auto b = random_set(rng, n);
    if (!a.empty()) CHECK_FALSE(cylinder(spec, a).empty());
    const auto za = cylinder(spec, a);
    const auto zb = cylinder(spec, b);
    std::vector<Ultrafilter> both_ab;
    for (const auto& u : za)
      if (std::find(zb.begin(), zb.end(), u) != zb.end()) both_ab.push_back(u);
    CHECK(cylinder(spec, a & b) == both_ab);
  }
}

TEST_CASE("filters satisfying F0-F3 are the principal atom filters") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t sets = std::size_t{1} << n;
    std::size_t found = 0;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << sets); ++fam) {
      auto in = [&](std::size_t a) { return ((fam >> a) & 1U) != 0; };
      if (in(0)) continue;  // F0
      bool ok = fam != 0;
      for (std::size_t a = 0; a < sets && ok; ++a) {
        if (!in(a)) continue;
        for (std::size_t b = 0; b < sets && ok; ++b) {
          if ((a & ~b) == 0 && !in(b)) ok = false;    // F1
          if (in(b) && !in(a & b)) ok = false;        // F2
          const std::size_t c = a & ~b;               // a = (a & b) | c
          if (!in(a & b) && !in(c)) ok = false;       // F3
        }
      }
      if (!ok) continue;
      ++found;
      // Principal: the family is {A : atom in A} for a single atom.
      bool principal = false;
      for (std::size_t atom = 0; atom < n && !principal; ++atom) {
        bool same = true;
        for (std::size_t a = 0; a < sets; ++a) same = same && in(a) == (((a >> atom) & 1U) != 0);
        principal = same;
      }
      CHECK(principal);
    }
    CHECK(found == n);
  }
}

TEST_CASE("quotient_class") {
  const auto chain = fx::chain();
  const auto h = chain.set_of({"y"});
  CHECK(quotient_class(h, h).empty());
  CHECK(quotient_class(chain.unit(), h) == chain.set_of({"x"}));
  CHECK(quotient_class(chain.unit(), chain.empty_set()) == chain.unit());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 7;
    const auto a = random_set(rng, n);
    const auto b = random_set(rng, n);
    const auto hh = random_set(rng, n);
    CHECK((quotient_class(a, hh) & quotient_class(b, hh)) == quotient_class(a & b, hh));
    CHECK((quotient_class(a, hh) | quotient_class(b, hh)) == quotient_class(a | b, hh));
    CHECK((quotient_class(a, hh) - quotient_class(b, hh)) == quotient_class(a - b, hh));
    // [A] = [B] iff A u A' = B u B' for some A', B' in I_H.
    const bool same_class = (a | hh) == (b | hh);
    CHECK((quotient_class(a, hh) == quotient_class(b, hh)) == same_class);
  }
}
