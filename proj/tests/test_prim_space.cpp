#include <doctest.h>

#include <algorithm>

#include "bdsk/condition_k.hpp"
#include "bdsk/errors.hpp"
#include "bdsk/generators.hpp"
#include "bdsk/prim_space.hpp"
#include "fixtures.hpp"

using namespace bdsk;

namespace {

// Closure by the definition of the topology: T is in cl(S) iff every basic
// open set U_A containing T meets S.
TailSet closure_by_basis(const TailSpace& space, const TailSet& s) {
  TailSet out = space.empty_tail_set();
  const auto n = space.atom_count();
  for (std::size_t t = 0; t < space.size(); ++t) {
    bool in = true;
    for (std::uint64_t a = 1; a < (1ULL << n) && in; ++a) {
      const auto u = space.basis(BooleanSet::from_mask(n, a));
      if (u.contains(t) && !u.intersects(s)) in = false;
    }
    if (in) out.insert(t);
  }
  return out;
}

void check_kuratowski(const TailSpace& space) {
  const auto m = space.size();
  REQUIRE(m <= 12);
  CHECK(closure_of(space, space.empty_tail_set()).empty());
  for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
    const auto set = TailSet::from_mask(m, s);
    const auto cs = closure_of(space, set);
    CHECK(set.subset_of(cs));
    CHECK(closure_of(space, cs) == cs);
    CHECK(cs == closure_by_basis(space, set));
    for (std::uint64_t t = s; t < (1ULL << m); t = (t + 1) | s) {
      const auto other = TailSet::from_mask(m, t);
      CHECK(cs.subset_of(closure_of(space, other)));
      CHECK(closure_of(space, set | other) == (cs | closure_of(space, other)));
    }
  }
}

void check_basis_property(const BdsSpec& spec, const TailSpace& space) {
  const auto n = spec.atom_count();
  for (std::uint64_t a1 = 0; a1 < (1ULL << n); ++a1)
    for (std::uint64_t a2 = 0; a2 < (1ULL << n); ++a2) {
      const auto s1 = BooleanSet::from_mask(n, a1);
      const auto s2 = BooleanSet::from_mask(n, a2);
      const auto both = space.basis(s1) & space.basis(s2);
      for (std::size_t t = 0; t < space.size(); ++t) {
        const auto c = space.basis_refinement(spec, s1, s2, t);
        CHECK(c.has_value() == both.contains(t));
        if (!c) continue;
        const auto uc = space.basis(*c);
        CHECK(uc.contains(t));
        CHECK(uc.subset_of(both));
      }
    }
}

void check_order(const BdsSpec& spec) {
  const auto report = prim_report(spec);
  CHECK(report.bijection_ok);
  CHECK(report.order_ok);
  const auto space = build_tail_space(spec);
  const auto spec_order = specialization_order(space);
  for (std::size_t t = 0; t < space.size(); ++t)
    for (std::size_t s = 0; s < space.size(); ++s) {
      const auto ht = space.tail(t).support.complement();
      const auto hs = space.tail(s).support.complement();
      CHECK(spec_order[t][s] == hs.subset_of(ht));
    }
}

}  // namespace

TEST_CASE("tail space examples") {
  const auto loop = fx::loop();
  const auto ls = build_tail_space(loop);
  REQUIRE(ls.size() == 1);
  CHECK(ls.basis(loop.set_of({"x"})) == ls.all_tails());
  CHECK(ls.basis(loop.empty_set()).empty());

  CHECK(build_tail_space(fx::dloop()).size() == 1);

  const auto two = fx::two_loops();
  const auto ts = build_tail_space(two);
  REQUIRE(ts.size() == 2);
  const auto order = specialization_order(ts);
  CHECK(order[0][0]);
  CHECK(order[1][1]);
  CHECK_FALSE(order[0][1]);
  CHECK_FALSE(order[1][0]);
  CHECK(closure_of(ts, ts.all_tails()) == ts.all_tails());
  CHECK(closure_of(ts, TailSet(2, {0})) == TailSet(2, {0}));

  const auto chain = fx::chain();
  const auto cs = build_tail_space(chain);
  REQUIRE(cs.size() == 1);
  CHECK(cs.tail(0).support == chain.unit());
  CHECK(specialization_order(cs) == std::vector<std::vector<bool>>{{true}});
}

TEST_CASE("ideal lattice examples") {
  const auto dloop = fx::dloop();
  const auto d = ideal_lattice(dloop);
  REQUIRE(d.elements.size() == 2);
  CHECK(d.elements[0].atom_set.empty());
  CHECK(d.elements[1].atom_set == dloop.unit());
  CHECK(d.covers == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(d.prime == std::vector<bool>{true, false});
  CHECK(d.complete);
  CHECK(d.label == "complete ideal lattice of C*(B,L,theta)");

  const auto l = ideal_lattice(fx::loop());
  CHECK(l.elements.size() == 2);
  CHECK(l.covers == d.covers);
  CHECK(l.prime == d.prime);
  CHECK_FALSE(l.complete);
  CHECK(l.label == "gauge-invariant ideals only");

  const auto two = fx::two_loops();
  const auto t = ideal_lattice(two);
  REQUIRE(t.elements.size() == 4);
  CHECK(t.covers.size() == 4);
  CHECK(t.prime == std::vector<bool>{false, true, true, false});
  CHECK(t.index_of(two.set_of({"x"})).has_value());
  CHECK(lattice_meet(two.set_of({"x"}), two.set_of({"y"})).empty());
  CHECK(lattice_join(two, two.set_of({"x"}), two.set_of({"y"})) == two.unit());
}

TEST_CASE("prim report examples") {
  const auto d = prim_report(fx::dloop());
  CHECK(d.condition_k);
  CHECK_FALSE(d.warning.has_value());
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].ideal.empty());
  CHECK(d.bijection_ok);
  CHECK(d.order_ok);

  const auto l = prim_report(fx::loop());
  CHECK_FALSE(l.condition_k);
  REQUIRE(l.warning);
  CHECK(l.warning->find("Condition (K) fails") != std::string::npos);
  CHECK(l.entries.size() == 1);

  const auto two = fx::two_loops();
  const auto t = prim_report(two);
  CHECK(t.entries.size() == 2);
  CHECK(t.order_ok);
  CHECK(t.entries[0].ideal == two.set_of({"y"}));
  CHECK(t.entries[1].ideal == two.set_of({"x"}));
}

TEST_CASE("closure is a Kuratowski operator and the basis refines") {
  for (const auto& spec : {fx::loop(), fx::dloop(), fx::swap2(), fx::chain(), fx::two_loops()}) {
    const auto space = build_tail_space(spec);
    check_kuratowski(space);
    check_basis_property(spec, space);
  }
  Rng rng(401);
  int nontrivial = 0;
  for (int i = 0; i < 300; ++i) {
    const auto spec = random_spec(rng, 6, 3);
    const auto space = build_tail_space(spec);
    if (space.size() > 12) continue;
    nontrivial += space.size() > 1 ? 1 : 0;
    check_kuratowski(space);
    check_basis_property(spec, space);
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("prim order check on K systems") {
  check_order(fx::dloop());
  check_order(fx::two_loops());
  Rng rng(411);
  int k_specs = 0;
  for (int i = 0; i < 400; ++i) {
    const auto spec = random_spec(rng, 6, 3);
    const auto lattice = ideal_lattice(spec);
    const auto space = build_tail_space(spec);
    std::size_t primes = 0;
    for (bool p : lattice.prime) primes += p ? 1 : 0;
    CHECK(primes == space.size());
    for (std::size_t t = 0; t < space.size(); ++t) {
      const auto idx = lattice.index_of(space.tail(t).support.complement());
      REQUIRE(idx);
      CHECK(lattice.prime[*idx]);
    }
    for (const auto& [lo, hi] : lattice.covers) {
      CHECK(lattice.elements[lo].atom_set.subset_of(lattice.elements[hi].atom_set));
      CHECK(lattice.elements[lo].atom_set != lattice.elements[hi].atom_set);
    }
    if (!decide_k_direct(spec).satisfied) continue;
    ++k_specs;
    CHECK(lattice.complete);
    check_order(spec);
  }
  CHECK(k_specs > 50);
}

TEST_CASE("DOT output") {
  const auto two = fx::two_loops();
  const auto dot = tail_space_dot(two, build_tail_space(two));
  CHECK(dot.rfind("digraph tails {", 0) == 0);
  CHECK(dot.find("W={x}") != std::string::npos);
  CHECK(dot.find("W={y}") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  // Three tails in a chain: {z} <= {y,z} <= {x,y,z}.
  const BdsSpec line({"x", "y", "z"}, {"a", "b", "c", "d"},
                     {{0, std::nullopt, std::nullopt}, {std::nullopt, 1, std::nullopt}, {std::nullopt, std::nullopt, 2},
                      {std::nullopt, 0, 1}});
  const auto space = build_tail_space(line);
  REQUIRE(space.size() == 3);
  const auto ldot = tail_space_dot(line, space);
  std::size_t edges = 0;
  for (std::size_t p = ldot.find("->"); p != std::string::npos; p = ldot.find("->", p + 2)) ++edges;
  CHECK(edges == 2);
  CHECK(tail_space_dot(line, space) == ldot);

  const auto lat = lattice_dot(two, ideal_lattice(two));
  CHECK(lat.rfind("digraph ideals {", 0) == 0);
  CHECK(lat.find("H={x}") != std::string::npos);
  CHECK(lat.find("shape=box") != std::string::npos);
}
