#include <doctest.h>

#include <algorithm>
#include <random>

#include "bdsk/dynamics.hpp"
#include "bdsk/generators.hpp"
#include "bdsk/stone_dual.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bdsk;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t labels, std::size_t max_len) {
  Word w;
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(std::uniform_int_distribution<std::size_t>(0, labels - 1)(rng));
  return w;
}

// Oracle words are in consumption order; ours are in reading order.
Word from_consumed(const oracle::Letters& l) {
  Word w;
  for (auto it = l.rbegin(); it != l.rend(); ++it) w.letters.push_back(static_cast<std::size_t>(*it));
  return w;
}

}  // namespace

TEST_CASE("dual_step and ultrafilter cycles on the fixtures") {
  const auto swap2 = fx::swap2();
  const auto x = *swap2.atom_index("x");
  const auto y = *swap2.atom_index("y");
  CHECK(dual_step(swap2, swap2.word_of({"a"}), x) == y);
  CHECK(dual_step(swap2, swap2.word_of({"a", "a"}), x) == x);
  CHECK(dual_step(swap2, Word{}, x) == x);
  CHECK_FALSE(is_ultrafilter_cycle(swap2, swap2.word_of({"a"}), x));
  CHECK(is_ultrafilter_cycle(swap2, swap2.word_of({"a", "a"}), x));

  const auto loop = fx::loop();
  CHECK(is_ultrafilter_cycle(loop, loop.word_of({"a"}), 0));

  const auto chain = fx::chain();
  const auto cy = *chain.atom_index("y");
  CHECK_FALSE(dual_step(chain, chain.word_of({"a"}), cy).has_value());
  CHECK(dual_step(chain, chain.word_of({"b"}), *chain.atom_index("x")) == cy);
}

TEST_CASE("return language examples") {
  const auto loop = fx::loop();
  const auto l = return_language_single_power(loop, 0);
  CHECK(l.atom.id == "x");
  CHECK(l.has_return);
  REQUIRE(l.single_power);
  CHECK(*l.single_power == Word{0});

  const auto swap2 = fx::swap2();
  const auto s = return_language_single_power(swap2, 0);
  REQUIRE(s.single_power);
  CHECK(*s.single_power == swap2.word_of({"a", "a"}));
  CHECK(*s.primitive_root == swap2.word_of({"a"}));

  const auto dloop = fx::dloop();
  const auto d = return_language_single_power(dloop, 0);
  CHECK(d.has_return);
  CHECK_FALSE(d.single_power.has_value());

  const auto chain = fx::chain();
  const auto cx = return_language_single_power(chain, *chain.atom_index("x"));
  REQUIRE(cx.single_power);
  CHECK(*cx.single_power == chain.word_of({"a"}));
  const auto cy = return_language_single_power(chain, *chain.atom_index("y"));
  CHECK_FALSE(cy.has_return);
  CHECK_FALSE(cy.single_power.has_value());
}

TEST_CASE("dual_step bridges theta and composes") {
  Rng srng(101);
  std::mt19937_64 rng(102);
  for (int i = 0; i < 500; ++i) {
    const auto spec = random_spec(srng, 6, 3);
    const auto n = spec.atom_count();
    const auto a = random_word(rng, spec.label_count(), 5);
    const auto b = random_word(rng, spec.label_count(), 5);
    const auto set = BooleanSet::from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, (1ULL << n) - 1)(rng));
    const auto image = apply_theta(spec, a, set);
    for (std::size_t u = 0; u < n; ++u) {
      const auto d = dual_step(spec, a, u);
      CHECK(image.contains(u) == (d && set.contains(*d)));
      CHECK(range_set(spec, a).contains(u) == d.has_value());
      std::optional<std::size_t> composed;
      if (auto inner = dual_step(spec, b, u)) composed = dual_step(spec, a, *inner);
      CHECK(dual_step(spec, a + b, u) == composed);
    }
  }
}

TEST_CASE("ultrafilter cycles are closed under powers and come from cycles") {
  Rng srng(111);
  std::mt19937_64 rng(112);
  for (int i = 0; i < 800; ++i) {
    const auto spec = random_spec(srng, 5, 2);
    const auto n = spec.atom_count();
    auto w = random_word(rng, spec.label_count(), 4);
    if (w.empty()) w.letters.push_back(0);
    for (std::size_t u = 0; u < n; ++u)
      if (is_ultrafilter_cycle(spec, w, u))
        for (std::size_t k = 1; k <= 4; ++k) CHECK(is_ultrafilter_cycle(spec, w.power(k), u));
    const auto a = BooleanSet::from_mask(n, std::uniform_int_distribution<std::uint64_t>(1, (1ULL << n) - 1)(rng));
    if (cycle_check(spec, w, a).status != CycleStatus::not_cycle)
      for (auto u : a.members()) CHECK(is_ultrafilter_cycle(spec, w, u));
  }
}

TEST_CASE("DualGraph reach and components") {
  Rng srng(121);
  for (int i = 0; i < 300; ++i) {
    const auto spec = random_spec(srng, 7, 3);
    const auto r = oracle::raw(spec);
    const DualGraph g(spec);
    CHECK(g.size() == spec.atom_count());
    for (int u = 0; u < r.n; ++u) {
      oracle::Mask reach = oracle::Mask{1} << u;
      for (bool grew = true; grew;) {
        grew = false;
        for (int v = 0; v < r.n; ++v)
          if (oracle::has(reach, v))
            for (int l = 0; l < r.k; ++l)
              if (r.f[l][v] >= 0 && !oracle::has(reach, r.f[l][v])) {
                reach |= oracle::Mask{1} << r.f[l][v];
                grew = true;
              }
      }
      CHECK(g.reach(u).mask() == reach);
      for (int v = 0; v < r.n; ++v) {
        CHECK(g.coreach(u).contains(v) == g.reach(v).contains(u));
        const bool same = g.reach(u).contains(v) && g.reach(v).contains(u);
        CHECK((g.component(u) == g.component(v)) == same);
      }
    }
  }
}

TEST_CASE("return language agrees with closed-walk enumeration") {
  Rng srng(131);
  int single = 0;
  for (int i = 0; i < 600; ++i) {
    const auto spec = random_spec(srng, 6, 3);
    const auto r = oracle::raw(spec);
    const DualGraph g(spec);
    for (int u = 0; u < r.n; ++u) {
      const auto got = return_language_single_power(spec, g, u);
      const auto want = oracle::closed_walks(r, u, 2 * r.n + 2);
      CHECK(got.has_return == want.has_return);
      CHECK(got.single_power.has_value() == want.single_power.has_value());
      if (got.single_power && want.single_power) {
        ++single;
        CHECK(*got.single_power == from_consumed(*want.single_power));
        CHECK(is_ultrafilter_cycle(spec, *got.single_power, u));
        CHECK(got.single_power->is_power_of(*got.primitive_root));
        CHECK(*got.primitive_root == got.single_power->primitive_root());
      }
    }
  }
  CHECK(single > 50);
}
