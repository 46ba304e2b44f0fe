#include <doctest.h>

#include <numeric>

#include "bdsk/condition_k.hpp"
#include "bdsk/dynamics.hpp"
#include "bdsk/errors.hpp"
#include "bdsk/generators.hpp"
#include "bdsk/graph.hpp"
#include "bdsk/stone_dual.hpp"
#include "oracles.hpp"

using namespace bdsk;

namespace {

// Every word over the labels of length 1..max_len.
template <class F>
void for_each_word(std::size_t labels, std::size_t max_len, F&& visit) {
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty()) visit(w);
    if (w.size() == max_len) return;
    for (std::size_t l = 0; l < labels; ++l) {
      w.letters.push_back(l);
      self(self);
      w.letters.pop_back();
    }
  };
  rec(rec);
}

bool is_closed_path(const GraphSpec& g, const Word& w, std::size_t v) {
  if (g.edge(w[0]).source != v || g.edge(w[w.size() - 1]).range != v) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (g.edge(w[i]).range != g.edge(w[i + 1]).source) return false;
  return true;
}

// Edge i of the infinite word stem.cycle.cycle...
std::size_t letter_at(const BoundaryPath& p, std::size_t i) {
  if (i < p.stem.size()) return p.stem[i];
  return p.cycle[(i - p.stem.size()) % p.cycle.size()];
}

bool equals_alpha_infinity(const BoundaryPath& x, const Word& alpha) {
  if (x.kind != BoundaryPath::Kind::eventually_cyclic) return false;
  const auto len = x.stem.size() + x.cycle.size() * alpha.size() + alpha.size();
  for (std::size_t i = 0; i < len; ++i)
    if (letter_at(x, i) != alpha[i % alpha.size()]) return false;
  return true;
}

}  // namespace

TEST_CASE("GraphSpec validation") {
  CHECK_THROWS_AS(GraphSpec({"v", "v"}, {}), ValidationError);
  CHECK_THROWS_AS(GraphSpec::from_ids({"v"}, {{"e", "v", "w"}}), ValidationError);
  CHECK_THROWS_AS(GraphSpec::from_ids({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}), ValidationError);
  const auto g = GraphSpec::from_ids({"u", "v"}, {{"e", "u", "v"}});
  CHECK(g.is_sink(1));
  CHECK_FALSE(g.is_sink(0));
  CHECK(g.on_cycle() == std::vector<bool>{false, false});
}

TEST_CASE("vertex construction examples") {
  const auto loop = vertex_construction(GraphSpec::from_ids({"v"}, {{"e", "v", "v"}}));
  CHECK(loop.image(0, 0) == 0u);
  CHECK(apply_theta(loop, Word{0}, loop.unit()) == loop.unit());

  const auto two = vertex_construction(GraphSpec::from_ids({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}));
  CHECK(two.image(0, 0) == 0u);
  CHECK(two.image(1, 0) == 0u);
  CHECK(decide_k_direct(two).satisfied);

  const auto edge = vertex_construction(GraphSpec::from_ids({"u", "v"}, {{"e", "u", "v"}}));
  CHECK(apply_theta(edge, Word{0}, edge.set_of({"u"})) == edge.set_of({"v"}));
  CHECK(edge.image(0, 1) == 0u);
  CHECK_FALSE(edge.image(0, 0).has_value());

  const auto empty = vertex_construction(GraphSpec({"v"}, {}));
  CHECK(empty.label_count() == 0);
  CHECK(decide_k_direct(empty).satisfied);
}

TEST_CASE("graph_condition_k examples") {
  CHECK_FALSE(graph_condition_k(GraphSpec::from_ids({"v"}, {{"e", "v", "v"}})));
  CHECK(graph_condition_k(GraphSpec::from_ids({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}})));
  CHECK(graph_condition_k(GraphSpec::from_ids({"u", "v", "w"}, {{"e", "u", "v"}, {"f", "v", "w"}, {"g", "u", "w"}})));
  // A loop with an exit still has a single return.
  CHECK_FALSE(graph_condition_k(GraphSpec::from_ids({"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}})));
  // Two cycles through v: v->w->v and a loop at v.
  CHECK(graph_condition_k(GraphSpec::from_ids({"v", "w"}, {{"e", "v", "w"}, {"f", "w", "v"}, {"g", "v", "v"}})));
}

TEST_CASE("boundary examples") {
  const auto loop_g = GraphSpec::from_ids({"v"}, {{"e", "v", "v"}});
  const auto lp = boundary_paths(loop_g);
  REQUIRE(lp.size() == 1);
  CHECK(lp[0].kind == BoundaryPath::Kind::eventually_cyclic);
  CHECK(boundary_path_id(loop_g, lp[0]) == "e^inf");
  const auto loop = boundary_construction(loop_g);
  CHECK(loop.atom_ids() == std::vector<std::string>{"e^inf"});
  CHECK(loop.image(0, 0) == 0u);

  const auto edge_g = GraphSpec::from_ids({"u", "v"}, {{"e", "u", "v"}});
  const auto edge = boundary_construction(edge_g);
  CHECK(edge.atom_ids() == std::vector<std::string>{"v", "e"});
  CHECK(edge.image(0, *edge.atom_index("v")) == edge.atom_index("e"));
  CHECK_FALSE(edge.image(0, *edge.atom_index("e")).has_value());

  const auto exit_g = GraphSpec::from_ids({"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}});
  CHECK_THROWS_AS(boundary_paths(exit_g), InfiniteBoundaryError);
  try {
    boundary_construction(exit_g);
    FAIL("expected an infinite boundary");
  } catch (const InfiniteBoundaryError& e) {
    CHECK(std::string(e.what()).find("cycle e has exit edge f") != std::string::npos);
  }

  // Stem into a two-cycle: g.(e.f)^inf plus its rotations.
  const auto lasso = GraphSpec::from_ids({"s", "a", "b"}, {{"g", "s", "a"}, {"e", "a", "b"}, {"f", "b", "a"}});
  const auto ls = boundary_construction(lasso);
  CHECK(ls.atom_ids() == std::vector<std::string>{"(e.f)^inf", "(f.e)^inf", "g.(e.f)^inf"});
  CHECK(ls.image(*ls.label_index("f"), *ls.atom_index("(e.f)^inf")) == ls.atom_index("(f.e)^inf"));
  CHECK(ls.image(*ls.label_index("g"), *ls.atom_index("(e.f)^inf")) == ls.atom_index("g.(e.f)^inf"));
  CHECK_FALSE(decide_k_direct(ls).satisfied);
}

TEST_CASE("boundary size limit") {
  // A chain of diamonds doubles the path count at each stage.
  std::vector<std::string> vs;
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  const int stages = 17;
  for (int i = 0; i <= stages; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < stages; ++i) {
    es.emplace_back("p" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1));
    es.emplace_back("q" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  CHECK_THROWS_AS(boundary_paths(GraphSpec::from_ids(vs, es)), SizeLimitError);
}

TEST_CASE("ultrafilter cycles of the vertex construction are closed paths") {
  Rng rng(501);
  for (int i = 0; i < 120; ++i) {
    const auto g = random_graph(rng, 5, 5);
    const auto spec = vertex_construction(g);
    std::size_t mismatches = 0;
    for_each_word(g.edge_count(), 6, [&](const Word& w) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        mismatches += is_ultrafilter_cycle(spec, w, v) != is_closed_path(g, w, v);
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("graph_condition_k agrees with closed-path enumeration") {
  Rng rng(511);
  for (int i = 0; i < 400; ++i) {
    const auto g = random_graph(rng, 6, 8);
    const bool k = graph_condition_k(g);
    CHECK(k == oracle::graph_k_by_paths(g, 2 * static_cast<int>(g.vertex_count()) + 2));
    CHECK(k == decide_k_direct(vertex_construction(g)).satisfied);
  }
}

TEST_CASE("boundary construction on exit-free graphs") {
  Rng rng(521);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_exit_free_graph(rng, 6);
    const auto paths = boundary_paths(g);
    const auto spec = boundary_construction(g);
    REQUIRE(spec.atom_count() == paths.size());
    std::size_t max_len = 1;
    for (std::size_t words = g.edge_count(); max_len < 6 && words * g.edge_count() <= 4000; ++max_len)
      words *= g.edge_count();
    CHECK(decide_k_direct(spec).satisfied == graph_condition_k(g));
    for (std::size_t x = 0; x < paths.size(); ++x) {
      const auto& p = paths[x];
      if (p.kind == BoundaryPath::Kind::finite_to_singular) {
        const auto end = p.stem.empty() ? p.start_vertex : g.edge(p.stem.back()).range;
        CHECK(g.is_sink(end));
      }
      std::size_t mismatches = 0;
      for_each_word(g.edge_count(), max_len, [&](const Word& w) {
        mismatches += is_ultrafilter_cycle(spec, w, x) != equals_alpha_infinity(p, w);
      });
      CHECK(mismatches == 0);
    }
  }
}
