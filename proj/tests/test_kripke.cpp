#include <doctest.h>

#include <random>

#include "kripke/catalog.hpp"
#include "kripke/model.hpp"
#include "oracles.hpp"

using namespace kripke;

namespace {

Model lambda_model() {
  return build_model({{"a", "b", "c"}, {{"a", "b"}, {"c", "b"}}}, {{{"p", {"a", "b"}}, {"q", {"b", "c"}}}});
}

Model random_model(std::mt19937_64& rng, std::size_t max_index, const std::vector<std::string>& names) {
  const Frame frame = frame_at(std::uniform_int_distribution<std::size_t>(0, max_index)(rng));
  const auto ups = all_upsets(frame);
  std::map<std::string, WorldMask> val;
  for (const auto& a : names) val[a] = ups[std::uniform_int_distribution<std::size_t>(0, ups.size() - 1)(rng)];
  return Model(frame, val);
}

}  // namespace

TEST_CASE("build_model closes the order and validates input") {
  const Model m = lambda_model();
  CHECK(m.frame().leq(0, 1));
  CHECK(m.frame().leq(2, 1));
  CHECK_FALSE(m.frame().leq(0, 2));
  CHECK_THROWS_AS(build_model({{"a", "b"}, {{"a", "b"}, {"b", "a"}}}, {}), FrameError);
  CHECK_THROWS_AS(build_model({{"a", "b"}, {{"a", "b"}}}, {{{"p", {"a"}}}}), ModelError);
  CHECK_THROWS_AS(build_model({{"a", "b"}, {{"a", "z"}}}, {}), ModelError);
  CHECK_THROWS_AS(build_model({{"a", "b"}, {}}, {{{"p", {"z"}}}}), ModelError);
  const Model closed = build_model({{"a", "b"}, {{"a", "b"}}}, {{{"p", {"a"}}}}, true);
  CHECK(closed.atom_set("p").bits() == 0b11);

  const Model chain3 = build_model({{"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}}, {});
  CHECK(chain3.frame().leq(0, 2));
}

TEST_CASE("forcing on the lambda-frame model") {
  const Model m = lambda_model();
  const Formula pq = parse("p & q");
  CHECK(forces(m, "b", pq));
  CHECK_FALSE(forces(m, "a", pq));
  CHECK_FALSE(forces(m, "c", pq));
  for (const auto& w : {"a", "b", "c"}) CHECK(forces(m, w, Formula::top()));
  CHECK_THROWS_AS(forces(m, "z", pq), ModelError);
  CHECK_THROWS_AS(forces(m, std::size_t{7}, pq), ModelError);
}

TEST_CASE("truth sets on the fixture models") {
  const Model imp = load_model(oracle::data_path("models/lambda_frame_imp.model"));
  const Formula pq = parse("p -> q");
  CHECK_FALSE(forces(imp, "a", pq));
  CHECK(forces(imp, "b", pq));
  CHECK(forces(imp, "c", pq));
  CHECK(format_worlds(imp.frame(), truth_set(imp, pq).bits()) == "b c");

  const Model v = load_model(oracle::data_path("models/v_frame.model"));
  CHECK(format_worlds(v.frame(), truth_set(v, parse("p | q")).bits()) == "b c");
  CHECK(truth_set(v, Formula::top()).bits() == v.frame().all());
}

TEST_CASE("connectedness") {
  CHECK(is_connected(lambda_model().frame()));
  CHECK_FALSE(is_connected(load_model(oracle::data_path("models/v_frame.model")).frame()));
  CHECK(is_connected(load_model(oracle::data_path("models/two_chains.model")).frame()));
}

TEST_CASE("model text round trip") {
  const Model m = lambda_model();
  const Model back = parse_model(render_model(m));
  CHECK(back.frame() == m.frame());
  CHECK(back.valuation() == m.valuation());
  const Model empty_atom = parse_model("worlds a b\norder a b\natom p\n");
  CHECK(empty_atom.atom_set("p").bits() == 0);
  CHECK(parse_model(render_model(empty_atom)).valuation() == empty_atom.valuation());
  CHECK_THROWS_AS(parse_model("worlds a\nbogus a\n"), ModelError);
  CHECK_THROWS_AS(parse_model("worlds a b\norder a b\natom p a\n"), ModelError);
  CHECK(parse_model("worlds a b\norder a b\natom p a\n", true).atom_set("p").bits() == 0b11);
}

TEST_CASE("persistency, negation partial converse, one-world agreement") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> names{"p", "q", "r"};
  for (int t = 0; t < 300; ++t) {
    const Model m = random_model(rng, 9 + 40, names);
    const Formula f = random_formula(rng, names, 4);
    const WorldMask set = truth_set(m, f).bits();
    CHECK(m.frame().is_upset(set));
    for (std::size_t k = 0; k < m.frame().size(); ++k) {
      for (std::size_t k2 = 0; k2 < m.frame().size(); ++k2) {
        if (!m.frame().leq(k, k2)) continue;
        if (forces(m, k, f)) CHECK(forces(m, k2, f));
        if (forces(m, k2, Formula::neg(f))) CHECK_FALSE(forces(m, k, f));
      }
    }
  }
  for (int t = 0; t < 300; ++t) {
    const Model m = random_model(rng, 0, names);
    const Formula f = random_formula(rng, names, 5);
    std::map<std::string, bool> v;
    for (const auto& a : names) v[a] = m.atom_set(a).bits() != 0;
    CHECK(forces(m, std::size_t{0}, f) == oracle::classical(f, v));
  }
}
