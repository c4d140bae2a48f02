#include <doctest.h>

#include "lmm/assemble.hpp"
#include "lmm/loop_oracle.hpp"
#include "lmm/multi_index.hpp"
#include "lmm/properties.hpp"

using namespace lmm;

namespace {

Expression G(Generator g, int e = 1) { return Expression(g, e); }
const PointLabel P("p"), Q("q"), P1("p1"), P2("p2");

}  // namespace

TEST_SUITE("loop-oracle") {
  TEST_CASE("single rules") {
    LoopContext ctx{1, Q};
    CHECK(delta_apply(2, Generator::moment(3, 1), ctx) == -G(Generator::ext_prop(1, 3, Q)));
    CHECK(delta_apply(1, Generator::moment(1, 1), ctx) ==
          Rational(3) * (G(Generator::moment(2, 1)) * G(Generator::moment(1, 1), -1) * G(Generator::ext_prop(1, 0, Q))));
    CHECK(delta_apply(3, Generator::ext_prop(1, 0, P), ctx) ==
          G(Generator::ext_prop(1, 1, P)) * G(Generator::ext_prop(1, 0, Q)) * G(Generator::moment(1, 1), -1));
  }

  TEST_CASE("log and unindexed generators are rejected") {
    LoopContext ctx{1, Q};
    CHECK_THROWS_AS(loop_apply(G(Generator::log_moment(1)), ctx), LogPresent);
    CHECK_THROWS_AS(loop_apply(G(Generator::moment(2)), ctx), Error);
    CHECK_THROWS(loop_apply(G(Generator::ext_prop(1, 0, Q)), ctx));
  }

  TEST_CASE("loop operator on an atom is the sum of its rules") {
    LoopContext ctx{1, Q};
    for (Generator g : {Generator::moment(1, 1), Generator::moment(3, 2), Generator::ext_prop(2, 1, P),
                        Generator::int_prop(1, 2, 0, 1), Generator::int_prop(1, 1, 0, 0)}) {
      Expression sum;
      for (int w = 1; w <= 7; ++w) sum += delta_apply(w, g, ctx);
      CHECK(loop_apply(G(g), ctx) == sum);
    }
  }

  TEST_CASE("Leibniz rule") { CHECK(check_leibniz_loop(7, 200).ok()); }

  TEST_CASE("residue step, distinct branch points") {
    Expression r = residue_step(0, 0, 2, 2, 1, P, 1);
    Expression want = ratio(1, 2) * G(Generator::int_prop(1, 2, 0, 0), 2) * G(Generator::ext_prop(1, 0, P)) *
                      G(Generator::moment(1, 1), -1);
    CHECK(r == want);
  }

  TEST_CASE("residue step, coincident branch points has the extra terms") {
    Expression r = residue_step(0, 0, 1, 1, 1, P, 1);
    Expression first = ratio(1, 2) * G(Generator::int_prop(1, 1, 0, 0), 2) * G(Generator::ext_prop(1, 0, P)) *
                       G(Generator::moment(1, 1), -1);
    CHECK(r != first);
    CHECK(r.size() > first.size());
  }

  TEST_CASE("residue step is linear") {
    Expression a = residue_step(1, 0, 1, 2, 2, P, 1);
    CHECK(ratio(3, 5) * a == ratio(3, 5) * residue_step(1, 0, 1, 2, 2, P, 1));
    CHECK(residue_step(0, 1, 2, 1, 2, P, 1) == a);
  }

  TEST_CASE("seed equals the diagram sum at order one") {
    CouplingTable t;
    CHECK(w1_seed(1) == correlator(1, 1, 1, t));
    CHECK(w1_seed(2) == correlator(1, 1, 2, t));
  }

  TEST_CASE("recursion equals diagram sum at order two") {
    CouplingTable t;
    CHECK(w1_recursion(2, 1) == correlator(1, 2, 1, t));
  }

  TEST_CASE("loop operator lifts W_1^(1) to W_2^(1)") {
    CouplingTable t;
    Expression lifted = substitute_point(loop_apply(w1_seed(1), {1, P2}), P, P1);
    CHECK(lifted == correlator(2, 1, 1, t));
  }

  TEST_CASE("merged two-point function feeds the recursion") {
    auto series = w1_series(3, 1, w1_seed(1));
    CHECK(series.size() == 4);
    CHECK(series[1] == w1_seed(1));
    CHECK(series[2] == w1_recursion(2, 1));
  }

  TEST_CASE("recursion rejects orders below two") { CHECK_THROWS(w1_recursion(1, 1)); }
}
