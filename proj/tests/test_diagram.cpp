#include <doctest.h>

#include <set>

#include "lmm/assemble.hpp"
#include "lmm/diagram.hpp"

using namespace lmm;

namespace {

Diagram tadpole() {
  Diagram d;
  d.vertices = {{0, MultiIndex{3}}};
  d.edges = {InternalEdge({0, 0}, {0, 0})};
  d.legs = {{PointLabel("p"), 0, 0}};
  return d;
}

std::multiset<Rational> weights(const std::vector<Diagram>& catalog) {
  std::multiset<Rational> w;
  for (const auto& d : catalog) w.insert(symmetry_factor(d).value);
  return w;
}

}  // namespace

TEST_SUITE("diagram-engine") {
  TEST_CASE("catalog sizes") {
    CHECK(enumerate_diagrams(1, 1).size() == 3);
    CHECK(enumerate_diagrams(0, 2).size() == 14);
    CHECK(enumerate_diagrams(2, 1).size() == 14);
    CHECK(enumerate_diagrams(3, 0).size() == 1);
    CHECK(enumerate_diagrams(1, 2).size() == 76);
    CHECK(count_diagrams(3, 1) == 106);
    CHECK(count_diagrams(0, 3) == 282);
  }

  TEST_CASE("excluded cases") {
    CHECK(excluded_case(0, 0));
    CHECK(excluded_case(2, 0));
    CHECK(excluded_case(0, 1));
    CHECK_FALSE(excluded_case(3, 0));
    CHECK_THROWS_AS(enumerate_diagrams(0, 1), ExcludedCase);
  }

  TEST_CASE("catalog diagrams are valid") {
    for (auto [k, h] : {std::pair{0, 2}, {2, 1}, {1, 2}, {4, 0}}) {
      std::set<std::vector<std::int64_t>> codes;
      for (const auto& d : enumerate_diagrams(k, h)) {
        CHECK(d.connected());
        CHECK(d.consistent());
        CHECK(d.order() == h);
        for (const auto& v : d.vertices) CHECK(v.admissible());
        CHECK(d.legs.size() == static_cast<std::size_t>(k));
        codes.insert(canonical_code(d));
      }
      CHECK(codes.size() == enumerate_diagrams(k, h).size());
    }
  }

  TEST_CASE("free energy weights") {
    std::multiset<Rational> want;
    for (int i = 0; i < 4; ++i) want.insert(Rational(1));
    for (int i = 0; i < 7; ++i) want.insert(ratio(1, 2));
    want.insert(ratio(1, 8));
    want.insert(ratio(1, 8));
    want.insert(ratio(1, 12));
    CHECK(weights(enumerate_diagrams(0, 2)) == want);
  }

  TEST_CASE("two-point weights") {
    std::multiset<Rational> want;
    for (int i = 0; i < 9; ++i) want.insert(Rational(1));
    for (int i = 0; i < 5; ++i) want.insert(ratio(1, 2));
    CHECK(weights(enumerate_diagrams(2, 1)) == want);
  }

  TEST_CASE("trivalent tadpole") {
    auto s = symmetry_factor(tadpole());
    CHECK(s.pi == 3);
    CHECK(s.c == 1);
    CHECK(s.d == 6);
    CHECK(s.value == ratio(1, 2));
    CHECK(automorphism_count(tadpole()) == 2);
    CHECK(wick_count_bruteforce(tadpole()) == 3);
  }

  TEST_CASE("canonical form is invariant under relabelling") {
    for (const auto& d : enumerate_diagrams(0, 2)) {
      int n = static_cast<int>(d.vertices.size());
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = n - 1 - v;
      Diagram p = permute_vertices(d, perm);
      CHECK(canonical_code(p) == canonical_code(d));
      CHECK(canonicalize(p).edges == canonicalize(d).edges);
    }
  }

  TEST_CASE("streaming and materialized catalogs agree") {
    std::set<std::vector<std::int64_t>> streamed;
    for_each_diagram(1, 2, [&](const Diagram& d) { streamed.insert(canonical_code(d)); });
    std::set<std::vector<std::int64_t>> listed;
    for (const auto& d : enumerate_diagrams(1, 2)) listed.insert(canonical_code(d));
    CHECK(streamed == listed);
  }

  TEST_CASE("Wick and automorphism routes agree with brute-force pairing") {
    for (auto [k, h] : {std::pair{1, 1}, {0, 2}, {2, 1}, {3, 0}, {4, 0}}) {
      for (const auto& d : enumerate_diagrams(k, h)) {
        auto s = symmetry_factor(d);
        CHECK(s.value == automorphism_factor(d));
        CHECK(wick_count_bruteforce(d) == s.pi);
      }
    }
  }

  TEST_CASE("Wick and automorphism routes agree on larger catalogs") {
    for (auto [k, h] : {std::pair{1, 2}, {0, 3}, {3, 1}, {6, 0}}) {
      std::uint64_t bad = 0;
      for_each_diagram(k, h, [&](const Diagram& d) { bad += symmetry_factor(d).value != automorphism_factor(d); });
      CHECK(bad == 0);
    }
  }

  TEST_CASE("DOT rendering") {
    std::string dot = render_dot(tadpole());
    CHECK(dot.find("v0 -- v0 [label=\"0|0\"]") != std::string::npos);
    CHECK(dot.find("label=\"p\"") != std::string::npos);
    CHECK(dot.find("x0 -- v0 [label=\"0\"]") != std::string::npos);
    CHECK(render_dot(tadpole()) == dot);
    auto catalog = enumerate_diagrams(0, 2);
    std::string all = render_catalog_dot(catalog);
    std::size_t clusters = 0;
    for (std::size_t pos = 0; (pos = all.find("subgraph cluster", pos)) != std::string::npos; ++pos) ++clusters;
    CHECK(clusters == 14);
    CHECK(all.find("Pi = 1/12") != std::string::npos);
  }

  TEST_CASE("JSON catalog") {
    std::string json = render_catalog_json(enumerate_diagrams(1, 1));
    CHECK(json.find("\"weight\"") != std::string::npos);
    CHECK(json.find("\"internal_edges\"") != std::string::npos);
  }
}

TEST_SUITE("assembly") {
  TEST_CASE("one-point function at order one") {
    CouplingTable t;
    PointLabel p("p");
    Expression want;
    for (int i = 1; i <= 2; ++i) {
      Expression y1(Generator::moment(1, i), -1), y1sq(Generator::moment(1, i), -2), y2(Generator::moment(2, i));
      Expression b0(Generator::ext_prop(i, 0, p)), b1(Generator::ext_prop(i, 1, p)), bii(Generator::int_prop(i, i, 0, 0));
      want += ratio(-1, 8) * (y2 * y1sq * b0) + ratio(1, 24) * (y1 * b1) + ratio(1, 2) * (y1 * bii * b0);
    }
    CHECK(correlator(1, 1, 1, t) == want);
  }

  TEST_CASE("empty product") {
    CouplingTable t;
    CHECK(assemble_sd(Diagram{}, 1, t) == Expression(1));
  }

  TEST_CASE("worked free-energy term") {
    CouplingTable t;
    Diagram d;
    d.vertices = {{1, MultiIndex{0, 1}}, {0, MultiIndex{3}}};
    d.edges = {InternalEdge({0, 1}, {1, 0}), InternalEdge({1, 0}, {1, 0})};
    std::sort(d.edges.begin(), d.edges.end());
    CHECK(symmetry_factor(d).value == ratio(1, 2));
    Expression sd = assemble_sd(d, 1, t);
    CHECK(sd.size() == 4);
    for (const auto& [m, c] : sd.terms()) CHECK(c == ratio(1, 24));
  }

  TEST_CASE("worked two-point term") {
    CouplingTable t;
    Diagram d;
    d.vertices = {{1, MultiIndex{1, 0, 1}}};
    d.legs = {{PointLabel("p1"), 0, 0}, {PointLabel("p2"), 0, 2}};
    CHECK(symmetry_factor(d).value == 1);
    Expression want;
    for (int i = 1; i <= 2; ++i)
      want += attach_index(t.derived(1, MultiIndex{1, 0, 1}), i) * Expression(Generator::ext_prop(i, 0, PointLabel("p1"))) *
              Expression(Generator::ext_prop(i, 2, PointLabel("p2")));
    CHECK(assemble_sd(d, 1, t) == want);
  }

  TEST_CASE("correlators are deterministic") {
    CouplingTable a, b;
    CHECK(render_text(correlator(2, 1, 1, a)) == render_text(correlator(2, 1, 1, b)));
  }
}
