#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lmm/multi_index.hpp"

namespace lmm {

// mu = (h, alpha): topological index and line counts by derivative order.
struct VertexStructure {
  int h = 0;
  MultiIndex alpha;
  int legs() const { return alpha.total(); }
  bool admissible() const;
  std::string str() const;
  friend bool operator==(const VertexStructure&, const VertexStructure&) = default;
  friend auto operator<=>(const VertexStructure&, const VertexStructure&) = default;
};

struct HalfEdge {
  int vertex = 0;
  int order = 0;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Unordered pair of half-edges, stored with a <= b.
struct InternalEdge {
  HalfEdge a, b;
  InternalEdge() = default;
  InternalEdge(HalfEdge x, HalfEdge y) : a(std::min(x, y)), b(std::max(x, y)) {}
  bool self_loop() const { return a.vertex == b.vertex; }
  friend bool operator==(const InternalEdge&, const InternalEdge&) = default;
  friend auto operator<=>(const InternalEdge&, const InternalEdge&) = default;
};

struct ExternalLeg {
  PointLabel point;
  int vertex = 0;
  int order = 0;
  friend bool operator==(const ExternalLeg&, const ExternalLeg&) = default;
};

struct Diagram {
  std::vector<VertexStructure> vertices;
  std::vector<InternalEdge> edges;  // sorted
  std::vector<ExternalLeg> legs;    // in point order

  int loops() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1; }
  // l + sum_j h_j
  int order() const;
  bool connected() const;
  // Half-edge multiset at every vertex equals its alpha.
  bool consistent() const;
};

// p for a single leg, p1..pk otherwise.
std::vector<PointLabel> default_labels(int k);
bool excluded_case(int k, int h);

// Isomorphism classes of admissible connected diagrams with k labelled legs
// and l + sum h_j = h, in canonical vertex numbering and deterministic order.
std::vector<Diagram> enumerate_diagrams(int k, int h);
std::vector<Diagram> enumerate_diagrams(int k, int h, const std::vector<PointLabel>& labels);

// Streams the same catalog without materializing it; the order differs from
// enumerate_diagrams and vertices are not canonically numbered.
void for_each_diagram(int k, int h, const std::function<void(const Diagram&)>& fn);
std::uint64_t count_diagrams(int k, int h);

// Isomorphism invariant code; equal codes iff isomorphic diagrams.
std::vector<std::int64_t> canonical_code(const Diagram& d);
Diagram canonicalize(const Diagram& d);
// Same diagram with vertices renumbered by perm (old -> new).
Diagram permute_vertices(const Diagram& d, const std::vector<int>& perm);

// Pi_D = pi_D / (c_D d_D)
struct SymFactor {
  mpz_class pi, c, d;
  Rational value;
};

// Wick route: counts distinct pairings of the field product realizing d.
SymFactor symmetry_factor(const Diagram& d);
// Automorphism route: order of the half-edge automorphism group.
std::uint64_t automorphism_count(const Diagram& d);
Rational automorphism_factor(const Diagram& d);
// Exhaustive pairing enumeration; only for diagrams with few half-edges.
mpz_class wick_count_bruteforce(const Diagram& d);

std::string render_dot(const Diagram& d);
std::string render_dot(const Diagram& d, const Rational& weight, const std::string& name);
std::string render_catalog_dot(const std::vector<Diagram>& catalog);
std::string render_catalog_json(const std::vector<Diagram>& catalog);

}  // namespace lmm
