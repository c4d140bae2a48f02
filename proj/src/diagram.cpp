#include "lmm/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "canon.hpp"

namespace lmm {

bool VertexStructure::admissible() const {
  if (h < 0 || !in_mset(alpha, h)) return false;
  if (h == 0) return legs() >= 3;
  if (h == 1) return legs() >= 1;
  return true;
}

std::string VertexStructure::str() const { return "(" + std::to_string(h) + "," + alpha.str() + ")"; }

int Diagram::order() const {
  int s = loops();
  for (const auto& v : vertices) s += v.h;
  return s;
}

bool Diagram::connected() const {
  int n = static_cast<int>(vertices.size());
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const auto& e : edges) {
    int a = find(e.a.vertex), b = find(e.b.vertex);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

bool Diagram::consistent() const {
  std::vector<std::vector<int>> used(vertices.size());
  auto bump = [&](int v, int o) {
    if (v < 0 || v >= static_cast<int>(vertices.size()) || o < 0) return false;
    if (static_cast<int>(used[v].size()) <= o) used[v].resize(o + 1, 0);
    ++used[v][o];
    return true;
  };
  for (const auto& e : edges)
    if (!bump(e.a.vertex, e.a.order) || !bump(e.b.vertex, e.b.order)) return false;
  for (const auto& l : legs)
    if (!bump(l.vertex, l.order)) return false;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (MultiIndex(used[v]) != vertices[v].alpha) return false;
  return true;
}

std::vector<PointLabel> default_labels(int k) {
  if (k == 1) return {PointLabel("p")};
  std::vector<PointLabel> out;
  for (int i = 1; i <= k; ++i) out.emplace_back("p" + std::to_string(i));
  return out;
}

bool excluded_case(int k, int h) {
  return (h == 0 && k <= 2) || (h == 1 && k == 0);
}

namespace {

std::vector<std::int64_t> structure_key(const VertexStructure& s) {
  std::vector<std::int64_t> key{s.h, s.alpha.length()};
  for (int a : s.alpha.entries()) key.push_back(a);
  return key;
}

// A diagram whose legs are not yet labelled: leg counts per (vertex, order).
struct Shape {
  std::vector<VertexStructure> vertices;
  std::vector<InternalEdge> edges;
  std::vector<std::vector<int>> leg_counts;  // [vertex][order]
  std::vector<std::vector<int>> automorphisms;
};

detail::ColouredGraph shape_graph(const Shape& s) {
  detail::ColouredGraph g;
  g.n = static_cast<int>(s.vertices.size());
  for (int v = 0; v < g.n; ++v) {
    auto key = structure_key(s.vertices[v]);
    key.push_back(-1);
    for (int c : s.leg_counts[v]) key.push_back(c);
    g.colour.push_back(std::move(key));
  }
  for (const auto& e : s.edges) g.edges.push_back({e.a.vertex, e.a.order, e.b.vertex, e.b.order});
  return g;
}

detail::ColouredGraph diagram_graph(const Diagram& d) {
  detail::ColouredGraph g;
  g.n = static_cast<int>(d.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> legs(g.n);
  for (std::size_t l = 0; l < d.legs.size(); ++l)
    legs[d.legs[l].vertex].emplace_back(static_cast<int>(l), d.legs[l].order);
  for (int v = 0; v < g.n; ++v) {
    auto key = structure_key(d.vertices[v]);
    key.push_back(-1);
    std::sort(legs[v].begin(), legs[v].end());
    for (auto [l, o] : legs[v]) {
      key.push_back(l);
      key.push_back(o);
    }
    g.colour.push_back(std::move(key));
  }
  for (const auto& e : d.edges) g.edges.push_back({e.a.vertex, e.a.order, e.b.vertex, e.b.order});
  return g;
}

class ShapeEnumerator {
 public:
  ShapeEnumerator(int k, int h) : k_(k), h_(h), budget_(2 * h - 2 + k) {}

  std::vector<Shape> run() {
    if (budget_ < 1) return {};
    for (int hj = 0; hj <= h_; ++hj)
      for (int kj = 0; kj - 2 + 2 * hj <= budget_; ++kj)
        for (const auto& a : enumerate_mset(kj, hj)) {
          VertexStructure s{hj, a};
          if (s.admissible() && kj - 2 + 2 * hj >= 1) types_.push_back(s);
        }
    std::sort(types_.begin(), types_.end());
    std::vector<int> chosen;
    choose(0, budget_, 0, chosen);
    std::vector<Shape> out;
    for (auto& [code, s] : shapes_) out.push_back(std::move(s));
    return out;
  }

 private:
  void choose(std::size_t first, int left, int hsum, std::vector<int>& chosen) {
    if (left == 0) {
      build(chosen);
      return;
    }
    for (std::size_t t = first; t < types_.size(); ++t) {
      const auto& s = types_[t];
      int c = s.legs() - 2 + 2 * s.h;
      if (c > left || hsum + s.h > h_) continue;
      chosen.push_back(static_cast<int>(t));
      choose(t, left - c, hsum + s.h, chosen);
      chosen.pop_back();
    }
  }

  void build(const std::vector<int>& chosen) {
    int nv = static_cast<int>(chosen.size());
    int half = 0;
    for (int t : chosen) half += types_[t].legs();
    if (half < k_ || (half - k_) % 2) return;
    int ne = (half - k_) / 2;
    if (ne < nv - 1) return;
    for (int t : chosen)
      if (types_[t].legs() == 0 && nv > 1) return;
    verts_.clear();
    for (int t : chosen) verts_.push_back(types_[t]);
    legs_.assign(nv, {});
    distribute(0, k_);
  }

  // Leg counts per vertex; identical neighbouring vertices get
  // lexicographically non-increasing count vectors.
  void distribute(int v, int left) {
    int nv = static_cast<int>(verts_.size());
    if (v == nv) {
      if (left == 0) pair_start();
      return;
    }
    const auto& a = verts_[v].alpha;
    std::vector<int> cur(a.length(), 0);
    bool same_prev = v > 0 && verts_[v - 1] == verts_[v];
    auto rec = [&](auto&& self, int o, int rem) -> void {
      if (o == a.length()) {
        if (same_prev && cur > legs_[v - 1]) return;
        legs_[v] = cur;
        distribute(v + 1, rem);
        return;
      }
      for (int c = 0; c <= std::min(a[o], rem); ++c) {
        cur[o] = c;
        self(self, o + 1, rem - c);
      }
      cur[o] = 0;
    };
    rec(rec, 0, left);
  }

  void pair_start() {
    slots_.clear();
    cap_.clear();
    for (int v = 0; v < static_cast<int>(verts_.size()); ++v)
      for (int o = 0; o < verts_[v].alpha.length(); ++o) {
        int r = verts_[v].alpha[o] - legs_[v][o];
        if (r > 0) {
          slots_.push_back({v, o});
          cap_.push_back(r);
        }
      }
    edges_.clear();
    pair(0, 0);
  }

  void pair(std::size_t from, std::size_t min_partner) {
    while (from < slots_.size() && cap_[from] == 0) {
      ++from;
      min_partner = from;
    }
    if (from == slots_.size()) {
      emit();
      return;
    }
    min_partner = std::max(min_partner, from);
    --cap_[from];
    for (std::size_t t = min_partner; t < slots_.size(); ++t) {
      if (cap_[t] == 0) continue;
      --cap_[t];
      edges_.emplace_back(slots_[from], slots_[t]);
      pair(from, t);
      edges_.pop_back();
      ++cap_[t];
    }
    ++cap_[from];
  }

  void emit() {
    Shape s;
    s.vertices = verts_;
    s.edges = edges_;
    std::sort(s.edges.begin(), s.edges.end());
    s.leg_counts = legs_;
    Diagram probe{s.vertices, s.edges, {}};
    if (!probe.connected()) return;
    auto canon = detail::canonical_form(shape_graph(s), false);
    if (shapes_.count(canon.code)) return;
    // store in canonical numbering with its automorphism group
    std::vector<int> inv(s.vertices.size());
    for (std::size_t v = 0; v < inv.size(); ++v) inv[canon.perm[v]] = static_cast<int>(v);
    Shape c;
    for (int i : inv) {
      c.vertices.push_back(s.vertices[i]);
      c.leg_counts.push_back(s.leg_counts[i]);
    }
    for (const auto& e : s.edges)
      c.edges.emplace_back(HalfEdge{canon.perm[e.a.vertex], e.a.order}, HalfEdge{canon.perm[e.b.vertex], e.b.order});
    std::sort(c.edges.begin(), c.edges.end());
    c.automorphisms = detail::canonical_form(shape_graph(c), true).automorphisms;
    shapes_.emplace(std::move(canon.code), std::move(c));
  }

  int k_, h_, budget_;
  std::vector<VertexStructure> types_;
  std::vector<VertexStructure> verts_;
  std::vector<std::vector<int>> legs_;
  std::vector<HalfEdge> slots_;
  std::vector<int> cap_;
  std::vector<InternalEdge> edges_;
  std::map<std::vector<std::int64_t>, Shape> shapes_;
};

// Labelled diagrams of one shape: leg-label assignments that are minimal in
// their orbit under the shape's vertex automorphisms.
void expand_shape(const Shape& s, const std::vector<PointLabel>& labels,
                  const std::function<void(const Diagram&)>& fn) {
  int k = static_cast<int>(labels.size());
  std::vector<HalfEdge> slots;
  std::vector<int> cap;
  std::map<HalfEdge, int> slot_index;
  for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v)
    for (int o = 0; o < static_cast<int>(s.leg_counts[v].size()); ++o)
      if (s.leg_counts[v][o] > 0) {
        slot_index[{v, o}] = static_cast<int>(slots.size());
        slots.push_back({v, o});
        cap.push_back(s.leg_counts[v][o]);
      }
  std::vector<std::vector<int>> maps;  // slot maps of non-identity automorphisms
  for (const auto& a : s.automorphisms) {
    bool identity = true;
    for (std::size_t v = 0; v < a.size(); ++v) identity &= a[v] == static_cast<int>(v);
    if (identity) continue;
    std::vector<int> m(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) m[i] = slot_index.at({a[slots[i].vertex], slots[i].order});
    maps.push_back(std::move(m));
  }
  // alive[j]: automorphism j maps the current prefix onto itself so far
  std::vector<int> assign(k);
  Diagram d;
  d.vertices = s.vertices;
  d.edges = s.edges;
  d.legs.resize(k);
  auto rec = [&](auto&& self, int l, std::vector<char>& tied) -> void {
    if (l == k) {
      for (int i = 0; i < k; ++i) d.legs[i] = {labels[i], slots[assign[i]].vertex, slots[assign[i]].order};
      fn(d);
      return;
    }
    for (std::size_t t = 0; t < slots.size(); ++t) {
      if (cap[t] == 0) continue;
      assign[l] = static_cast<int>(t);
      std::vector<char> next = tied;
      bool ok = true;
      for (std::size_t j = 0; j < maps.size() && ok; ++j) {
        if (!next[j]) continue;
        int img = maps[j][t];
        if (img < static_cast<int>(t)) ok = false;
        else if (img > static_cast<int>(t)) next[j] = 0;
      }
      if (!ok) continue;
      --cap[t];
      self(self, l + 1, next);
      ++cap[t];
    }
  };
  std::vector<char> tied(maps.size(), 1);
  rec(rec, 0, tied);
}

}  // namespace

void for_each_diagram_labelled(int k, int h, const std::vector<PointLabel>& labels,
                               const std::function<void(const Diagram&)>& fn) {
  if (excluded_case(k, h)) throw ExcludedCase(k, h);
  if (k < 0 || h < 0) throw std::invalid_argument("k and h must be non-negative");
  for (const auto& s : ShapeEnumerator(k, h).run()) expand_shape(s, labels, fn);
}

void for_each_diagram(int k, int h, const std::function<void(const Diagram&)>& fn) {
  for_each_diagram_labelled(k, h, default_labels(k), fn);
}

std::uint64_t count_diagrams(int k, int h) {
  std::uint64_t n = 0;
  for_each_diagram(k, h, [&](const Diagram&) { ++n; });
  return n;
}

std::vector<Diagram> enumerate_diagrams(int k, int h, const std::vector<PointLabel>& labels) {
  if (static_cast<int>(labels.size()) != k) throw std::invalid_argument("need one label per leg");
  std::vector<std::pair<std::vector<std::int64_t>, Diagram>> all;
  for_each_diagram_labelled(k, h, labels, [&](const Diagram& d) {
    Diagram c = canonicalize(d);
    auto code = canonical_code(c);
    all.emplace_back(std::move(code), std::move(c));
  });
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    auto ka = std::pair(a.second.vertices.size(), a.second.edges.size());
    auto kb = std::pair(b.second.vertices.size(), b.second.edges.size());
    if (ka != kb) return ka < kb;
    return a.first < b.first;
  });
  std::vector<Diagram> out;
  for (auto& [c, d] : all) out.push_back(std::move(d));
  return out;
}

std::vector<Diagram> enumerate_diagrams(int k, int h) { return enumerate_diagrams(k, h, default_labels(k)); }

std::vector<std::int64_t> canonical_code(const Diagram& d) {
  return detail::canonical_form(diagram_graph(d), false).code;
}

Diagram permute_vertices(const Diagram& d, const std::vector<int>& perm) {
  Diagram out;
  out.vertices.resize(d.vertices.size());
  for (std::size_t v = 0; v < d.vertices.size(); ++v) out.vertices[perm[v]] = d.vertices[v];
  for (const auto& e : d.edges)
    out.edges.emplace_back(HalfEdge{perm[e.a.vertex], e.a.order}, HalfEdge{perm[e.b.vertex], e.b.order});
  std::sort(out.edges.begin(), out.edges.end());
  for (const auto& l : d.legs) out.legs.push_back({l.point, perm[l.vertex], l.order});
  return out;
}

Diagram canonicalize(const Diagram& d) {
  return permute_vertices(d, detail::canonical_form(diagram_graph(d), false).perm);
}

}  // namespace lmm
