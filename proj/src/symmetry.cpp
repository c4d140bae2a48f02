#include <algorithm>
#include <json.hpp>
#include <map>
#include <sstream>

#include "lmm/diagram.hpp"

namespace lmm {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Edge multiplicities keyed by slot pair, used by the Wick route.
using SlotPair = std::pair<HalfEdge, HalfEdge>;

std::map<SlotPair, int> edge_classes(const Diagram& d) {
  std::map<SlotPair, int> m;
  for (const auto& e : d.edges) ++m[{e.a, e.b}];
  return m;
}

// Vertex relabellings within classes of identical structure that leave the
// slot-level graph (edges between (vertex, order) slots and labelled legs)
// unchanged.
std::uint64_t slot_graph_stabilizer(const Diagram& d) {
  int n = static_cast<int>(d.vertices.size());
  auto classes = edge_classes(d);
  std::vector<std::vector<std::pair<int, int>>> legs(n);  // (leg, order)
  for (std::size_t l = 0; l < d.legs.size(); ++l) legs[d.legs[l].vertex].emplace_back(static_cast<int>(l), d.legs[l].order);
  for (auto& v : legs) std::sort(v.begin(), v.end());
  auto mult = [&](HalfEdge x, HalfEdge y) {
    auto it = classes.find({std::min(x, y), std::max(x, y)});
    return it == classes.end() ? 0 : it->second;
  };
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || !(d.vertices[w] == d.vertices[v]) || legs[w] != legs[v]) continue;
      img[v] = w;
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        int iu = u == v ? w : img[u];
        int top_v = d.vertices[v].alpha.length(), top_u = d.vertices[u].alpha.length();
        for (int f = 0; f < top_v && ok; ++f)
          for (int g = 0; g < top_u && ok; ++g)
            ok = mult({v, f}, {u, g}) == mult({w, f}, {iu, g});
      }
      if (!ok) continue;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
    img[v] = -1;
  };
  rec(rec, 0);
  return count;
}

}  // namespace

SymFactor symmetry_factor(const Diagram& d) {
  SymFactor s;
  std::map<VertexStructure, unsigned long> m;
  for (const auto& v : d.vertices) ++m[v];
  s.c = 1;
  for (const auto& [mu, cnt] : m) s.c *= factorial(cnt);
  s.d = 1;
  for (const auto& v : d.vertices)
    for (int a : v.alpha.entries()) s.d *= factorial(static_cast<unsigned long>(a));
  // distinct vertex-level images times field assignments per image
  mpz_class images = s.c / mpz_class(static_cast<unsigned long>(slot_graph_stabilizer(d)));
  mpz_class overcount = 1;
  for (const auto& [pair, cnt] : edge_classes(d)) {
    overcount *= factorial(static_cast<unsigned long>(cnt));
    if (pair.first == pair.second) overcount <<= cnt;
  }
  s.pi = images * s.d / overcount;
  s.value = Rational(s.pi) / Rational(s.c * s.d);
  s.value.canonicalize();
  return s;
}

std::uint64_t automorphism_count(const Diagram& d) {
  // half-edges: vertex, order, partner (>= 0 half-edge, < 0 leg -1-l)
  struct HE {
    int vertex, order, partner;
  };
  std::vector<HE> he;
  std::vector<std::vector<int>> at(d.vertices.size());
  auto add = [&](int v, int o) {
    he.push_back({v, o, 0});
    at[v].push_back(static_cast<int>(he.size()) - 1);
    return static_cast<int>(he.size()) - 1;
  };
  for (const auto& e : d.edges) {
    int x = add(e.a.vertex, e.a.order), y = add(e.b.vertex, e.b.order);
    he[x].partner = y;
    he[y].partner = x;
  }
  int root = -1;
  for (std::size_t l = 0; l < d.legs.size(); ++l) {
    int x = add(d.legs[l].vertex, d.legs[l].order);
    he[x].partner = -1 - static_cast<int>(l);
    if (l == 0) root = x;
  }
  int nh = static_cast<int>(he.size());
  int nv = static_cast<int>(d.vertices.size());
  if (nh == 0) return 1;

  // state layout: phi[nh], inv[nh], vmap[nv], vinv[nv]
  using State = std::vector<int>;
  const int PHI = 0, INV = nh, VMAP = 2 * nh, VINV = 2 * nh + nv;
  std::vector<int> queue;
  auto assign = [&](State& s, int x, int y) {
    if (s[PHI + x] >= 0) return s[PHI + x] == y;
    if (s[INV + y] >= 0) return false;
    const HE &a = he[x], &b = he[y];
    if (a.order != b.order || !(d.vertices[a.vertex] == d.vertices[b.vertex])) return false;
    if (s[VMAP + a.vertex] < 0) {
      if (s[VINV + b.vertex] >= 0) return false;
      s[VMAP + a.vertex] = b.vertex;
      s[VINV + b.vertex] = a.vertex;
    } else if (s[VMAP + a.vertex] != b.vertex) {
      return false;
    }
    if ((a.partner < 0 || b.partner < 0) && a.partner != b.partner) return false;
    s[PHI + x] = y;
    s[INV + y] = x;
    queue.push_back(x);
    return true;
  };
  auto propagate = [&](State& s) {
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      if (he[x].partner < 0) continue;
      int z = he[x].partner, w = he[s[PHI + x]].partner;
      if (w < 0 || !assign(s, z, w)) {
        queue.clear();
        return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, State& s) -> std::uint64_t {
    if (!propagate(s)) return 0;
    int x = -1;
    for (int i = 0; i < nh && x < 0; ++i)
      if (s[PHI + i] < 0 && s[VMAP + he[i].vertex] >= 0) x = i;
    if (x < 0) {
      for (int i = 0; i < nh && x < 0; ++i)
        if (s[PHI + i] < 0) x = i;
      if (x < 0) return 1;
    }
    const bool free_vertex = s[VMAP + he[x].vertex] < 0;
    std::uint64_t total = 0;
    State t;
    auto try_target = [&](int y) {
      t = s;
      if (assign(t, x, y)) total += self(self, t);
      else queue.clear();
    };
    if (free_vertex) {
      for (int y = 0; y < nh; ++y) try_target(y);
    } else {
      for (int y : at[s[VMAP + he[x].vertex]]) try_target(y);
    }
    return total;
  };
  State s(2 * nh + 2 * nv, -1);
  if (root >= 0) {
    // the half-edge of the first leg can only map to itself
    if (!assign(s, root, root)) return 0;
  }
  return rec(rec, s);
}

Rational automorphism_factor(const Diagram& d) { return Rational(1, automorphism_count(d)); }

mpz_class wick_count_bruteforce(const Diagram& d) {
  // fields: one entry per half-edge copy of each vertex, then the external points
  struct Field {
    int vertex, order, leg;
  };
  std::vector<Field> fields;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
    for (int o = 0; o < d.vertices[v].alpha.length(); ++o)
      for (int c = 0; c < d.vertices[v].alpha[o]; ++c) fields.push_back({v, o, -1});
  int nf = static_cast<int>(fields.size());
  for (std::size_t l = 0; l < d.legs.size(); ++l) fields.push_back({-1, 0, static_cast<int>(l)});
  int n = static_cast<int>(fields.size());
  if (n % 2) return 0;
  auto target = canonical_code(d);
  std::vector<int> mate(n, -1);
  mpz_class count = 0;
  auto rec = [&](auto&& self) -> void {
    int x = 0;
    while (x < n && mate[x] >= 0) ++x;
    if (x == n) {
      Diagram g;
      g.vertices = d.vertices;
      g.legs.resize(d.legs.size());
      for (int a = 0; a < n; ++a) {
        int b = mate[a];
        if (a >= nf && b >= nf) return;  // two external points paired
        if (a >= nf) {
          g.legs[fields[a].leg] = {d.legs[fields[a].leg].point, fields[b].vertex, fields[b].order};
        } else if (b >= nf) {
          continue;
        } else if (a < b) {
          g.edges.emplace_back(HalfEdge{fields[a].vertex, fields[a].order}, HalfEdge{fields[b].vertex, fields[b].order});
        }
      }
      std::sort(g.edges.begin(), g.edges.end());
      if (g.connected() && canonical_code(g) == target) ++count;
      return;
    }
    for (int y = x + 1; y < n; ++y) {
      if (mate[y] >= 0) continue;
      mate[x] = y;
      mate[y] = x;
      self(self);
      mate[x] = mate[y] = -1;
    }
  };
  rec(rec);
  return count;
}

std::string render_dot(const Diagram& d, const Rational& weight, const std::string& name) {
  std::ostringstream os;
  bool cluster = name.rfind("cluster", 0) == 0;
  std::string pre = cluster ? name + "_" : "";
  os << (cluster ? "  subgraph " : "graph ") << name << " {\n";
  if (cluster) os << "    label=\"Pi = " << weight.get_str() << "\";\n";
  std::string ind = cluster ? "    " : "  ";
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    os << ind << pre << "v" << v << " [shape=circle, label=\"h=" << d.vertices[v].h << "\"];\n";
  for (const auto& e : d.edges)
    os << ind << pre << "v" << e.a.vertex << " -- " << pre << "v" << e.b.vertex << " [label=\"" << e.a.order << "|"
       << e.b.order << "\"];\n";
  for (std::size_t l = 0; l < d.legs.size(); ++l) {
    const auto& leg = d.legs[l];
    os << ind << pre << "x" << l << " [shape=box, label=\"" << leg.point.name() << "\"];\n";
    os << ind << pre << "x" << l << " -- " << pre << "v" << leg.vertex << " [label=\"" << leg.order << "\"];\n";
  }
  os << (cluster ? "  }\n" : "}\n");
  return os.str();
}

std::string render_dot(const Diagram& d) { return render_dot(d, symmetry_factor(d).value, "D"); }

std::string render_catalog_dot(const std::vector<Diagram>& catalog) {
  std::string out = "graph catalog {\n";
  for (std::size_t i = 0; i < catalog.size(); ++i)
    out += render_dot(catalog[i], symmetry_factor(catalog[i]).value, "cluster" + std::to_string(i));
  return out + "}\n";
}

std::string render_catalog_json(const std::vector<Diagram>& catalog) {
  using nlohmann::json;
  json arr = json::array();
  for (const auto& d : catalog) {
    json vs = json::array(), es = json::array(), ex = json::array();
    for (const auto& v : d.vertices) vs.push_back({{"h", v.h}, {"alpha", v.alpha.entries()}});
    for (const auto& e : d.edges) es.push_back({{e.a.vertex, e.a.order}, {e.b.vertex, e.b.order}});
    for (const auto& l : d.legs) ex.push_back({{"p", l.point.name()}, {"v", l.vertex}, {"m", l.order}});
    auto s = symmetry_factor(d);
    arr.push_back({{"vertices", vs},
                   {"internal_edges", es},
                   {"external", ex},
                   {"pi", s.pi.get_ui()},
                   {"c", s.c.get_ui()},
                   {"d", s.d.get_ui()},
                   {"weight", s.value.get_str()}});
  }
  return arr.dump(1);
}

}  // namespace lmm
