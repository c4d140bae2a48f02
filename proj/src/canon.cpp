#include "canon.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lmm::detail {

namespace {

struct End {
  int f, w, g;
};

class Canonizer {
 public:
  Canonizer(const ColouredGraph& g, bool autos) : g_(g), autos_(autos), adj_(g.n) {
    for (const auto& e : g.edges) {
      adj_[e[0]].push_back({e[1], e[2], e[3]});
      adj_[e[2]].push_back({e[3], e[0], e[1]});
    }
  }

  CanonResult run() {
    std::vector<std::vector<std::int64_t>> keys = g_.colour;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> ids(g_.n);
    for (int v = 0; v < g_.n; ++v)
      ids[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), g_.colour[v]) - keys.begin());
    refine(ids);
    search(ids);
    CanonResult r;
    r.perm = best_perm_;
    r.code = best_code_;
    if (autos_) {
      std::vector<int> inv(g_.n);
      for (int v = 0; v < g_.n; ++v) inv[best_perm_[v]] = v;
      for (const auto& p : best_leaves_) {
        std::vector<int> a(g_.n);
        for (int v = 0; v < g_.n; ++v) a[v] = inv[p[v]];
        r.automorphisms.push_back(std::move(a));
      }
    }
    return r;
  }

 private:
  void refine(std::vector<int>& ids) const {
    int classes = count(ids);
    for (;;) {
      std::vector<std::pair<std::vector<std::int64_t>, int>> sig(g_.n);
      for (int v = 0; v < g_.n; ++v) {
        std::vector<std::tuple<int, int, int>> nb;
        for (const auto& e : adj_[v]) nb.emplace_back(e.f, e.g, ids[e.w]);
        std::sort(nb.begin(), nb.end());
        auto& s = sig[v].first;
        s.push_back(ids[v]);
        for (auto [f, g, c] : nb) {
          s.push_back(f);
          s.push_back(g);
          s.push_back(c);
        }
        sig[v].second = v;
      }
      std::vector<std::vector<std::int64_t>> keys;
      for (auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (int v = 0; v < g_.n; ++v)
        ids[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
      int now = static_cast<int>(keys.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count(const std::vector<int>& ids) {
    std::vector<int> s = ids;
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void search(const std::vector<int>& ids) {
    if (count(ids) == g_.n) {
      leaf(ids);
      return;
    }
    // first non-singleton cell
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < g_.n; ++v) cells[ids[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, vs] : cells)
      if (vs.size() > 1) {
        target = &vs;
        break;
      }
    for (int v : *target) {
      std::vector<int> next(g_.n);
      for (int u = 0; u < g_.n; ++u) next[u] = 2 * ids[u] + (u == v ? 0 : 1);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<int> inv(g_.n);
    for (int v = 0; v < g_.n; ++v) inv[perm[v]] = v;
    std::vector<std::int64_t> code;
    code.push_back(g_.n);
    for (int i = 0; i < g_.n; ++i) {
      const auto& c = g_.colour[inv[i]];
      code.push_back(static_cast<std::int64_t>(c.size()));
      code.insert(code.end(), c.begin(), c.end());
    }
    std::vector<std::array<int, 4>> es;
    for (const auto& e : g_.edges) {
      std::array<int, 4> m{perm[e[0]], e[1], perm[e[2]], e[3]};
      if (std::pair(m[2], m[3]) < std::pair(m[0], m[1])) m = {m[2], m[3], m[0], m[1]};
      es.push_back(m);
    }
    std::sort(es.begin(), es.end());
    code.push_back(static_cast<std::int64_t>(es.size()));
    for (const auto& e : es) code.insert(code.end(), e.begin(), e.end());
    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_perm_ = perm;
      best_leaves_.clear();
      if (autos_) best_leaves_.push_back(perm);
    } else if (autos_ && code == best_code_) {
      best_leaves_.push_back(perm);
    }
  }

  const ColouredGraph& g_;
  bool autos_;
  std::vector<std::vector<End>> adj_;
  std::vector<std::int64_t> best_code_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> best_leaves_;
};

}  // namespace

CanonResult canonical_form(const ColouredGraph& g, bool want_automorphisms) {
  if (g.n == 0) return {{}, {0, 0}, {{}}};
  return Canonizer(g, want_automorphisms).run();
}

}  // namespace lmm::detail
