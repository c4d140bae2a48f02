#include "lmm/multi_index.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lmm {

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e)) {
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

MultiIndex MultiIndex::unit(int j) {
  std::vector<int> e(j + 1, 0);
  e[j] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total() const {
  int s = 0;
  for (int v : e_) s += v;
  return s;
}

int MultiIndex::weight() const {
  int s = 0;
  for (int j = 0; j < length(); ++j) s += j * e_[j];
  return s;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int j = 0; j < length(); ++j) s += (j ? "," : "") + std::to_string(e_[j]);
  return s + ")";
}

std::vector<MultiIndex> enumerate_mset(int k, int h) {
  int top = k + 3 * h - 3;
  std::vector<MultiIndex> out;
  if (top < 0 || k < 0) return out;
  std::vector<int> cur(top + 1, 0);
  auto rec = [&](auto&& self, int j, int rem, int wsum) -> void {
    if (j > top) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    for (int a = 0; a <= rem && wsum + j * a <= top; ++a) {
      cur[j] = a;
      self(self, j + 1, rem - a, wsum + j * a);
    }
    cur[j] = 0;
  };
  rec(rec, 0, k, 0);
  return out;
}

bool in_mset(const MultiIndex& a, int h) { return a.weight() <= a.total() + 3 * h - 3; }

std::vector<std::vector<std::uint64_t>> partition_table(int max_m, int max_r) {
  // coefficients of prod_{n=1}^{max_m} 1/(1 - x q^n), truncated
  std::vector<std::vector<std::uint64_t>> p(max_m + 1, std::vector<std::uint64_t>(max_r + 1, 0));
  p[0][0] = 1;
  for (int n = 1; n <= max_m; ++n)
    for (int m = n; m <= max_m; ++m)
      for (int r = 1; r <= max_r; ++r) p[m][r] += p[m - n][r - 1];
  return p;
}

std::uint64_t count_terms(int k, int h) {
  int top = k + 3 * h - 3;
  if (top < 0 || k < 0) return 0;
  auto p = partition_table(top, k);
  std::uint64_t n = 0;
  for (int m = 0; m <= top; ++m)
    for (int r = 0; r <= k; ++r) n += p[m][r];
  return n;
}

namespace {

std::vector<std::map<int, int>> partitions(int n) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      ++cur[p];
      self(self, rem - p, p);
      if (--cur[p] == 0) cur.erase(p);
    }
  };
  rec(rec, n, n);
  return out;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

Expression z_poly(int n, int cut) {
  if (n < 0) return {};
  static std::mutex mu;
  static std::map<std::pair<int, int>, Expression> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, cut});
    if (it != cache.end()) return it->second;
  }
  Expression z;
  for (const auto& parts : partitions(n)) {
    int k = 0;
    for (auto [l, kl] : parts) k += kl;
    Rational c(factorial(k));
    for (auto [l, kl] : parts) c /= factorial(kl);
    if (k % 2) c = -c;
    Monomial m(Generator::moment(1, cut), -(k + 1));
    for (auto [l, kl] : parts) m = m.times(Generator::moment(1 + l, cut), kl);
    z.add_term(m, c);
  }
  std::lock_guard lock(mu);
  cache.emplace(std::pair(n, cut), z);
  return z;
}

Expression z_split(int n, int k, int cut) {
  Expression part = project_y1(z_poly(n, cut), k + 1, cut);
  return part * Expression(Generator::moment(1, cut), k + 1);
}

Rational a_factor(const MultiIndex& a) {
  Rational r(1);
  for (int f = 0; f < a.length(); ++f)
    for (int i = 0; i < a[f]; ++i) r *= ratio(2 * f + 1, 2);
  return r;
}

int n_index(const MultiIndex& a) { return 1 + a.weight(); }
int n_index(const MultiIndex& a, const MultiIndex& b) { return 1 + a.weight() + b.weight(); }

Expression delta1_remnant(const Expression& e, int cut) {
  int top = 0;
  bool has_log = false;
  for (const auto& g : e.generators()) {
    if (g.cut() != cut) continue;
    if (g.is_moment()) top = std::max(top, g.order());
    if (g.kind() == GeneratorKind::LogMoment) has_log = true;
  }
  if (has_log) top = std::max(top, 1);
  Expression out;
  Expression inv_y1(Generator::moment(1, cut), -1);
  for (int f = 1; f <= top; ++f) {
    Expression d = diff(e, Generator::moment(f, cut));
    if (d.is_zero()) continue;
    out += d * (Expression(Generator::moment(f + 1, cut)) * inv_y1) * Rational(2 * f + 1);
  }
  return out;
}

}  // namespace lmm
