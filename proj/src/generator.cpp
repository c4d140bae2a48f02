#include "lmm/generator.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <deque>

namespace lmm {

namespace {

struct LabelRegistry {
  std::mutex mu;
  std::deque<std::string> names{""};
  std::unordered_map<std::string, std::uint32_t> ids{{"", 0}};
};

LabelRegistry& registry() {
  static LabelRegistry r;
  return r;
}

}  // namespace

PointLabel::PointLabel(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) {
    id_ = it->second;
    return;
  }
  if (r.names.size() >= (1u << 20)) throw std::length_error("too many point labels");
  id_ = static_cast<std::uint32_t>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id_);
}

const std::string& PointLabel::name() const {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names[id_];
}

PointLabel PointLabel::from_id(std::uint32_t id) {
  PointLabel p;
  p.id_ = id;
  return p;
}

Generator Generator::pack(GeneratorKind kind, int i, int j, int f, int g, std::uint32_t label) {
  if (i < 0 || i > 0xff || j < 0 || j > 0xff) throw std::out_of_range("cut index out of range");
  if (f < 0 || f > 0xfff || g < 0 || g > 0xfff) throw std::out_of_range("derivative order out of range");
  Generator r;
  r.key_ = (std::uint64_t(kind) << 60) | (std::uint64_t(i) << 52) | (std::uint64_t(j) << 44) |
           (std::uint64_t(f) << 32) | (std::uint64_t(g) << 20) | std::uint64_t(label & 0xfffff);
  return r;
}

Generator Generator::moment(int f, int cut) {
  if (f < 1) throw std::invalid_argument("moment order must be positive");
  return pack(GeneratorKind::Moment, cut, 0, f, 0, 0);
}

Generator Generator::log_moment(int cut) { return pack(GeneratorKind::LogMoment, cut, 0, 1, 0, 0); }

Generator Generator::ext_prop(int cut, int f, PointLabel point) {
  return pack(GeneratorKind::ExtProp, cut, 0, f, 0, point.id());
}

Generator Generator::int_prop(int cut_i, int cut_j, int f, int g) {
  if (std::pair(cut_j, g) < std::pair(cut_i, f)) {
    std::swap(cut_i, cut_j);
    std::swap(f, g);
  }
  return pack(GeneratorKind::IntProp, cut_i, cut_j, f, g, 0);
}

Generator Generator::with_cut(int c) const {
  switch (kind()) {
    case GeneratorKind::Moment: return moment(order(), c);
    case GeneratorKind::LogMoment: return log_moment(c);
    case GeneratorKind::ExtProp: return ext_prop(c, order(), point());
    case GeneratorKind::IntProp: return int_prop(c, cut2(), order(), order2());
  }
  return *this;
}

Generator Generator::with_point(PointLabel p) const {
  if (kind() != GeneratorKind::ExtProp) return *this;
  return ext_prop(cut(), order(), p);
}

std::string Generator::name() const {
  auto idx = [](int i) { return i ? "_" + std::to_string(i) : std::string(); };
  switch (kind()) {
    case GeneratorKind::Moment: return "y" + std::to_string(order()) + idx(cut());
    case GeneratorKind::LogMoment: return "log(y1" + idx(cut()) + ")";
    case GeneratorKind::ExtProp:
      return "B_" + std::to_string(cut()) + "^" + std::to_string(order()) + "(" + point().name() + ")";
    case GeneratorKind::IntProp:
      return "B_" + std::to_string(cut()) + "," + std::to_string(cut2()) + "^" + std::to_string(order()) + "," +
             std::to_string(order2());
  }
  return "?";
}

bool render_less(Generator a, Generator b) {
  constexpr std::uint64_t kLabelMask = 0xfffff;
  auto ha = a.key() & ~kLabelMask, hb = b.key() & ~kLabelMask;
  if (ha != hb) return ha < hb;
  if (a.key() == b.key()) return false;
  return a.point().name() < b.point().name();
}

}  // namespace lmm
