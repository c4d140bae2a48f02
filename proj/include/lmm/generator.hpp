#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lmm {

// Interned symbolic point label (p, p1, q, x, ...). Labels compare by
// interning id; rendering sorts by name.
class PointLabel {
 public:
  PointLabel() = default;
  explicit PointLabel(std::string_view name);
  PointLabel(const char* name) : PointLabel(std::string_view(name)) {}

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(PointLabel, PointLabel) = default;
  friend auto operator<=>(PointLabel, PointLabel) = default;

  static PointLabel from_id(std::uint32_t id);

 private:
  std::uint32_t id_ = 0;
};

enum class GeneratorKind : std::uint8_t {
  Moment = 0,     // y_{f,i}
  LogMoment = 1,  // log y_{1,i}
  ExtProp = 2,    // B_i^f(p)
  IntProp = 3,    // B_{i,j}^{f,g}
};

// A symbolic generator packed into one 64-bit key. Field order inside the key
// is (kind, i, j, f, g, label), so integer comparison is the generator order.
// Cut index 0 means "no index" (single-point algebra of the coupling engine).
class Generator {
 public:
  static Generator moment(int f, int cut = 0);
  static Generator log_moment(int cut = 0);
  static Generator ext_prop(int cut, int f, PointLabel point);
  // Stored with (i,f) <= (j,g); B_{i,j}^{f,g} = B_{j,i}^{g,f}.
  static Generator int_prop(int cut_i, int cut_j, int f, int g);

  GeneratorKind kind() const { return static_cast<GeneratorKind>(key_ >> 60); }
  int cut() const { return static_cast<int>((key_ >> 52) & 0xff); }
  int cut2() const { return static_cast<int>((key_ >> 44) & 0xff); }
  int order() const { return static_cast<int>((key_ >> 32) & 0xfff); }
  int order2() const { return static_cast<int>((key_ >> 20) & 0xfff); }
  PointLabel point() const { return PointLabel::from_id(static_cast<std::uint32_t>(key_ & 0xfffff)); }

  bool is_moment() const { return kind() == GeneratorKind::Moment; }
  bool is_y1() const { return is_moment() && order() == 1; }

  Generator with_cut(int cut) const;
  Generator with_point(PointLabel point) const;

  std::uint64_t key() const { return key_; }
  std::string name() const;

  friend bool operator==(Generator, Generator) = default;
  friend auto operator<=>(Generator, Generator) = default;

 private:
  static Generator pack(GeneratorKind kind, int i, int j, int f, int g, std::uint32_t label);
  std::uint64_t key_ = 0;
};

// Deterministic rendering order: (kind, i, j, f, g, label name).
bool render_less(Generator a, Generator b);

}  // namespace lmm

template <>
struct std::hash<lmm::Generator> {
  std::size_t operator()(lmm::Generator g) const noexcept { return std::hash<std::uint64_t>{}(g.key()); }
};
