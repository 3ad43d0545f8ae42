#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

namespace pluri {

/// Exponent vector (i_1, ..., i_N) addressing the jet variable u_I.
///
/// Coordinates are 1-based throughout the library: coordinate 1 is x = t_1,
/// coordinate k is t_k. The canonical order is by |I| first, then
/// lexicographic on the exponent tuple.
class MultiIndex {
 public:
  static constexpr int kMaxDim = 8;

  MultiIndex() = default;
  explicit MultiIndex(int dim);
  MultiIndex(int dim, std::initializer_list<int> exponents);

  /// x^m in a space of dimension dim.
  static MultiIndex x_power(int dim, int m);
  static MultiIndex unit(int dim, int coord);

  int dim() const { return dim_; }
  int operator()(int coord) const { return e_[coord - 1]; }
  int order() const;
  bool is_zero() const { return order() == 0; }
  bool contains(int coord) const { return (*this)(coord) > 0; }

  /// True when every nonzero exponent sits at coordinate 1.
  bool is_pure_x() const;

  MultiIndex plus(int coord, int by = 1) const;
  MultiIndex plus(const MultiIndex& other) const;

  /// this - other, or nullopt when some exponent would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;

  /// Same index with the exponent of coord set to zero.
  MultiIndex without(int coord) const;

  std::string exponent_tuple() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<std::uint8_t, kMaxDim> e_{};
  std::uint8_t dim_ = 0;
};

using JetVar = MultiIndex;

}  // namespace pluri
