#include "pluri/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pluri/errors.hpp"

namespace pluri {

MultiIndex::MultiIndex(int dim) {
  if (dim < 0 || dim > kMaxDim) throw DimensionError("multi-time dimension out of range");
  dim_ = static_cast<std::uint8_t>(dim);
}

MultiIndex::MultiIndex(int dim, std::initializer_list<int> exponents) : MultiIndex(dim) {
  if (static_cast<int>(exponents.size()) != dim)
    throw DimensionError("exponent list length must equal the dimension");
  int k = 0;
  for (int e : exponents) {
    if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
    e_[k++] = static_cast<std::uint8_t>(e);
  }
}

MultiIndex MultiIndex::x_power(int dim, int m) {
  MultiIndex I(dim);
  return I.plus(1, m);
}

MultiIndex MultiIndex::unit(int dim, int coord) {
  MultiIndex I(dim);
  return I.plus(coord, 1);
}

int MultiIndex::order() const {
  return std::accumulate(e_.begin(), e_.begin() + dim_, 0);
}

bool MultiIndex::is_pure_x() const {
  return std::all_of(e_.begin() + 1, e_.begin() + dim_, [](std::uint8_t v) { return v == 0; });
}

MultiIndex MultiIndex::plus(int coord, int by) const {
  if (coord < 1 || coord > dim_) throw DimensionError("coordinate index out of range");
  int v = e_[coord - 1] + by;
  if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
  MultiIndex r = *this;
  r.e_[coord - 1] = static_cast<std::uint8_t>(v);
  return r;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (other.dim_ != dim_) throw DimensionError("multi-index dimension mismatch");
  MultiIndex r = *this;
  for (int k = 0; k < dim_; ++k) r.e_[k] = static_cast<std::uint8_t>(e_[k] + other.e_[k]);
  return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (other.dim_ != dim_) throw DimensionError("multi-index dimension mismatch");
  MultiIndex r = *this;
  for (int k = 0; k < dim_; ++k) {
    if (e_[k] < other.e_[k]) return std::nullopt;
    r.e_[k] = static_cast<std::uint8_t>(e_[k] - other.e_[k]);
  }
  return r;
}

MultiIndex MultiIndex::without(int coord) const {
  MultiIndex r = *this;
  r.e_[coord - 1] = 0;
  return r;
}

std::string MultiIndex::exponent_tuple() const {
  std::string s = "(";
  for (int k = 0; k < dim_; ++k) {
    if (k) s += ',';
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (int k = 0; k < a.dim_; ++k)
    if (auto c = a.e_[k] <=> b.e_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace pluri
