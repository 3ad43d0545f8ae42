#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "pluri/multi_index.hpp"

namespace pluri {

/// sin(u)^s cos(u)^c of the order-zero variable. Canonical form keeps s <= 1.
struct TrigFactor {
  int sin_exp = 0;
  int cos_exp = 0;

  bool is_unit() const { return sin_exp == 0 && cos_exp == 0; }
  friend auto operator<=>(const TrigFactor&, const TrigFactor&) = default;
};

/// Product of jet variables with positive exponents, optionally times a
/// trigonometric factor in u.
class Monomial {
 public:
  using Factor = std::pair<JetVar, int>;

  Monomial() = default;
  static Monomial of(const JetVar& var, int exponent = 1);
  static Monomial of_trig(TrigFactor trig);

  const std::vector<Factor>& factors() const { return factors_; }
  const TrigFactor& trig() const { return trig_; }

  /// Sum of jet-variable exponents (trig factors are not counted).
  int degree() const;
  int exponent(const JetVar& var) const;
  bool is_one() const { return factors_.empty() && trig_.is_unit(); }

  Monomial with_exponent(const JetVar& var, int exponent) const;
  Monomial with_trig(TrigFactor trig) const;

  /// Raw product: trig exponents are added, so sin may reach 2; callers that
  /// build polynomials go through TermAccumulator, which restores s <= 1.
  Monomial times(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;  // sorted by JetVar order, exponents > 0
  TrigFactor trig_;
};

}  // namespace pluri
