#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pluri/monomial.hpp"
#include "pluri/rational.hpp"

namespace pluri {

/// Differential polynomial in the jet variables of one scalar field over an
/// N-dimensional multi-time, with exact rational coefficients.
///
/// Terms are kept sorted by Monomial order with no zero coefficients, so
/// structural equality is equality of polynomials. Values are immutable once
/// built and safe to share between threads.
class DiffPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  /// The zero polynomial of dimension 0. A dimension-0 zero adopts the
  /// dimension of whatever it is combined with; any other mismatch throws.
  DiffPoly() = default;
  explicit DiffPoly(int dim) : dim_(dim) {}

  static DiffPoly constant(int dim, const Rational& c);
  static DiffPoly variable(const JetVar& var, int exponent = 1);
  static DiffPoly monomial(int dim, Monomial m, const Rational& c = 1);
  static DiffPoly sin_u(int dim);
  static DiffPoly cos_u(int dim);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  /// Maximal |I| over occurring jet variables; 0 for constants. A trig
  /// factor counts as an occurrence of u.
  int max_order() const;

  /// Distinct jet variables, sorted; u is included when a trig factor occurs.
  std::vector<JetVar> variables() const;

  bool has_trig() const;
  /// Every jet variable is an x-derivative (or u itself).
  bool is_pure_x() const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  DiffPoly& operator*=(const DiffPoly& other);
  DiffPoly& operator*=(const Rational& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }

  DiffPoly pow(int exponent) const;

  /// Apply f to every monomial and sum the resulting polynomials times the
  /// original coefficients.
  template <class F>
  DiffPoly map_monomials(int dim, F&& f) const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return a.terms_ == b.terms_ && (a.dim_ == b.dim_ || a.terms_.empty());
  }

 private:
  friend class TermAccumulator;
  int merged_dim(const DiffPoly& other) const;

  int dim_ = 0;
  std::vector<Term> terms_;
};

/// Collects (monomial, coefficient) pairs in any order and produces the
/// canonical DiffPoly: sorted, combined, zero-free, sin exponent <= 1.
class TermAccumulator {
 public:
  explicit TermAccumulator(int dim) : dim_(dim) {}

  void add(Monomial m, Rational c);
  void add(const DiffPoly& p, const Rational& scale = 1);
  void add_product(const DiffPoly& p, const Monomial& m, const Rational& scale);
  DiffPoly finish();

 private:
  int dim_;
  std::vector<DiffPoly::Term> raw_;
};

template <class F>
DiffPoly DiffPoly::map_monomials(int dim, F&& f) const {
  TermAccumulator acc(dim);
  for (const auto& [m, c] : terms_) acc.add(f(m), c);
  return acc.finish();
}

/// Common scaling weight of all monomials, or nullopt when the polynomial is
/// not weight-homogeneous. u has weight base_weight; a derivative in t_k adds
/// 2k - 1 (so an x-derivative adds 1). Trig factors are never homogeneous.
std::optional<int> weight(const DiffPoly& p, int base_weight);

}  // namespace pluri
