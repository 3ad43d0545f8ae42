#include "pluri/monomial.hpp"

#include <algorithm>

namespace pluri {

Monomial Monomial::of(const JetVar& var, int exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(var, exponent);
  return m;
}

Monomial Monomial::of_trig(TrigFactor trig) {
  Monomial m;
  m.trig_ = trig;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(const JetVar& var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, const JetVar& v) { return f.first < v; });
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

Monomial Monomial::with_exponent(const JetVar& var, int exponent) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), var,
                             [](const Factor& f, const JetVar& v) { return f.first < v; });
  if (it != r.factors_.end() && it->first == var) {
    if (exponent > 0)
      it->second = exponent;
    else
      r.factors_.erase(it);
  } else if (exponent > 0) {
    r.factors_.insert(it, Factor{var, exponent});
  }
  return r;
}

Monomial Monomial::with_trig(TrigFactor trig) const {
  Monomial r = *this;
  r.trig_ = trig;
  return r;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  r.trig_ = {trig_.sin_exp + other.trig_.sin_exp, trig_.cos_exp + other.trig_.cos_exp};
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                      b.factors_.begin(), b.factors_.end());
      c != 0)
    return c;
  return a.trig_ <=> b.trig_;
}

}  // namespace pluri
