#include "pluri/diff_poly.hpp"

#include <algorithm>

#include "pluri/errors.hpp"

namespace pluri {

DiffPoly DiffPoly::constant(int dim, const Rational& c) {
  return monomial(dim, Monomial{}, c);
}

DiffPoly DiffPoly::variable(const JetVar& var, int exponent) {
  return monomial(var.dim(), Monomial::of(var, exponent));
}

DiffPoly DiffPoly::monomial(int dim, Monomial m, const Rational& c) {
  TermAccumulator acc(dim);
  acc.add(std::move(m), c);
  return acc.finish();
}

DiffPoly DiffPoly::sin_u(int dim) { return monomial(dim, Monomial::of_trig({1, 0})); }
DiffPoly DiffPoly::cos_u(int dim) { return monomial(dim, Monomial::of_trig({0, 1})); }

Rational DiffPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int DiffPoly::max_order() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) best = std::max(best, v.order());
  return best;
}

std::vector<JetVar> DiffPoly::variables() const {
  std::vector<JetVar> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
    if (!m.trig().is_unit()) vars.push_back(MultiIndex(dim_));
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool DiffPoly::has_trig() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return !t.first.trig().is_unit(); });
}

bool DiffPoly::is_pure_x() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (!v.is_pure_x()) return false;
  return true;
}

int DiffPoly::merged_dim(const DiffPoly& other) const {
  if (dim_ == other.dim_) return dim_;
  if (dim_ == 0 && terms_.empty()) return other.dim_;
  if (other.dim_ == 0 && other.terms_.empty()) return dim_;
  throw DimensionError("differential polynomials of different dimension");
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class Sign>
std::vector<DiffPoly::Term> merge_terms(const std::vector<DiffPoly::Term>& a,
                                        const std::vector<DiffPoly::Term>& b, Sign sign) {
  std::vector<DiffPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      out.push_back(*i++);
    } else if (c > 0) {
      out.emplace_back(j->first, sign(j->second));
      ++j;
    } else {
      Rational s = i->second + sign(j->second);
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.emplace_back(j->first, sign(j->second));
  return out;
}

}  // namespace

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  dim_ = merged_dim(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& q) { return q; });
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
  dim_ = merged_dim(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& q) { return Rational(-q); });
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& other) { return *this = *this * other; }

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  TermAccumulator acc(a.merged_dim(b));
  for (const auto& [m, c] : b.terms_) acc.add_product(a, m, c);
  return acc.finish();
}

DiffPoly DiffPoly::pow(int exponent) const {
  DiffPoly r = constant(dim_, 1);
  for (int k = 0; k < exponent; ++k) r = r * *this;
  return r;
}

void TermAccumulator::add(Monomial m, Rational c) {
  if (c == 0) return;
  TrigFactor t = m.trig();
  if (t.sin_exp >= 2) {
    // sin^2 u = 1 - cos^2 u
    add(m.with_trig({t.sin_exp - 2, t.cos_exp}), c);
    add(m.with_trig({t.sin_exp - 2, t.cos_exp + 2}), -c);
    return;
  }
  raw_.emplace_back(std::move(m), std::move(c));
}

void TermAccumulator::add(const DiffPoly& p, const Rational& scale) {
  if (p.dim_ != 0 && p.dim_ != dim_ && !p.terms_.empty())
    throw DimensionError("differential polynomials of different dimension");
  for (const auto& [m, c] : p.terms_) add(m, c * scale);
}

void TermAccumulator::add_product(const DiffPoly& p, const Monomial& m, const Rational& scale) {
  for (const auto& [pm, c] : p.terms_) add(pm.times(m), c * scale);
}

DiffPoly TermAccumulator::finish() {
  std::sort(raw_.begin(), raw_.end(),
            [](const DiffPoly::Term& a, const DiffPoly::Term& b) { return a.first < b.first; });
  DiffPoly out(dim_);
  for (auto& t : raw_) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  raw_.clear();
  return out;
}

std::optional<int> weight(const DiffPoly& p, int base_weight) {
  std::optional<int> common;
  for (const auto& [m, c] : p.terms()) {
    if (!m.trig().is_unit()) return std::nullopt;
    int w = 0;
    for (const auto& [v, e] : m.factors()) {
      int wv = base_weight;
      for (int k = 1; k <= v.dim(); ++k) wv += v(k) * (2 * k - 1);
      w += e * wv;
    }
    if (common && *common != w) return std::nullopt;
    common = w;
  }
  return common.value_or(0);
}

}  // namespace pluri
