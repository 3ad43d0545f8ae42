#include "pluri/bicomplex.hpp"

#include <algorithm>
#include <array>

#include "pluri/errors.hpp"
#include "pluri/parallel.hpp"
#include "pluri/random.hpp"

namespace pluri {

namespace {

// Sorts in place; returns the permutation sign, or 0 on a repeated entry.
template <class T>
int sort_sign(std::vector<T>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t k = i; k > 0 && v[k] < v[k - 1]; --k) {
      std::swap(v[k], v[k - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

}  // namespace

BiForm::BiForm(int dim, int p, int q) : dim_(dim), p_(p), q_(q) {
  if (p < 0 || q < 0) throw DimensionError("negative bidegree");
}

BiForm BiForm::function(const DiffPoly& f, int dim) {
  return term(f, {}, {}, dim);
}

BiForm BiForm::term(const DiffPoly& coeff, std::vector<MultiIndex> vertical,
                    std::vector<int> horizontal, int dim) {
  BiForm w(dim, static_cast<int>(vertical.size()), static_cast<int>(horizontal.size()));
  for (int j : horizontal)
    if (j < 1 || j > dim) throw DimensionError("horizontal generator out of range");
  int sign = sort_sign(vertical) * sort_sign(horizontal);
  if (sign == 0 || coeff.is_zero()) return w;
  w.add({std::move(vertical), std::move(horizontal)}, sign > 0 ? coeff : -coeff);
  return w;
}

std::vector<FormTerm> BiForm::terms() const {
  std::vector<FormTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

void BiForm::add(const Key& key, const DiffPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BiForm& BiForm::operator+=(const BiForm& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && (p_ != other.p_ || q_ != other.q_)) return *this = other;
  if (dim_ != other.dim_ || p_ != other.p_ || q_ != other.q_)
    throw DimensionError("adding forms of different bidegree");
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& other) {
  if (other.is_zero()) return *this;
  BiForm neg = other;
  for (auto& [key, c] : neg.terms_) c = -c;
  return *this += neg;
}

BiForm operator*(const DiffPoly& f, const BiForm& w) {
  BiForm out(w.dim_, w.p_, w.q_);
  for (const auto& [key, c] : w.terms_) out.add(key, f * c);
  return out;
}

BiForm wedge(const BiForm& a, const BiForm& b) {
  BiForm out(a.dim(), a.p() + b.p(), a.q() + b.q());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      // moving the horizontal block of a past the vertical block of b
      int sign = (ta.horizontal.size() * tb.vertical.size()) % 2 ? -1 : 1;
      std::vector<MultiIndex> v = ta.vertical;
      v.insert(v.end(), tb.vertical.begin(), tb.vertical.end());
      std::vector<int> h = ta.horizontal;
      h.insert(h.end(), tb.horizontal.begin(), tb.horizontal.end());
      DiffPoly c = ta.coeff * tb.coeff;
      if (sign < 0) c = -c;
      out += BiForm::term(c, std::move(v), std::move(h), a.dim());
    }
  return out;
}

BiForm total_derivative(const BiForm& w, int coord) {
  BiForm out(w.dim(), w.p(), w.q());
  for (const auto& t : w.terms()) {
    out += BiForm::term(total_derivative(t.coeff, coord), t.vertical, t.horizontal, w.dim());
    for (std::size_t a = 0; a < t.vertical.size(); ++a) {
      std::vector<MultiIndex> v = t.vertical;
      v[a] = v[a].plus(coord);
      out += BiForm::term(t.coeff, std::move(v), t.horizontal, w.dim());
    }
  }
  return out;
}

BiForm d_horizontal(const BiForm& w) {
  // Both rules combine to d(f V H) = (-1)^p sum_j D_j(f V) ^ dt_j ^ H.
  BiForm out(w.dim(), w.p(), w.q() + 1);
  for (int j = 1; j <= w.dim(); ++j) {
    for (const auto& t : total_derivative(w, j).terms()) {
      std::vector<int> h{j};
      h.insert(h.end(), t.horizontal.begin(), t.horizontal.end());
      out += BiForm::term(w.p() % 2 ? -t.coeff : t.coeff, t.vertical, std::move(h), w.dim());
    }
  }
  return out;
}

BiForm delta_vertical(const BiForm& w) {
  BiForm out(w.dim(), w.p() + 1, w.q());
  for (const auto& t : w.terms())
    for (const JetVar& I : t.coeff.variables()) {
      std::vector<MultiIndex> v{I};
      v.insert(v.end(), t.vertical.begin(), t.vertical.end());
      out += BiForm::term(partial(t.coeff, I), std::move(v), t.horizontal, w.dim());
    }
  return out;
}

BiForm contract(const EvolutionaryVF& vf, const BiForm& w) {
  if (w.p() == 0) return BiForm(w.dim(), 0, w.q());
  BiForm out(w.dim(), w.p() - 1, w.q());
  for (const auto& t : w.terms())
    for (std::size_t a = 0; a < t.vertical.size(); ++a) {
      std::vector<MultiIndex> v = t.vertical;
      v.erase(v.begin() + static_cast<long>(a));
      DiffPoly c = t.coeff * vf.coefficient(t.vertical[a]);
      out += BiForm::term(a % 2 ? -c : c, std::move(v), t.horizontal, w.dim());
    }
  return out;
}

std::string render(const BiForm& w, const Naming& naming) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + render(t.coeff, naming) + ")";
    for (const auto& I : t.vertical) out += " δ" + render(I, naming);
    for (int j : t.horizontal) out += " d" + naming.coords[j - 1];
  }
  return out;
}

std::vector<IdentityTally> bicomplex_identity_suite(std::uint64_t seed, int forms, int dim, int jobs) {
  const PolyShape shape{.dim = dim, .max_order = 2, .max_degree = 2, .max_terms = 3, .trig = true};
  constexpr int kIdentities = 5;
  auto results = parallel_map(static_cast<std::size_t>(forms), jobs, [&](std::size_t k) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed + k));
    const int p = static_cast<int>(k % 3), q = static_cast<int>(k / 3 % 4);
    BiForm w = random_form(rng, p, std::min(q, dim), shape);
    EvolutionaryVF vf(random_poly(rng, shape));
    bool commutes = true;
    for (int i = 1; i <= dim; ++i)
      commutes = commutes && total_derivative(delta_vertical(w), i) == delta_vertical(total_derivative(w, i));
    return std::array<bool, kIdentities>{
        d_horizontal(d_horizontal(w)).is_zero(),
        delta_vertical(delta_vertical(w)).is_zero(),
        (d_horizontal(delta_vertical(w)) + delta_vertical(d_horizontal(w))).is_zero(),
        commutes,
        (d_horizontal(contract(vf, w)) + contract(vf, d_horizontal(w))).is_zero(),
    };
  });
  std::vector<IdentityTally> out = {{"d^2 = 0"},
                                    {"delta^2 = 0"},
                                    {"d delta + delta d = 0"},
                                    {"D_i delta = delta D_i"},
                                    {"d contract + contract d = 0"}};
  for (const auto& r : results)
    for (int t = 0; t < kIdentities; ++t) {
      ++out[t].checked;
      if (!r[t]) ++out[t].failed;
    }
  return out;
}

}  // namespace pluri
