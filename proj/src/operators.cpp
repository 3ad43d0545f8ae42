#include "pluri/operators.hpp"

#include <algorithm>

#include "pluri/errors.hpp"

namespace pluri {

namespace {

// d/du of sin^s cos^c with s <= 1, as a list of (trig factor, coefficient).
std::vector<std::pair<TrigFactor, Rational>> trig_du(TrigFactor t) {
  std::vector<std::pair<TrigFactor, Rational>> out;
  if (t.sin_exp == 1) {
    // cos^{c+1} - c sin^2 cos^{c-1} = (1+c) cos^{c+1} - c cos^{c-1}
    out.push_back({{0, t.cos_exp + 1}, Rational(1 + t.cos_exp)});
    if (t.cos_exp > 0) out.push_back({{0, t.cos_exp - 1}, Rational(-t.cos_exp)});
  } else if (t.cos_exp > 0) {
    out.push_back({{1, t.cos_exp - 1}, Rational(-t.cos_exp)});
  }
  return out;
}

void check_coord(int dim, int coord) {
  if (coord < 1 || coord > dim) throw DimensionError("coordinate index out of range");
}

}  // namespace

DiffPoly total_derivative(const DiffPoly& p, int coord) {
  if (p.is_zero()) return p;
  check_coord(p.dim(), coord);
  TermAccumulator acc(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      JetVar w = v.plus(coord);
      Monomial r = m.with_exponent(v, e - 1);
      acc.add(r.with_exponent(w, r.exponent(w) + 1), c * e);
    }
    if (!m.trig().is_unit()) {
      JetVar w = MultiIndex::unit(p.dim(), coord);
      Monomial base = m.with_exponent(w, m.exponent(w) + 1);
      for (const auto& [t, k] : trig_du(m.trig())) acc.add(base.with_trig(t), c * k);
    }
  }
  return acc.finish();
}

DiffPoly total_derivative(const DiffPoly& p, const MultiIndex& I) {
  DiffPoly r = p;
  for (int k = 1; k <= I.dim(); ++k)
    for (int n = 0; n < I(k); ++n) r = total_derivative(r, k);
  return r;
}

DiffPoly partial(const DiffPoly& p, const JetVar& var) {
  TermAccumulator acc(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (int e = m.exponent(var); e > 0) acc.add(m.with_exponent(var, e - 1), c * e);
    if (var.is_zero() && !m.trig().is_unit())
      for (const auto& [t, k] : trig_du(m.trig())) acc.add(m.with_trig(t), c * k);
  }
  return acc.finish();
}

DiffPoly var_derivative_1d(const DiffPoly& p, const MultiIndex& I, int i) {
  DiffPoly out(p.dim());
  if (p.is_zero()) return out;
  check_coord(p.dim(), i);
  for (const JetVar& J : p.variables()) {
    auto K = J.minus(I);
    if (!K || K->order() != (*K)(i)) continue;
    int alpha = (*K)(i);
    DiffPoly term = partial(p, J);
    for (int n = 0; n < alpha; ++n) term = total_derivative(term, i);
    if (alpha % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

DiffPoly var_derivative_2d(const DiffPoly& p, const MultiIndex& I, int i, int j) {
  DiffPoly out(p.dim());
  if (p.is_zero()) return out;
  check_coord(p.dim(), i);
  check_coord(p.dim(), j);
  if (i == j) throw DimensionError("two-direction variational derivative needs i != j");
  for (const JetVar& J : p.variables()) {
    auto K = J.minus(I);
    if (!K || K->order() != (*K)(i) + (*K)(j)) continue;
    DiffPoly term = total_derivative(partial(p, J), *K);
    if (K->order() % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

DiffPoly euler_operator(const DiffPoly& p) {
  return var_derivative_1d(p, MultiIndex(p.dim()), 1);
}

namespace {

// Exact solve of sum_c x_c columns[c] = target; nullopt when inconsistent.
// The columns are assumed linearly independent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<DiffPoly>& columns,
                                                   const DiffPoly& target) {
  std::map<Monomial, int> row_of;
  auto row = [&row_of](const Monomial& m) {
    auto [it, fresh] = row_of.emplace(m, static_cast<int>(row_of.size()));
    return it->second;
  };
  for (const auto& col : columns)
    for (const auto& t : col.terms()) row(t.first);
  for (const auto& t : target.terms()) row(t.first);

  const int rows = static_cast<int>(row_of.size());
  const int cols = static_cast<int>(columns.size());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (int c = 0; c < cols; ++c)
    for (const auto& [m, q] : columns[c].terms()) a[row_of[m]][c] = q;
  for (const auto& [m, q] : target.terms()) a[row_of[m]][cols] = q;

  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int k = r; k < rows; ++k)
      if (a[k][c] != 0) {
        piv = k;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rational inv = 1 / a[r][c];
    for (int k = c; k <= cols; ++k) a[r][k] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || a[k][c] == 0) continue;
      Rational f = a[k][c];
      for (int l = c; l <= cols; ++l) a[k][l] -= f * a[r][l];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int k = r; k < rows; ++k)
    if (a[k][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = a[k][cols];
  return x;
}

// Monomials in u, u_x, ..., u_{x^max_order} of degree d with total
// derivative count s.
void pure_x_monomials(int dim, int d, int s, int max_order, int min_next, Monomial current,
                      std::vector<Monomial>& out) {
  if (d == 0) {
    if (s == 0) out.push_back(std::move(current));
    return;
  }
  for (int o = min_next; o <= max_order && o * d <= s; ++o) {
    JetVar v = MultiIndex::x_power(dim, o);
    pure_x_monomials(dim, d - 1, s - o, max_order, o,
                     current.with_exponent(v, current.exponent(v) + 1), out);
  }
}

}  // namespace

DiffPoly x_antiderivative(const DiffPoly& p) {
  if (!p.is_pure_x()) throw DimensionError("x-antiderivative of a polynomial with time derivatives");
  if (p.is_zero()) return p;
  if (p.has_trig()) throw NotExact("x-antiderivative of a trig polynomial");
  if (p.constant_term() != 0) throw NotExact("constant term has no polynomial x-antiderivative");
  if (!euler_operator(p).is_zero()) throw NotExact("Euler operator does not vanish");

  // D_x preserves the degree and raises the number of x-derivatives by one,
  // so each (degree, count) component is integrated separately.
  std::map<std::pair<int, int>, DiffPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    int s = 0;
    for (const auto& [v, e] : m.factors()) s += v(1) * e;
    auto [it, fresh] = parts.try_emplace({m.degree(), s}, p.dim());
    it->second += DiffPoly::monomial(p.dim(), m, c);
  }
  const int top = p.max_order() - 1;
  DiffPoly out(p.dim());
  for (const auto& [key, part] : parts) {
    auto [d, s] = key;
    if (s == 0) throw NotExact("component without x-derivatives");
    std::vector<Monomial> basis;
    pure_x_monomials(p.dim(), d, s - 1, top, 0, Monomial{}, basis);
    std::vector<DiffPoly> images;
    images.reserve(basis.size());
    for (const auto& m : basis) images.push_back(total_derivative(DiffPoly::monomial(p.dim(), m), 1));
    auto x = solve_columns(images, part);
    if (!x) throw NotExact("no polynomial x-antiderivative");
    TermAccumulator acc(p.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) acc.add(basis[k], (*x)[k]);
    out += acc.finish();
  }
  return out;
}

DiffPoly EvolutionaryVF::coefficient(const MultiIndex& I) const {
  return total_derivative(phi_, I);
}

DiffPoly prolong_vf(const EvolutionaryVF& vf, const DiffPoly& p) {
  DiffPoly out(p.dim());
  for (const JetVar& J : p.variables()) out += vf.coefficient(J) * partial(p, J);
  return out;
}

void EvolutionSystem::set_flow(int j, DiffPoly rhs) {
  if (j < 2 || j > dim_) throw DimensionError("flow index out of range");
  if (!rhs.is_pure_x()) throw DimensionError("flow right-hand side must be pure-x");
  if (rhs.dim() != dim_ && !(rhs.is_zero())) throw DimensionError("flow dimension mismatch");
  rhs_[j] = std::move(rhs);
}

const DiffPoly* EvolutionSystem::flow(int j) const {
  auto it = rhs_.find(j);
  return it == rhs_.end() ? nullptr : &it->second;
}

std::vector<int> EvolutionSystem::times() const {
  std::vector<int> out;
  for (const auto& [j, g] : rhs_) out.push_back(j);
  return out;
}

DiffPoly EvolutionSystem::equation(int j) const {
  const DiffPoly* g = flow(j);
  if (!g) throw UnknownFlow(j);
  return DiffPoly::variable(MultiIndex::unit(dim_, j)) - *g;
}

std::shared_ptr<const DiffPoly> Reducer::reduced_var(const JetVar& var) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(var); it != memo_.end()) return it->second;
  }
  std::shared_ptr<const DiffPoly> result;
  if (auto r = rewrite(var)) result = std::make_shared<const DiffPoly>(reduce(*r));
  std::lock_guard lock(mu_);
  return memo_.try_emplace(var, std::move(result)).first->second;
}

DiffPoly Reducer::reduce(const DiffPoly& p) const {
  TermAccumulator acc(p.dim());
  for (const auto& [m, c] : p.terms()) {
    Monomial kept = Monomial::of_trig(m.trig());
    DiffPoly factor;
    bool replaced = false;
    for (const auto& [v, e] : m.factors()) {
      auto r = reduced_var(v);
      if (!r) {
        kept = kept.with_exponent(v, e);
        continue;
      }
      DiffPoly pw = r->pow(e);
      factor = replaced ? factor * pw : pw;
      replaced = true;
    }
    if (replaced)
      acc.add_product(factor, kept, c);
    else
      acc.add(m, c);
  }
  return acc.finish();
}

FlowReducer::FlowReducer(EvolutionSystem sys, ElimOrder order, std::set<int> keep)
    : sys_(std::move(sys)), order_(order), keep_(std::move(keep)) {}

bool FlowReducer::eliminable(int coord) const {
  return coord >= 2 && !keep_.contains(coord);
}

std::vector<std::pair<int, DiffPoly>> FlowReducer::equations() const {
  std::vector<std::pair<int, DiffPoly>> out;
  for (int j : sys_.times())
    if (eliminable(j)) out.emplace_back(j, sys_.equation(j));
  return out;
}

std::optional<DiffPoly> FlowReducer::rewrite(const JetVar& var) const {
  const int dim = var.dim();
  std::vector<int> times;
  for (int k = 2; k <= dim; ++k)
    if (var(k) > 0 && eliminable(k)) {
      if (!sys_.flow(k)) throw UnknownFlow(k);
      times.push_back(k);
    }
  if (times.empty()) return std::nullopt;
  const int j = order_ == ElimOrder::LargestFirst ? times.back() : times.front();
  if (var == MultiIndex::unit(dim, j)) return *sys_.flow(j);

  int peel = 0;
  if (var(1) > 0) {
    peel = 1;
  } else {
    for (int k = 2; k <= dim && !peel; ++k)
      if (var(k) > 0 && !eliminable(k)) peel = k;
    for (int k = 2; k <= dim && !peel; ++k)
      if (var(k) > 0 && k != j) peel = k;
    if (!peel) peel = j;
  }
  JetVar rest = var.plus(peel, -1);
  auto r = reduced_var(rest);
  return total_derivative(r ? *r : DiffPoly::variable(rest), peel);
}

DiffPoly reduce_mod_system(const DiffPoly& p, const EvolutionSystem& sys, ElimOrder order) {
  return FlowReducer(sys, order).reduce(p);
}

}  // namespace pluri
