#include "pluri/sine_gordon.hpp"

namespace pluri {

namespace {

DiffPoly S(const char* text) { return parse(text, sg_naming()); }

MultiIndex xyz(int a, int b, int c) { return MultiIndex(3, {a, b, c}); }

}  // namespace

Naming sg_naming() { return Naming::xyz("u"); }

LagrangianTwoForm sg_two_form() {
  LagrangianTwoForm L(3);
  L.set(1, 2, S("1/2*u_x*u_y - cos(u)"));
  L.set(1, 3, S("1/2*u_x*u_z - 1/8*u_x^4 + 1/2*u_xx^2"));
  L.set(2, 3, S("-1/2*u_y*u_z + 1/2*u_x^2*cos(u) + u_xx*(u_xy - sin(u))"));
  return L;
}

DiffPoly sg_phi() { return S("u_xxx + 1/2*u_x^3"); }

std::vector<std::pair<int, DiffPoly>> SineGordonReducer::equations() const {
  std::vector<std::pair<int, DiffPoly>> out;
  if (mixed_rule_) out.emplace_back(2, S("u_xy - sin(u)"));
  if (z_rule_) out.emplace_back(3, S("u_z") - sg_phi());
  return out;
}

std::optional<DiffPoly> SineGordonReducer::rewrite(const JetVar& var) const {
  const int a = var(1), b = var(2), c = var(3);
  auto peel = [&](int coord) {
    JetVar rest = var.plus(coord, -1);
    auto r = reduced_var(rest);
    return total_derivative(r ? *r : DiffPoly::variable(rest), coord);
  };
  if (z_rule_ && c > 0) {
    if (var == xyz(0, 0, 1)) return sg_phi();
    return peel(a > 0 ? 1 : b > 0 ? 2 : 3);
  }
  if (mixed_rule_ && a > 0 && b > 0) {
    if (var == xyz(1, 1, 0)) return DiffPoly::sin_u(3);
    return peel(c > 0 ? 3 : b > 1 ? 2 : 1);
  }
  return std::nullopt;
}

DiffPoly variational_symmetry_residual(const DiffPoly& phi, const DiffPoly& L, const DiffPoly& M,
                                       const DiffPoly& N) {
  return prolong_vf(EvolutionaryVF(phi), L) - total_derivative(N, 1) - total_derivative(M, 2);
}

std::pair<DiffPoly, DiffPoly> sg_symmetry_fluxes() {
  DiffPoly phi = sg_phi();
  DiffPoly M = rat(1, 2) * phi * S("u_x") + S("-1/8*u_x^4 + 1/2*u_xx^2");
  DiffPoly N = rat(1, 2) * phi * S("u_y") - S("1/2*u_x^2*cos(u) + u_xx*(u_xy - sin(u))");
  return {M, N};
}

std::vector<ChecklistItem> sg_checklist() {
  const LagrangianTwoForm L = sg_two_form();
  const SineGordonReducer reducer;
  std::vector<ChecklistItem> items;
  auto add = [&](std::string description, DiffPoly computed, DiffPoly expected) {
    DiffPoly reduced = reducer.reduce(computed);
    items.push_back({std::move(description), std::move(computed), std::move(expected), std::move(reduced)});
  };
  auto d = [&](int i, int j, MultiIndex I) { return var_derivative_2d(L.get(i, j), I, i, j); };
  const DiffPoly zero(3);

  add("d12 L12 / du", d(1, 2, xyz(0, 0, 0)), S("sin(u) - u_xy"));
  for (int alpha = 1; alpha <= 3; ++alpha)
    add("d12 L12 / du_z^" + std::to_string(alpha), d(1, 2, xyz(0, 0, alpha)), zero);
  add("d13 L13 / du", d(1, 3, xyz(0, 0, 0)), S("-u_xz + 3/2*u_x^2*u_xx + u_xxxx"));
  for (int alpha = 1; alpha <= 3; ++alpha)
    add("d13 L13 / du_y^" + std::to_string(alpha), d(1, 3, xyz(0, alpha, 0)), zero);
  add("d23 L23 / du", d(2, 3, xyz(0, 0, 0)), S("u_yz - 1/2*u_x^2*sin(u) - u_xx*cos(u)"));
  add("d23 L23 / du_x", d(2, 3, xyz(1, 0, 0)), S("u_x*cos(u) - u_xxy"));
  add("d23 L23 / du_xx", d(2, 3, xyz(2, 0, 0)), S("u_xy - sin(u)"));
  for (int alpha = 3; alpha <= 5; ++alpha)
    add("d23 L23 / du_x^" + std::to_string(alpha), d(2, 3, xyz(alpha, 0, 0)), zero);
  add("d13 L13 / du_x - d23 L23 / du_y", d(1, 3, xyz(1, 0, 0)) - d(2, 3, xyz(0, 1, 0)),
      S("u_z - 1/2*u_x^3 - u_xxx"));
  add("d13 L13 / du_xx - d23 L23 / du_xy", d(1, 3, xyz(2, 0, 0)) - d(2, 3, xyz(1, 1, 0)), zero);
  add("d12 L12 / du_y - d13 L13 / du_z", d(1, 2, xyz(0, 1, 0)) - d(1, 3, xyz(0, 0, 1)), zero);
  add("d12 L12 / du_x - d32 L32 / du_z", d(2, 1, xyz(1, 0, 0)) - d(2, 3, xyz(0, 0, 1)), zero);
  for (MultiIndex I : {xyz(0, 0, 0), xyz(1, 0, 0), xyz(0, 1, 0), xyz(0, 0, 1), xyz(1, 1, 1)})
    add("d12 L12 / du_Ixy + d23 L23 / du_Iyz + d31 L31 / du_Izx, I = " + I.exponent_tuple(),
        d(1, 2, I.plus(1).plus(2)) + d(2, 3, I.plus(2).plus(3)) + d(3, 1, I.plus(3).plus(1)), zero);
  return items;
}

bool SGReport::ok() const {
  for (const auto& item : checklist)
    if (!item.ok()) return false;
  return el.ok() && dL == dL_expected && symmetry_residual.is_zero() && closed_both.is_zero() &&
         closed_sg_only.is_zero() && closed_mkdv_only.is_zero();
}

SGReport verify_sg(int jobs) {
  const LagrangianTwoForm L = sg_two_form();
  SGReport report;
  SineGordonReducer both;
  report.el = classify(el_surfaces(L, jobs), both, jobs);
  report.checklist = sg_checklist();
  report.dL = dL_coefficients(L).at({1, 2, 3});
  report.dL_expected = -(S("u_z") - sg_phi()) * S("u_xy - sin(u)");
  auto [M, N] = sg_symmetry_fluxes();
  report.symmetry_residual = variational_symmetry_residual(sg_phi(), L.get(1, 2), M, N);
  report.closed_both = both.reduce(report.dL);
  report.closed_sg_only = SineGordonReducer(true, false).reduce(report.dL);
  report.closed_mkdv_only = SineGordonReducer(false, true).reduce(report.dL);
  return report;
}

}  // namespace pluri
