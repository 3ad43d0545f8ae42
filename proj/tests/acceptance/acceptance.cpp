// One pass/fail line per acceptance criterion. With an argument NN only
// criterion NN runs. Exit status 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "pluri/bicomplex.hpp"
#include "pluri/cli.hpp"
#include "pluri/euler_lagrange.hpp"
#include "pluri/hamiltonian.hpp"
#include "pluri/kdv_hierarchy.hpp"
#include "pluri/random.hpp"
#include "pluri/sine_gordon.hpp"

using namespace pluri;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  double budget_seconds;
  std::function<Outcome()> run;
};

DiffPoly U(const char* text, int dim = 1) { return parse(text, Naming::kdv(dim, "u")); }
DiffPoly S(const char* text) { return parse(text, sg_naming()); }
DiffPoly t(int n, int j) { return DiffPoly::variable(MultiIndex::unit(n, j)); }

const HierarchyContext& ctx4() {
  static const HierarchyContext ctx(4, 4);
  return ctx;
}

Outcome resolvent_table() {
  Outcome o;
  auto r = resolvent_coeffs(1, 3);
  o.require(r[0] == DiffPoly::constant(1, rat(1, 2)), "r_0");
  o.require(r[1] == U("u"), "r_1");
  o.require(r[2] == U("u_xx + 3*u^2"), "r_2");
  o.require(r[3] == U("u_xxxx + 10*u*u_xx + 5*u_x^2 + 10*u^3"), "r_3");
  return o;
}

Outcome first_integral() {
  Outcome o;
  const int K = 5;
  auto r = resolvent_coeffs(1, K);
  auto computed = first_integral_coeffs(r);
  // Direct expansion: z^{-2m} collects r_a r_b'' - r_a' r_b'/2 + 2u r_a r_b
  // over a + b = m - 1 and -r_a r_b/2 over a + b = m.
  const DiffPoly u = U("u");
  for (int m = 0; m <= K; ++m) {
    DiffPoly c(1);
    for (int a = 0; a + 1 <= m; ++a) {
      const int b = m - 1 - a;
      c += r[a] * total_derivative(total_derivative(r[b], 1), 1) -
           rat(1, 2) * total_derivative(r[a], 1) * total_derivative(r[b], 1) + 2 * u * r[a] * r[b];
    }
    for (int a = 0; a <= m; ++a) c -= rat(1, 2) * r[a] * r[m - a];
    o.require(computed.at(m) == c, "expansion mismatch at z^-" + std::to_string(2 * m));
    const DiffPoly expected = m == 0 ? DiffPoly::constant(1, rat(1, 8)) : DiffPoly(1);
    if (computed.at(m) != expected)
      o.require(false, (m ? "z^-" + std::to_string(2 * m) : std::string("z^0")) + " coefficient is " + render(computed.at(m), Naming::kdv(1)) +
                           ", expected " + render(expected, Naming::kdv(1)));
  }
  return o;
}

Outcome variational_recursion() {
  Outcome o;
  auto r = resolvent_coeffs(1, 5);
  const MultiIndex zero(1), x = MultiIndex::unit(1, 1);
  for (int k = 1; k <= 5; ++k)
    o.require(var_derivative_1d(r[k], zero, 1) == (4 * k - 2) * r[k - 1], "dr_" + std::to_string(k) + "/du");
  HierarchyContext ctx(1, 5);
  for (int k = 1; k <= 5; ++k)
    o.require(var_derivative_1d(ctx.h(k), x, 1) == ctx.g(k), "dh_" + std::to_string(k) + "/dv_x");
  return o;
}

Outcome shifted_variational_identity() {
  Outcome o;
  std::mt19937 rng(2024);
  const PolyShape shape{.dim = 1, .max_order = 4, .max_degree = 3, .max_terms = 4, .pure_x = true};
  int cases = 0;
  for (int k = 0; k < 120; ++k) {
    const DiffPoly f = random_poly(rng, shape);
    for (int order = 0; order < 3; ++order) {
      MultiIndex I(1, {order});
      o.require(total_derivative(var_derivative_1d(f, I.plus(1), 1), 1) ==
                    partial(f, I) - var_derivative_1d(f, I, 1),
                "case " + std::to_string(k) + ", I = x^" + std::to_string(order));
      ++cases;
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases";
  return o;
}

Outcome sine_gordon() {
  Outcome o;
  const LagrangianTwoForm L = sg_two_form();
  o.require(L.get(1, 2) == S("1/2*u_x*u_y - cos(u)"), "L_12");
  o.require(L.get(1, 3) == S("1/2*u_x*u_z - 1/8*u_x^4 + 1/2*u_xx^2"), "L_13");
  o.require(L.get(2, 3) == S("-1/2*u_y*u_z + 1/2*u_x^2*cos(u) + u_xx*(u_xy - sin(u))"), "L_23");
  const DiffPoly dL = total_derivative(L.get(1, 2), 3) - total_derivative(L.get(1, 3), 2) +
                      total_derivative(L.get(2, 3), 1);
  o.require(dL == -S("u_z - 1/2*u_x^3 - u_xxx") * S("u_xy - sin(u)"), "dL factorization");
  const SGReport report = verify_sg(0);
  for (const auto& item : report.checklist) o.require(item.ok(), "checklist: " + item.description);
  o.require(report.el.ok(), "Euler-Lagrange residual");
  o.require(report.symmetry_residual.is_zero(), "variational symmetry");
  auto [M, N] = sg_symmetry_fluxes();
  o.require(prolong_vf(EvolutionaryVF(sg_phi()), L.get(1, 2)) == total_derivative(N, 1) + total_derivative(M, 2),
            "symmetry fluxes");
  o.require(report.closed_sg_only.is_zero() && report.closed_mkdv_only.is_zero(), "closed on either equation");
  return o;
}

Outcome pkdv_equations() {
  Outcome o;
  for (int n : {3, 4}) {
    const HierarchyContext ctx(n, n);
    const ELReport report = classify(el_surfaces(build_two_form(ctx), 0), FlowReducer(ctx.system()), 0);
    const std::string tag = "N = " + std::to_string(n) + ": ";
    o.require(report.count(ELStatus::NonzeroResidual) == 0, tag + "NONZERO-RESIDUAL records");
    std::set<int> flows;
    for (const auto& r : report.records) {
      if (r.status != ELStatus::EvolutionEquation) continue;
      const DiffPoly E = t(n, r.flow) - ctx.g(r.flow);
      const auto& [lead, lc] = E.terms().back();
      o.require(r.equation.residual == E * (r.equation.residual.coefficient(lead) / lc), tag + "evolution record");
      flows.insert(r.flow);
    }
    std::set<int> expected;
    for (int j = 2; j <= n; ++j) expected.insert(j);
    o.require(flows == expected, tag + "evolution-equation set");
    o.detail += (o.detail.empty() ? "" : "; ") + tag + std::to_string(report.records.size()) + " equations";
  }
  return o;
}

Outcome closedness() {
  Outcome o;
  const int n = 4;
  const auto& ctx = ctx4();
  const LagrangianTwoForm L = build_two_form(ctx);
  for (int j = 2; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      const DiffPoly M = total_derivative(L.get(1, j), k) - total_derivative(L.get(1, k), j) +
                         total_derivative(L.get(j, k), 1);
      const DiffPoly Ej = t(n, j) - ctx.g(j), Ek = t(n, k) - ctx.g(k);
      o.require(M == rat(1, 2) * Ej * total_derivative(Ek, 1) - rat(1, 2) * Ek * total_derivative(Ej, 1),
                "factorization of M_1" + std::to_string(j) + std::to_string(k));
    }
  for (std::optional<int> omit : {std::optional<int>{}, std::optional<int>{2}, std::optional<int>{3},
                                  std::optional<int>{4}})
    for (const auto& [triple, r] : closedness_check(L, ctx.system(), omit, 0))
      o.require(r.reduced.is_zero() && r.reduced_dx.is_zero(),
                "omit " + (omit ? std::to_string(*omit) : std::string("none")));
  return o;
}

Outcome a_b_identities() {
  Outcome o;
  const auto& ctx = ctx4();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      o.require(ctx.b(i, j) + ctx.b(j, i) == ctx.g(i) * ctx.g(j), "b_" + ij + " + b_" + std::to_string(j) +
                                                                      std::to_string(i));
      o.require(total_derivative(ctx.b(i, j), 1) == total_derivative(ctx.g(i), 1) * ctx.g(j), "D_x b_" + ij);
      o.require(total_derivative(ctx.h(i), j) + total_derivative(ctx.g(i), 1) * t(4, j) ==
                    total_derivative(ctx.a(i, j), 1),
                "D_x a_" + ij);
    }
  return o;
}

Outcome c_family() {
  Outcome o;
  const auto& ctx = ctx4();
  const int i = 2, j = 3;
  const DiffPoly target_i = rat(1, 2) * t(4, i) * ctx.g(j) + substitute_flow(ctx.a(i, j), ctx, j, i) -
                            ctx.a(j, i) - ctx.b(i, j);
  const DiffPoly target_j = rat(-1, 2) * t(4, j) * ctx.g(i) + ctx.a(i, j) -
                            substitute_flow(ctx.a(j, i), ctx, i, j) + ctx.b(j, i);
  std::mt19937 rng(99);
  for (int n = 0; n < 3; ++n) {
    const Rational c = random_coeff(rng, 20);
    const DiffPoly m = c_family_member(ctx, i, j, c);
    o.require(substitute_flow(m, ctx, j, i) == target_i, "v_t3 -> g_3 at c = " + c.get_str());
    o.require(substitute_flow(m, ctx, i, j) == target_j, "v_t2 -> g_2 at c = " + c.get_str());
  }
  return o;
}

Outcome involutivity() {
  Outcome o;
  const auto& ctx = ctx4();
  const auto matrix = involutivity_matrix(ctx, 4, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      o.require(matrix[i][j], "{h_" + std::to_string(i + 1) + ", h_" + std::to_string(j + 1) + "}");
  for (auto [j, k] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    const BracketChain c = bracket_from_closedness(ctx, j, k);
    const std::string jk = std::to_string(j) + std::to_string(k);
    o.require(c.flux_matches && integral_equals(c.from_closedness, c.flux), "chain " + jk);
    o.require(is_zero_integral(c.difference()), "M_1" + jk + " - {h_j, h_k}");
  }
  std::mt19937 rng(7);
  const PolyShape shape{.dim = 1, .max_order = 3, .max_degree = 3, .max_terms = 3, .pure_x = true};
  for (int n = 0; n < 100; ++n) {
    const FormalIntegral F(random_poly(rng, shape)), G(random_poly(rng, shape));
    const DiffPoly H = random_poly(rng, shape);
    o.require(is_zero_integral(FormalIntegral(poisson_bracket(F, G).representative() +
                                              poisson_bracket(G, F).representative())),
              "antisymmetry");
    o.require(integral_equals(poisson_bracket(FormalIntegral(F.representative() + total_derivative(H, 1)), G),
                              poisson_bracket(F, G)),
              "well-definedness");
  }
  const PolyShape low{.dim = 1, .max_order = 2, .max_degree = 3, .max_terms = 2, .pure_x = true};
  for (int n = 0; n < 20; ++n) {
    const FormalIntegral F(random_poly(rng, low)), G(random_poly(rng, low)), H(random_poly(rng, low));
    const DiffPoly sum = poisson_bracket(poisson_bracket(F, G), H).representative() +
                         poisson_bracket(poisson_bracket(G, H), F).representative() +
                         poisson_bracket(poisson_bracket(H, F), G).representative();
    o.require(is_zero_integral(FormalIntegral(sum)), "Jacobi");
  }
  return o;
}

Outcome bicomplex() {
  Outcome o;
  int forms = 0;
  for (const auto& tally : bicomplex_identity_suite(20240, 240, 3, 0)) {
    o.require(tally.failed == 0, tally.identity + " failed " + std::to_string(tally.failed) + " times");
    forms = tally.checked;
  }
  o.require(forms >= 200, "too few forms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(forms) + " forms per identity";
  return o;
}

Outcome curves_demo() {
  Outcome o;
  const int n = 3;
  const Naming naming = Naming::kdv(n);
  const std::vector<DiffPoly> L = {parse("1/2*u_x^2 + u*u_t2 + u_x*u_t3 - u^3", naming),
                                   parse("u_x*u_t2 + 1/3*u_t3*u_t2 + u^2", naming),
                                   parse("u_x*u_t3 - 1/2*u_t2^2 + 2*u*u_x", naming)};
  const auto eqs = el_curves(L);
  // dL_i/du - D_i dL_i/du_i, dL_i/du_j (j != i), dL_i/du_i - dL_j/du_j.
  std::set<std::string> remaining;
  auto key = [](ELFamily f, std::vector<int> idx, const MultiIndex& I) {
    std::string s = family_name(f) + I.exponent_tuple();
    for (int i : idx) s += "," + std::to_string(i);
    return s;
  };
  std::map<std::string, DiffPoly> expected;
  const MultiIndex zero(n);
  auto e = [&](int i) { return MultiIndex::unit(n, i); };
  for (int i = 1; i <= n; ++i) {
    expected.emplace(key(ELFamily::CurveSingle, {i}, zero),
                     partial(L[i - 1], zero) - total_derivative(partial(L[i - 1], e(i)), i));
    for (int j = 1; j <= n; ++j)
      if (j != i) expected.emplace(key(ELFamily::CurveSingle, {i}, e(j)), partial(L[i - 1], e(j)));
    for (int j = i + 1; j <= n; ++j)
      expected.emplace(key(ELFamily::CurvePair, {i, j}, zero), partial(L[i - 1], e(i)) - partial(L[j - 1], e(j)));
  }
  for (const auto& [k, v] : expected) remaining.insert(k);
  for (const auto& eq : eqs) {
    const std::string k = key(eq.family, eq.indices, eq.I);
    auto it = expected.find(k);
    if (it == expected.end()) {
      o.require(eq.residual.is_zero(), "unexpected nonzero equation " + k);
    } else {
      o.require(eq.residual == it->second, "equation " + k);
      remaining.erase(k);
    }
  }
  o.require(remaining.empty(), "missing equations");
  o.require(same_equations(eqs, first_jet_system(L)), "first_jet_system");
  return o;
}

std::string run_cli_text(const std::vector<std::string>& args, int& status) {
  std::ostringstream out, err;
  status = run_cli(args, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args = {"verify", "pkdv", "--n", "4", "--format", "structured"};
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  const std::string first = run_cli_text(args, s1);
  const std::string second = run_cli_text(args, s2);
  o.require(s1 == 0 && s2 == 0, "verification status");
  o.require(!first.empty() && first == second, "consecutive runs differ");
  const auto dir = std::filesystem::temp_directory_path() / ("pluri-acceptance-cache-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  auto cached = args;
  cached.insert(cached.end(), {"--cache-dir", dir.string()});
  const std::string cold = run_cli_text(cached, s3);
  o.require(std::filesystem::exists(dir / HierarchyContext::cache_file_name(4, 4)), "cache file not written");
  const std::string warm = run_cli_text(cached, s4);
  o.require(s3 == 0 && s4 == 0, "cached verification status");
  o.require(cold == first, "cold cache output differs");
  o.require(warm == cold, "warm cache output differs");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "resolvent table r_0..r_3", "exact", 1, resolvent_table},
      {2, "first-integral normalization (1/8, 0, ..., 0), kmax = 5", "exact", 10, first_integral},
      {3, "dr_k/du = (4k-2) r_{k-1} and dh_k/dv_x = g_k, k = 1..5", "exact", 10, variational_recursion},
      {4, "D_x(df/dv_{Ix}) = (partial f/partial v_I) - df/dv_I, 360 random cases", "exact", 10, shifted_variational_identity},
      {5, "sine-Gordon two-form, dL factorization, checklist, symmetry", "exact", 10, sine_gordon},
      {6, "PKdV Euler-Lagrange classification, N = 3 and 4", "exact", 120, pkdv_equations},
      {7, "M_1jk factorization and closedness with each flow omitted, N = 4", "exact", 60, closedness},
      {8, "b_ij + b_ji = g_i g_j and D_j h_i + D_x(g_i) v_tj = D_x a_ij, i, j <= 4", "exact", 60, a_b_identities},
      {9, "c-family substitution targets for three random c, (i, j) = (2, 3)", "exact", 60, c_family},
      {10, "Hamiltonian involutivity, closedness chain, bracket properties", "exact", 60, involutivity},
      {11, "bicomplex identities on random forms, p <= 2, q <= 3, N = 3", "exact", 60, bicomplex},
      {12, "curve equations of a first-jet one-form", "exact", 10, curves_demo},
      {13, "byte-identical structured output, cold and warm cache", "byte equality", 120, determinism},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  int selected = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++selected;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds)
      o.require(false, "runtime " + std::to_string(seconds) + " s over budget");
    all_pass = all_pass && o.pass;
    std::printf("criterion %02d %s  %s [tolerance: %s; %.2f s of %.0f s]%s%s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.title.c_str(), c.tolerance.c_str(), seconds, c.budget_seconds, o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
  }
  if (selected == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
