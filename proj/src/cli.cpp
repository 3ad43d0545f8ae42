#include "pluri/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <set>
#include <sstream>

#include "pluri/bicomplex.hpp"
#include "pluri/errors.hpp"
#include "pluri/euler_lagrange.hpp"
#include "pluri/hamiltonian.hpp"
#include "pluri/kdv_hierarchy.hpp"
#include "pluri/parallel.hpp"
#include "pluri/sine_gordon.hpp"

namespace pluri {

namespace {

struct RunConfig {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> omit;
  std::string format = "text";
  std::string cache_dir;
  int jobs = 0;
  std::uint64_t seed = 1;

  bool structured() const { return format == "structured"; }
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::optional<std::filesystem::path> cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("PLURI_CACHE_DIR"); env && *env) return env;
  return std::nullopt;
}

HierarchyContext context(const RunConfig& cfg, int n, int kmax) {
  if (auto dir = cache_dir(cfg)) return HierarchyContext::load_or_build(n, kmax, *dir);
  return HierarchyContext(n, kmax);
}

const char* pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

std::string triple_name(const Triple& t) {
  return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const int kmax = cfg.k.value_or(3);
  if (kmax < 0) throw UsageError("--k must be non-negative");
  if (cfg.n && *cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.n && kmax < *cfg.n) throw UsageError("two-form coefficients need --k >= --n");
  const int n = cfg.n.value_or(1);
  const HierarchyContext ctx = context(cfg, n, kmax);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int k = 1; k <= kmax; ++k) rows.emplace_back("g_" + std::to_string(k), render(ctx.g(k), ctx.v_naming()));
  for (int k = 1; k <= kmax; ++k) rows.emplace_back("h_" + std::to_string(k), render(ctx.h(k), ctx.v_naming()));
  if (cfg.n) {
    const LagrangianTwoForm form = build_two_form(ctx);
    for (const auto& [ij, L] : form.table())
      rows.emplace_back("L_" + std::to_string(ij.first) + std::to_string(ij.second), render(L, ctx.v_naming()));
  }
  for (int k = 0; k <= kmax; ++k) rows.emplace_back("r_" + std::to_string(k), render(ctx.r(k), ctx.u_naming()));
  if (cfg.structured()) {
    out << "format pluri-generate 1\n";
    for (const auto& [name, value] : rows) out << "entry\tname=" << name << "\tvalue=" << value << "\n";
    out << "summary\tk=" << kmax << "\tn=" << (cfg.n ? std::to_string(n) : "none") << "\n";
  } else {
    for (const auto& [name, value] : rows) out << name << " = " << value << "\n";
  }
  return 0;
}

int cmd_verify_pkdv(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n.value_or(3);
  if (n < 3) throw UsageError("surface equations need --n >= 3");
  const int kmax = cfg.k.value_or(n);
  if (kmax < n) throw UsageError("PKdV verification needs --k >= --n");
  if (cfg.omit && (*cfg.omit < 2 || *cfg.omit > n)) throw UsageError("--omit must name a flow 2..n");
  const int jobs = resolve_jobs(cfg.jobs);

  const HierarchyContext ctx = context(cfg, n, kmax);
  const LagrangianTwoForm L = build_two_form(ctx);
  const EvolutionSystem sys = ctx.system();
  const ELReport report = classify(el_surfaces(L, jobs), FlowReducer(sys), jobs);
  const auto closed = closedness_check(L, sys, cfg.omit, jobs);

  std::vector<int> expected_flows;
  for (int j = 2; j <= n; ++j) expected_flows.push_back(j);
  const bool flows_ok = report.evolution_flows() == expected_flows;
  bool closed_ok = true;
  for (const auto& [t, r] : closed) closed_ok = closed_ok && r.reduced.is_zero() && r.reduced_dx.is_zero();
  const bool ok = report.ok() && flows_ok && closed_ok;
  const std::string omit = cfg.omit ? std::to_string(*cfg.omit) : "none";
  const Naming naming = ctx.v_naming();

  if (cfg.structured()) {
    out << serialize(report, naming);
    for (const auto& [t, r] : closed)
      out << "closedness\ttriple=" << t[0] << "," << t[1] << "," << t[2] << "\tomit=" << omit
          << "\treduced=" << render(r.reduced, naming) << "\treduced_dx=" << render(r.reduced_dx, naming) << "\n";
    out << "result\tn=" << n << "\tk=" << kmax << "\tevolution-flows=" << pass_fail(flows_ok)
        << "\tclosedness=" << pass_fail(closed_ok) << "\tstatus=" << pass_fail(ok) << "\n";
  } else {
    out << "PKdV two-form, N = " << n << ", kmax = " << kmax << "\n";
    out << "equations: " << report.records.size() << " (identically-zero "
        << report.count(ELStatus::IdenticallyZero) << ", evolution-equation "
        << report.count(ELStatus::EvolutionEquation) << ", consequence-of-flows "
        << report.count(ELStatus::ConsequenceOfFlows) << ", NONZERO-RESIDUAL "
        << report.count(ELStatus::NonzeroResidual) << ")\n";
    out << "evolution equations for flows:";
    for (int j : report.evolution_flows()) out << " " << j;
    out << " [" << pass_fail(flows_ok) << "]\n";
    for (const auto& r : report.records)
      if (r.status == ELStatus::NonzeroResidual)
        out << "  NONZERO-RESIDUAL " << family_name(r.equation.family) << " I=" << r.equation.I.exponent_tuple()
            << ": " << render(r.reduced, naming) << "\n";
    out << "closedness, omitted flow " << omit << ":\n";
    for (const auto& [t, r] : closed)
      out << "  M_" << triple_name(t) << " -> " << render(r.reduced, naming) << ", D_x M_" << triple_name(t)
          << " -> " << render(r.reduced_dx, naming) << "\n";
    out << "result: " << pass_fail(ok) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify_sg(const RunConfig& cfg, std::ostream& out) {
  const SGReport r = verify_sg(resolve_jobs(cfg.jobs));
  const Naming naming = sg_naming();
  const bool dL_ok = r.dL == r.dL_expected;
  if (cfg.structured()) {
    out << "format pluri-sine-gordon-report 1\n";
    for (const auto& item : r.checklist)
      out << "check\tdescription=" << item.description << "\tcomputed=" << render(item.computed, naming)
          << "\texpected=" << render(item.expected, naming) << "\treduced=" << render(item.reduced, naming)
          << "\tstatus=" << pass_fail(item.ok()) << "\n";
    out << "dL\tcomputed=" << render(r.dL, naming) << "\texpected=" << render(r.dL_expected, naming)
        << "\tstatus=" << pass_fail(dL_ok) << "\n";
    out << "symmetry\tresidual=" << render(r.symmetry_residual, naming) << "\n";
    out << "closedness\tboth=" << render(r.closed_both, naming) << "\tsine-gordon=" << render(r.closed_sg_only, naming)
        << "\tmkdv=" << render(r.closed_mkdv_only, naming) << "\n";
    out << "el\tequations=" << r.el.records.size() << "\tNONZERO-RESIDUAL=" << r.el.count(ELStatus::NonzeroResidual)
        << "\n";
    out << "result\tstatus=" << pass_fail(r.ok()) << "\n";
  } else {
    out << "sine-Gordon two-form\n";
    for (const auto& item : r.checklist)
      out << "  [" << pass_fail(item.ok()) << "] " << item.description << " = " << render(item.computed, naming) << "\n";
    out << "dL_123 = " << render(r.dL, naming) << "\n";
    out << "       = -(u_z - 1/2*u_x^3 - u_xxx)*(u_xy - sin(u)) [" << pass_fail(dL_ok) << "]\n";
    out << "variational symmetry residual: " << render(r.symmetry_residual, naming) << "\n";
    out << "dL_123 modulo both equations: " << render(r.closed_both, naming) << ", modulo sine-Gordon only: "
        << render(r.closed_sg_only, naming) << ", modulo mKdV only: " << render(r.closed_mkdv_only, naming) << "\n";
    out << "Euler-Lagrange equations: " << r.el.records.size() << ", NONZERO-RESIDUAL "
        << r.el.count(ELStatus::NonzeroResidual) << "\n";
    out << "result: " << pass_fail(r.ok()) << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_curves_demo(const RunConfig& cfg, std::ostream& out) {
  const Naming naming = Naming::kdv(3);
  const std::vector<DiffPoly> L = {parse("1/2*u_x^2 + u*u_t2 + u_x*u_t3 - u^3", naming),
                                   parse("u_x*u_t2 + 1/3*u_t3*u_t2 + u^2", naming),
                                   parse("u_x*u_t3 - 1/2*u_t2^2 + 2*u*u_x", naming)};
  const auto eqs = el_curves(L, resolve_jobs(cfg.jobs));
  const bool ok = same_equations(eqs, first_jet_system(L));
  if (cfg.structured()) out << "format pluri-curves-demo 1\n";
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (cfg.structured())
      out << "lagrangian\ti=" << i + 1 << "\tvalue=" << render(L[i], naming) << "\n";
    else
      out << "L_" << i + 1 << " = " << render(L[i], naming) << "\n";
  }
  for (const auto& eq : eqs) {
    if (eq.residual.is_zero()) continue;
    std::string idx;
    for (int i : eq.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    if (cfg.structured())
      out << "equation\tfamily=" << family_name(eq.family) << "\tindices=" << idx << "\tI=" << eq.I.exponent_tuple()
          << "\tresidual=" << render(eq.residual, naming) << "\n";
    else
      out << "  " << family_name(eq.family) << " (" << idx << ") I=" << eq.I.exponent_tuple() << ": "
          << render(eq.residual, naming) << " = 0\n";
  }
  if (cfg.structured())
    out << "result\tmatches-first-jet-system=" << pass_fail(ok) << "\n";
  else
    out << "matches the first-jet system: " << pass_fail(ok) << "\n";
  return ok ? 0 : 1;
}

int cmd_involutivity(const RunConfig& cfg, std::ostream& out) {
  const int kmax = cfg.k.value_or(4);
  if (kmax < 1) throw UsageError("--k must be at least 1");
  const int jobs = resolve_jobs(cfg.jobs);
  const int n = std::max(kmax, 1);
  const HierarchyContext ctx = context(cfg, n, kmax);
  const auto matrix = involutivity_matrix(ctx, kmax, jobs);
  bool ok = true;
  for (const auto& row : matrix)
    for (bool e : row) ok = ok && e;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 2; j <= kmax; ++j)
    for (int k = j + 1; k <= kmax; ++k) pairs.emplace_back(j, k);
  auto chains = parallel_map(pairs.size(), jobs, [&](std::size_t p) {
    BracketChain c = bracket_from_closedness(ctx, pairs[p].first, pairs[p].second);
    return c.flux_matches && is_zero_integral(c.difference());
  });
  for (bool c : chains) ok = ok && c;

  if (cfg.structured()) {
    out << "format pluri-involutivity 1\n";
    for (int i = 1; i <= kmax; ++i)
      for (int j = 1; j <= kmax; ++j)
        out << "bracket\ti=" << i << "\tj=" << j << "\tzero=" << (matrix[i - 1][j - 1] ? "true" : "false") << "\n";
    for (std::size_t p = 0; p < pairs.size(); ++p)
      out << "chain\tj=" << pairs[p].first << "\tk=" << pairs[p].second << "\tstatus=" << pass_fail(chains[p]) << "\n";
    out << "result\tk=" << kmax << "\tstatus=" << pass_fail(ok) << "\n";
  } else {
    out << "{h_i, h_j} = 0 (1 = yes)\n    ";
    for (int j = 1; j <= kmax; ++j) out << " " << j;
    out << "\n";
    for (int i = 1; i <= kmax; ++i) {
      out << "  " << i << " ";
      for (int j = 1; j <= kmax; ++j) out << " " << (matrix[i - 1][j - 1] ? 1 : 0);
      out << "\n";
    }
    for (std::size_t p = 0; p < pairs.size(); ++p)
      out << "M_1" << pairs[p].first << pairs[p].second << " = {h_" << pairs[p].first << ", h_" << pairs[p].second
          << "} modulo x-derivatives and flows [" << pass_fail(chains[p]) << "]\n";
    out << "result: " << pass_fail(ok) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_bicomplex(const RunConfig& cfg, std::ostream& out) {
  const int dim = cfg.n.value_or(3);
  if (dim < 1 || dim > MultiIndex::kMaxDim) throw UsageError("--n out of range");
  constexpr int kForms = 240;
  const auto tallies = bicomplex_identity_suite(cfg.seed, kForms, dim, resolve_jobs(cfg.jobs));
  bool ok = true;
  if (cfg.structured()) out << "format pluri-bicomplex 1\n";
  for (const auto& t : tallies) {
    ok = ok && t.failed == 0;
    if (cfg.structured())
      out << "identity\tname=" << t.identity << "\tchecked=" << t.checked << "\tfailed=" << t.failed << "\n";
    else
      out << t.identity << ": " << t.checked - t.failed << "/" << t.checked << " [" << pass_fail(t.failed == 0)
          << "]\n";
  }
  if (cfg.structured())
    out << "result\tseed=" << cfg.seed << "\tdim=" << dim << "\tstatus=" << pass_fail(ok) << "\n";
  else
    out << "seed " << cfg.seed << ", dimension " << dim << ", result: " << pass_fail(ok) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pluri-Lagrangian PKdV toolkit", "pluri"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--n", cfg.n, "Multi-time dimension N");
  app.add_option("--k", cfg.k, "Highest hierarchy index kmax");
  app.add_option("--omit", cfg.omit, "Flow left out of the closedness check");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Polynomial cache directory (default: $PLURI_CACHE_DIR)");
  app.add_option("--jobs", cfg.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Random seed for bicomplex-props");

  auto* generate = app.add_subcommand("generate", "Print r_k, g_k, h_k and, with --n, L_ij");
  auto* verify = app.add_subcommand("verify", "Verify a pluri-Lagrangian system");
  verify->require_subcommand(1);
  auto* pkdv = verify->add_subcommand("pkdv", "PKdV two-form: Euler-Lagrange equations and closedness");
  auto* sg = verify->add_subcommand("sine-gordon", "Sine-Gordon two-form");
  auto* curves = verify->add_subcommand("curves-demo", "Curve equations of a first-jet one-form");
  auto* involutivity = app.add_subcommand("involutivity", "Poisson brackets of the Hamiltonians");
  auto* bicomplex = app.add_subcommand("bicomplex-props", "Variational bicomplex identities on random forms");
  for (auto* sub : {generate, verify, pkdv, sg, curves, involutivity, bicomplex}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, out);
    if (pkdv->parsed()) return cmd_verify_pkdv(cfg, out);
    if (sg->parsed()) return cmd_verify_sg(cfg, out);
    if (curves->parsed()) return cmd_curves_demo(cfg, out);
    if (involutivity->parsed()) return cmd_involutivity(cfg, out);
    if (bicomplex->parsed()) return cmd_bicomplex(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pluri
