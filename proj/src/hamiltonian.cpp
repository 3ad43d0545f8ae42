#include "pluri/hamiltonian.hpp"

#include "pluri/errors.hpp"
#include "pluri/parallel.hpp"

namespace pluri {

FormalIntegral::FormalIntegral(DiffPoly representative) : rep_(std::move(representative)) {
  if (!rep_.is_pure_x()) throw MixedDirections("formal integral of a polynomial with time derivatives");
}

bool integral_equals(const FormalIntegral& F, const FormalIntegral& G) {
  return is_zero_integral(FormalIntegral(F.representative() - G.representative()));
}

bool is_zero_integral(const FormalIntegral& F) {
  return F.representative().constant_term() == 0 && euler_operator(F.representative()).is_zero();
}

FormalIntegral poisson_bracket(const FormalIntegral& F, const FormalIntegral& G) {
  return FormalIntegral(total_derivative(euler_operator(F.representative()), 1) *
                        euler_operator(G.representative()));
}

FormalIntegral potential_bracket(const FormalIntegral& F, const FormalIntegral& G) {
  for (const auto* p : {&F.representative(), &G.representative()})
    for (const JetVar& v : p->variables())
      if (v.is_zero()) throw MixedDirections("potential bracket of a density depending on v");
  const int dim = std::max(F.representative().dim(), G.representative().dim());
  return FormalIntegral(-(euler_operator(F.representative()) *
                          var_derivative_1d(G.representative(), MultiIndex::unit(dim, 1), 1)));
}

std::vector<std::vector<bool>> involutivity_matrix(const HierarchyContext& ctx, int kmax, int jobs) {
  std::vector<FormalIntegral> h;
  for (int i = 1; i <= kmax; ++i) h.emplace_back(shift_from_potential(ctx.h(i)));
  const auto n = static_cast<std::size_t>(kmax);
  auto flat = parallel_map(n * n, jobs, [&](std::size_t k) {
    return is_zero_integral(poisson_bracket(h[k / n], h[k % n]));
  });
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
  for (std::size_t k = 0; k < n * n; ++k) out[k / n][k % n] = flat[k];
  return out;
}

FormalIntegral BracketChain::difference() const {
  return FormalIntegral(from_closedness.representative() - bracket.representative());
}

BracketChain bracket_from_closedness(const LagrangianTwoForm& L, const EvolutionSystem& sys,
                                     const DiffPoly& h_j, const DiffPoly& h_k, int j, int k) {
  FlowReducer reducer(sys);
  DiffPoly a = reducer.reduce(total_derivative(L.get(1, j), k) - total_derivative(L.get(1, k), j));
  DiffPoly g_j = var_derivative_1d(h_j, MultiIndex::unit(L.dim(), 1), 1);
  DiffPoly g_k = var_derivative_1d(h_k, MultiIndex::unit(L.dim(), 1), 1);
  FormalIntegral flux(g_k * total_derivative(g_j, 1));
  FormalIntegral bracket = potential_bracket(FormalIntegral(h_j), FormalIntegral(h_k));
  return {FormalIntegral(a), flux, bracket, integral_equals(flux, bracket)};
}

BracketChain bracket_from_closedness(const HierarchyContext& ctx, int j, int k) {
  return bracket_from_closedness(build_two_form(ctx), ctx.system(), ctx.h(j), ctx.h(k), j, k);
}

}  // namespace pluri
