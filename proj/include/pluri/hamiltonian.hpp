#pragma once

#include <vector>

#include "pluri/diff_poly.hpp"
#include "pluri/kdv_hierarchy.hpp"
#include "pluri/operators.hpp"

namespace pluri {

/// A pure-x differential polynomial standing for its class modulo
/// x-derivatives and constants.
class FormalIntegral {
 public:
  /// Throws MixedDirections unless the representative is pure-x.
  explicit FormalIntegral(DiffPoly representative);

  const DiffPoly& representative() const { return rep_; }

 private:
  DiffPoly rep_;
};

/// Equal classes: the difference has zero Euler operator and no constant term.
bool integral_equals(const FormalIntegral& F, const FormalIntegral& G);
bool is_zero_integral(const FormalIntegral& F);

/// {F, G} = (D_x dF/du) dG/du.
FormalIntegral poisson_bracket(const FormalIntegral& F, const FormalIntegral& G);

/// The same bracket written for densities in the potential v (u = v_x):
/// -(dF/dv)(dG/dv_x). Throws MixedDirections if v itself occurs.
FormalIntegral potential_bracket(const FormalIntegral& F, const FormalIntegral& G);

/// entry (i-1, j-1): {h_i, h_j} = 0, brackets taken in the u convention.
std::vector<std::vector<bool>> involutivity_matrix(const HierarchyContext& ctx, int kmax, int jobs = 1);

struct BracketChain {
  FormalIntegral from_closedness;  ///< -D_j L_1k + D_k L_1j modulo the flows
  FormalIntegral flux;             ///< g_k D_x g_j
  FormalIntegral bracket;          ///< {h_j, h_k}
  bool flux_matches;               ///< flux == bracket as classes
  /// from_closedness - bracket; zero when the chain holds.
  FormalIntegral difference() const;
};

BracketChain bracket_from_closedness(const LagrangianTwoForm& L, const EvolutionSystem& sys,
                                     const DiffPoly& h_j, const DiffPoly& h_k, int j, int k);
BracketChain bracket_from_closedness(const HierarchyContext& ctx, int j, int k);

}  // namespace pluri
