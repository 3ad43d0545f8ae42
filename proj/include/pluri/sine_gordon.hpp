#pragma once

#include <string>
#include <vector>

#include "pluri/euler_lagrange.hpp"
#include "pluri/kdv_hierarchy.hpp"
#include "pluri/naming.hpp"
#include "pluri/operators.hpp"

namespace pluri {

/// Coordinates (x, y, z) = (t_1, t_2, t_3) with the trig extension in u.
Naming sg_naming();

/// L_12 = u_x u_y/2 - cos u, L_13 = u_x u_z/2 - u_x^4/8 + u_xx^2/2,
/// L_23 = -u_y u_z/2 + u_x^2 cos(u)/2 + u_xx (u_xy - sin u).
LagrangianTwoForm sg_two_form();

/// u_xxx + u_x^3/2, the right-hand side of the z-flow.
DiffPoly sg_phi();

/// Rewriting by u_z -> u_xxx + u_x^3/2 (label 3) and u_xy -> sin u (label 2),
/// with their prolongations. Either rule can be switched off.
///
/// The z rule removes every z-derivative first; the mixed rule then removes
/// every u_{x^a y^b z^c} with a, b >= 1.
class SineGordonReducer : public Reducer {
 public:
  explicit SineGordonReducer(bool mixed_rule = true, bool z_rule = true)
      : mixed_rule_(mixed_rule), z_rule_(z_rule) {}

  std::vector<std::pair<int, DiffPoly>> equations() const override;

 protected:
  std::optional<DiffPoly> rewrite(const JetVar& var) const override;

 private:
  bool mixed_rule_;
  bool z_rule_;
};

/// D_phi L - D_x N - D_y M.
DiffPoly variational_symmetry_residual(const DiffPoly& phi, const DiffPoly& L, const DiffPoly& M,
                                       const DiffPoly& N);
/// The flux pair (M, N) of the z-flow as a symmetry of L_12.
std::pair<DiffPoly, DiffPoly> sg_symmetry_fluxes();

struct ChecklistItem {
  std::string description;
  DiffPoly computed;
  DiffPoly expected;
  DiffPoly reduced;  ///< computed, rewritten by the full sine-Gordon system
  bool ok() const { return computed == expected && reduced.is_zero(); }
};

/// The individual variational derivatives and pairwise relations of the
/// sine-Gordon two-form, each with its expected closed form.
std::vector<ChecklistItem> sg_checklist();

struct SGReport {
  ELReport el;
  std::vector<ChecklistItem> checklist;
  DiffPoly dL;
  DiffPoly dL_expected;
  DiffPoly symmetry_residual;
  DiffPoly closed_both;      ///< M_123 modulo both equations
  DiffPoly closed_sg_only;   ///< modulo u_xy = sin u
  DiffPoly closed_mkdv_only; ///< modulo u_z = u_xxx + u_x^3/2

  bool ok() const;
};

SGReport verify_sg(int jobs = 1);

}  // namespace pluri
