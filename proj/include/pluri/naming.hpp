#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pluri/diff_poly.hpp"

namespace pluri {

/// Display names for the field and the coordinates t_1..t_N.
///
/// Rendering writes a jet variable as the field name followed by derivative
/// subscripts in coordinate order: "u", "u_x", "u_xx", "u_t2", "u_x,t2".
/// When every coordinate name is a single letter the groups are written
/// without commas ("u_xxy").
struct Naming {
  std::string field = "u";
  std::vector<std::string> coords;

  /// x, t2, ..., tN.
  static Naming kdv(int dim, std::string field = "u");
  /// x, y, z.
  static Naming xyz(std::string field = "u");

  int dim() const { return static_cast<int>(coords.size()); }
};

std::string render(const JetVar& var, const Naming& naming);
std::string render(const Monomial& m, const Naming& naming);

/// Canonical text: monomials highest first, factors by jet order, unit
/// coefficients omitted, "0" for the zero polynomial. Equal polynomials
/// render identically.
std::string render(const DiffPoly& p, const Naming& naming);

/// Parse the canonical rendering (and, more generally, sums and products
/// with parentheses, integer powers, rationals, sin(u), cos(u)).
DiffPoly parse(std::string_view text, const Naming& naming);

}  // namespace pluri
