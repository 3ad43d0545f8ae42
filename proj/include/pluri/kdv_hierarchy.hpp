#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pluri/diff_poly.hpp"
#include "pluri/naming.hpp"
#include "pluri/operators.hpp"

namespace pluri {

/// Antisymmetric table of two-form coefficients L_ij, i < j; L_ji = -L_ij
/// and L_ii = 0 on access.
class LagrangianTwoForm {
 public:
  explicit LagrangianTwoForm(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  DiffPoly get(int i, int j) const;
  void set(int i, int j, DiffPoly value);

  /// Stored coefficients with i < j, in index order.
  const std::map<std::pair<int, int>, DiffPoly>& table() const { return table_; }

 private:
  int dim_;
  std::map<std::pair<int, int>, DiffPoly> table_;
};

/// u_{x^m} -> v_{x^{m+1}} on a pure-x polynomial.
DiffPoly shift_to_potential(const DiffPoly& p);
/// v_{x^{m+1}} -> u_{x^m}; throws MixedDirections if v itself or a time
/// derivative occurs.
DiffPoly shift_from_potential(const DiffPoly& p);

/// r_0 .. r_kmax from D_x r_{k+1} = r_k''' + 4u r_k' + 2u_x r_k, r_0 = 1/2.
std::vector<DiffPoly> resolvent_coeffs(int dim, int kmax);

/// Coefficients of z^0, z^-2, .., z^-2K of R R_xx - R_x^2/2 + 2(u - z^2/4) R^2
/// for R = sum r_k z^{-2k-1}, K = r.size() - 1.
std::vector<DiffPoly> first_integral_coeffs(const std::vector<DiffPoly>& r);

/// a_ij = sum_a v_{x^a t_j} dh_i/dv_{x^{a+1}} (variational derivatives in x).
DiffPoly compute_a(const DiffPoly& h_i, int j);
/// x-antiderivative of D_x(g_i) g_j.
DiffPoly compute_b(const DiffPoly& g_i, const DiffPoly& g_j);

/// r_k, g_k, h_k, a_ij, b_ij for a multi-time of dimension n.
///
/// r and g are kept through kmax + 1 (h_kmax needs g_{kmax+1}); h, a and b
/// for indices 1..kmax. All polynomials live in dimension n; r uses the
/// u naming, the rest the v naming.
class HierarchyContext {
 public:
  HierarchyContext(int n, int kmax);

  /// Reuses a cache file under dir when present and valid, else builds and
  /// writes one.
  static HierarchyContext load_or_build(int n, int kmax, const std::filesystem::path& dir);

  int n() const { return n_; }
  int kmax() const { return kmax_; }

  const DiffPoly& r(int k) const { return r_.at(k); }
  const DiffPoly& g(int k) const { return g_.at(k); }
  const DiffPoly& h(int k) const { return h_.at(k - 1); }
  const DiffPoly& a(int i, int j) const { return a_.at({i, j}); }
  const DiffPoly& b(int i, int j) const { return b_.at({i, j}); }

  /// v_{t_j} = g_j for 2 <= j <= n.
  EvolutionSystem system() const;

  Naming u_naming() const { return Naming::kdv(n_, "u"); }
  Naming v_naming() const { return Naming::kdv(n_, "v"); }

  static std::string cache_file_name(int n, int kmax);
  /// Serialized form; parse_cache returns nullopt on any format or
  /// invariant violation.
  std::string to_cache() const;
  static std::optional<HierarchyContext> parse_cache(const std::string& text, int n, int kmax);

 private:
  HierarchyContext() = default;
  void derive_from_r();

  int n_ = 0;
  int kmax_ = 0;
  std::vector<DiffPoly> r_;
  std::vector<DiffPoly> g_;
  std::vector<DiffPoly> h_;
  std::map<std::pair<int, int>, DiffPoly> a_;
  std::map<std::pair<int, int>, DiffPoly> b_;
};

/// L_1i = v_x v_{t_i}/2 - h_i and
/// L_ij = (v_{t_i} g_j - v_{t_j} g_i)/2 + (a_ij - a_ji) - (b_ij - b_ji)/2.
LagrangianTwoForm build_two_form(const HierarchyContext& ctx);

/// c v_{t_i} v_{t_j} + (a_ij - a_ji) + (1/2 - c) v_{t_i} g_j - (1/2 + c) v_{t_j} g_i
///   + (b_ji - b_ij)/2 + c g_i g_j.
DiffPoly c_family_member(const HierarchyContext& ctx, int i, int j, const Rational& c);

/// p with v_{t_flow} -> g_flow and its prolongations substituted; the time
/// index `keep` is left alone.
DiffPoly substitute_flow(const DiffPoly& p, const HierarchyContext& ctx, int flow, int keep);

}  // namespace pluri
