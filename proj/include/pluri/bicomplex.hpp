#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pluri/diff_poly.hpp"
#include "pluri/naming.hpp"
#include "pluri/operators.hpp"

namespace pluri {

/// coeff * du_{I_1} ^ ... ^ du_{I_p} ^ dt_{j_1} ^ ... ^ dt_{j_q}, vertical
/// generators first, both lists strictly increasing.
struct FormTerm {
  DiffPoly coeff;
  std::vector<MultiIndex> vertical;
  std::vector<int> horizontal;
};

/// A (p,q)-form of the variational bicomplex over an N-dimensional
/// multi-time. Terms with equal generator lists are merged; zero
/// coefficients are dropped, so equality is structural.
class BiForm {
 public:
  BiForm(int dim, int p, int q);

  static BiForm function(const DiffPoly& f, int dim);
  /// coeff times the wedge of the given generators in the given order; the
  /// sign of the sorting permutation is absorbed, repeats give zero.
  static BiForm term(const DiffPoly& coeff, std::vector<MultiIndex> vertical,
                     std::vector<int> horizontal, int dim);

  int dim() const { return dim_; }
  int p() const { return p_; }
  int q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<FormTerm> terms() const;

  BiForm& operator+=(const BiForm& other);
  BiForm& operator-=(const BiForm& other);
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(const DiffPoly& f, const BiForm& w);
  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  using Key = std::pair<std::vector<MultiIndex>, std::vector<int>>;
  void add(const Key& key, const DiffPoly& coeff);

  int dim_;
  int p_;
  int q_;
  std::map<Key, DiffPoly> terms_;
};

/// Graded-commutative product; the sign follows the total degree p + q.
BiForm wedge(const BiForm& a, const BiForm& b);

/// Horizontal derivative, (p,q) -> (p,q+1): df = sum_j D_j f dt_j,
/// d(du_I) = -sum_j du_{Ij} ^ dt_j, d(dt_j) = 0.
BiForm d_horizontal(const BiForm& w);

/// Vertical derivative, (p,q) -> (p+1,q): df = sum_I df/du_I du_I,
/// d(du_I) = 0, d(dt_j) = 0.
BiForm delta_vertical(const BiForm& w);

/// Interior product with the prolonged field: du_I -> D_I phi, dt_j -> 0.
/// (p,q) -> (p-1,q); a form with p = 0 contracts to the zero (0,q)-form.
BiForm contract(const EvolutionaryVF& vf, const BiForm& w);

/// D_i acting on coefficients and on each vertical generator du_I -> du_{Ii}.
BiForm total_derivative(const BiForm& w, int coord);

std::string render(const BiForm& w, const Naming& naming);

struct IdentityTally {
  std::string identity;
  int checked = 0;
  int failed = 0;
};

/// d^2 = 0, delta^2 = 0, d delta + delta d = 0, D_i delta = delta D_i and
/// d contract + contract d = 0 on `forms` random forms with p <= 2, q <= 3,
/// cycling through the (p,q) bidegrees. Form k is drawn from seed + k.
std::vector<IdentityTally> bicomplex_identity_suite(std::uint64_t seed, int forms, int dim = 3, int jobs = 1);

}  // namespace pluri
