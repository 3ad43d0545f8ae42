#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pluri/diff_poly.hpp"

namespace pluri {

/// D_i: total derivative in coordinate i (1 = x).
DiffPoly total_derivative(const DiffPoly& p, int coord);

/// D_I, applied coordinate by coordinate.
DiffPoly total_derivative(const DiffPoly& p, const MultiIndex& I);

/// Formal partial derivative by the jet variable u_var. With var = 0 the
/// trig factors are differentiated as well.
DiffPoly partial(const DiffPoly& p, const JetVar& var);

/// sum_a (-1)^a D_i^a dp/du_{I i^a}.
DiffPoly var_derivative_1d(const DiffPoly& p, const MultiIndex& I, int i);

/// sum_{a,b} (-1)^{a+b} D_i^a D_j^b dp/du_{I i^a j^b}.
DiffPoly var_derivative_2d(const DiffPoly& p, const MultiIndex& I, int i, int j);

/// The classical Euler operator, var_derivative_1d(p, 0, x).
DiffPoly euler_operator(const DiffPoly& p);

/// q with D_x q = p and no constant term.
///
/// Throws DimensionError unless p is pure-x, NotExact when p has a constant
/// term, a trig factor, nonzero Euler operator, or no polynomial
/// antiderivative.
DiffPoly x_antiderivative(const DiffPoly& p);

/// Evolutionary vector field with characteristic phi; its prolongation acts
/// as sum_I (D_I phi) d/du_I.
class EvolutionaryVF {
 public:
  explicit EvolutionaryVF(DiffPoly phi) : phi_(std::move(phi)) {}

  const DiffPoly& characteristic() const { return phi_; }

  /// D_I phi.
  DiffPoly coefficient(const MultiIndex& I) const;

 private:
  DiffPoly phi_;
};

DiffPoly prolong_vf(const EvolutionaryVF& vf, const DiffPoly& p);

/// Flows u_{t_j} = g_j, j >= 2, with pure-x right-hand sides.
class EvolutionSystem {
 public:
  explicit EvolutionSystem(int dim) : dim_(dim) {}

  void set_flow(int j, DiffPoly rhs);
  const DiffPoly* flow(int j) const;
  std::vector<int> times() const;
  int dim() const { return dim_; }

  /// u_{t_j} - g_j.
  DiffPoly equation(int j) const;

 private:
  int dim_;
  std::map<int, DiffPoly> rhs_;
};

/// Rewriting of jet variables into a normal form. Each reducible variable
/// is replaced by a fully reduced polynomial, memoized per variable; the
/// memo is shared and thread-safe.
class Reducer {
 public:
  virtual ~Reducer() = default;

  DiffPoly reduce(const DiffPoly& p) const;

  /// The generating relations, as (label, lhs - rhs). The label is the
  /// time index the relation eliminates.
  virtual std::vector<std::pair<int, DiffPoly>> equations() const = 0;

 protected:
  /// Replacement for var in terms of (possibly still reducible) variables,
  /// or nullopt when var is already in normal form.
  virtual std::optional<DiffPoly> rewrite(const JetVar& var) const = 0;

  /// Fully reduced replacement for var, or null when var is irreducible.
  std::shared_ptr<const DiffPoly> reduced_var(const JetVar& var) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<JetVar, std::shared_ptr<const DiffPoly>> memo_;
};

/// Which flow eliminates a variable carrying several eliminable times.
enum class ElimOrder { LargestFirst, SmallestFirst };

/// Elimination of time derivatives through an EvolutionSystem and all its
/// prolongations. Time indices in `keep` are left in place; any other time
/// index without a flow raises UnknownFlow.
class FlowReducer : public Reducer {
 public:
  explicit FlowReducer(EvolutionSystem sys, ElimOrder order = ElimOrder::LargestFirst,
                       std::set<int> keep = {});

  const EvolutionSystem& system() const { return sys_; }
  std::vector<std::pair<int, DiffPoly>> equations() const override;

 protected:
  std::optional<DiffPoly> rewrite(const JetVar& var) const override;

 private:
  bool eliminable(int coord) const;

  EvolutionSystem sys_;
  ElimOrder order_;
  std::set<int> keep_;
};

DiffPoly reduce_mod_system(const DiffPoly& p, const EvolutionSystem& sys,
                           ElimOrder order = ElimOrder::LargestFirst);

}  // namespace pluri
