#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pluri/diff_poly.hpp"
#include "pluri/kdv_hierarchy.hpp"
#include "pluri/naming.hpp"
#include "pluri/operators.hpp"

namespace pluri {

/// Equation families of the multi-time Euler-Lagrange system.
///
///   CurveSingle    dL_i/du_I = 0 (direction i), I without i
///   CurvePair      dL_i/du_{Ii} = dL_j/du_{Ij}
///   SurfaceSingle  dL_ij/du_I = 0 (directions i,j), I without i, j
///   SurfacePair    dL_ij/du_{Ij} = dL_ik/du_{Ik}, I without i
///   SurfaceTriple  dL_ij/du_{Iij} + dL_jk/du_{Ijk} + dL_ki/du_{Iki} = 0
enum class ELFamily { CurveSingle, CurvePair, SurfaceSingle, SurfacePair, SurfaceTriple };

std::string family_name(ELFamily f);

struct ELEquation {
  ELFamily family;
  /// (i), (i,j), (i,j) or (i,j,k); for SurfacePair the shared index first.
  std::vector<int> indices;
  MultiIndex I;
  /// Left-hand side minus right-hand side.
  DiffPoly residual;
};

enum class ELStatus { IdenticallyZero, EvolutionEquation, ConsequenceOfFlows, NonzeroResidual };

std::string status_name(ELStatus s);

struct ELRecord {
  ELEquation equation;
  ELStatus status;
  /// Label of the generating relation for EvolutionEquation, else 0.
  int flow = 0;
  DiffPoly reduced;
};

struct ELReport {
  std::vector<ELRecord> records;

  bool ok() const;
  std::size_t count(ELStatus s) const;
  /// Sorted, without repeats.
  std::vector<int> evolution_flows() const;
};

/// One-form L = sum_i L_i dt_i, lagrangians[i - 1] = L_i. Multi-indices
/// range over everything the supports of the L_i can reach; equations whose
/// residual vanishes are kept.
std::vector<ELEquation> el_curves(const std::vector<DiffPoly>& lagrangians, int jobs = 1);

/// For one-forms depending on u and its first derivatives only:
/// dL_i/du - D_i dL_i/du_i = 0, dL_i/du_j = 0 (i != j) and
/// dL_i/du_i = dL_j/du_j, written directly from partial derivatives.
/// Throws DimensionError for higher jets.
std::vector<ELEquation> first_jet_system(const std::vector<DiffPoly>& lagrangians);

/// Same (family, indices, I) -> residual map after dropping zero residuals.
bool same_equations(const std::vector<ELEquation>& a, const std::vector<ELEquation>& b);

std::vector<ELEquation> el_surfaces(const LagrangianTwoForm& L, int jobs = 1);

/// Status per equation: IdenticallyZero for a zero residual,
/// EvolutionEquation when the residual is a nonzero rational multiple of one
/// of the reducer's relations, ConsequenceOfFlows when it reduces to zero.
ELReport classify(const std::vector<ELEquation>& eqs, const Reducer& reducer, int jobs = 1);

using Triple = std::array<int, 3>;

/// M_ijk = D_k L_ij - D_j L_ik + D_i L_jk for i < j < k.
std::map<Triple, DiffPoly> dL_coefficients(const LagrangianTwoForm& L, int jobs = 1);

struct ClosednessResidual {
  DiffPoly reduced;     ///< M_ijk in normal form
  DiffPoly reduced_dx;  ///< D_x M_ijk in normal form
};

std::map<Triple, ClosednessResidual> closedness_check(const LagrangianTwoForm& L, const Reducer& reducer,
                                                      int jobs = 1);

/// Reduction modulo every flow of sys except `omit`. Throws UnknownFlow when
/// omit is not a flow of sys.
std::map<Triple, ClosednessResidual> closedness_check(const LagrangianTwoForm& L,
                                                      const EvolutionSystem& sys,
                                                      std::optional<int> omit, int jobs = 1);

/// Line-oriented versioned records, one per equation.
std::string serialize(const ELReport& report, const Naming& naming);

}  // namespace pluri
