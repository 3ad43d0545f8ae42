#include "pluri/euler_lagrange.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "pluri/errors.hpp"
#include "pluri/parallel.hpp"

namespace pluri {

std::string family_name(ELFamily f) {
  switch (f) {
    case ELFamily::CurveSingle: return "curve-single";
    case ELFamily::CurvePair: return "curve-pair";
    case ELFamily::SurfaceSingle: return "surface-single";
    case ELFamily::SurfacePair: return "surface-pair";
    case ELFamily::SurfaceTriple: return "surface-triple";
  }
  return "?";
}

std::string status_name(ELStatus s) {
  switch (s) {
    case ELStatus::IdenticallyZero: return "identically-zero";
    case ELStatus::EvolutionEquation: return "evolution-equation";
    case ELStatus::ConsequenceOfFlows: return "consequence-of-flows";
    case ELStatus::NonzeroResidual: return "NONZERO-RESIDUAL";
  }
  return "?";
}

bool ELReport::ok() const { return count(ELStatus::NonzeroResidual) == 0; }

std::size_t ELReport::count(ELStatus s) const {
  return std::count_if(records.begin(), records.end(), [s](const ELRecord& r) { return r.status == s; });
}

std::vector<int> ELReport::evolution_flows() const {
  std::set<int> flows;
  for (const auto& r : records)
    if (r.status == ELStatus::EvolutionEquation) flows.insert(r.flow);
  return {flows.begin(), flows.end()};
}

namespace {

struct Task {
  ELFamily family;
  std::vector<int> indices;
  MultiIndex I;
};

// All I <= J agreeing with J outside `free` coordinates, where the free
// coordinates range over [0, J(c) - lower(c)].
void lower_indices(const JetVar& J, const std::vector<std::pair<int, int>>& free, std::size_t at,
                   MultiIndex current, std::set<MultiIndex>& out) {
  if (at == free.size()) {
    out.insert(current);
    return;
  }
  auto [c, shift] = free[at];
  for (int e = 0; e + shift <= J(c); ++e)
    lower_indices(J, free, at + 1, current.without(c).plus(c, e), out);
}

std::set<MultiIndex> indices_from(const DiffPoly& p, std::vector<int> zeroed,
                                  std::vector<std::pair<int, int>> free) {
  std::set<MultiIndex> out;
  for (const JetVar& J : p.variables()) {
    MultiIndex base = J;
    for (int c : zeroed) base = base.without(c);
    bool fits = true;
    for (auto [c, shift] : free) fits = fits && J(c) >= shift;
    if (fits) lower_indices(J, free, 0, base, out);
  }
  return out;
}

std::vector<ELEquation> run_tasks(const std::vector<Task>& tasks, int jobs,
                                  const std::function<DiffPoly(const Task&)>& residual) {
  auto residuals = parallel_map(tasks.size(), jobs, [&](std::size_t k) { return residual(tasks[k]); });
  std::vector<ELEquation> out;
  out.reserve(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k)
    out.push_back({tasks[k].family, tasks[k].indices, tasks[k].I, std::move(residuals[k])});
  return out;
}

}  // namespace

std::vector<ELEquation> el_curves(const std::vector<DiffPoly>& lagrangians, int jobs) {
  const int n = static_cast<int>(lagrangians.size());
  auto L = [&](int i) { return lagrangians[i - 1]; };
  std::vector<Task> tasks;
  for (int i = 1; i <= n; ++i)
    for (const auto& I : indices_from(L(i), {i}, {}))
      tasks.push_back({ELFamily::CurveSingle, {i}, I});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto set = indices_from(L(i), {}, {{i, 1}});
      set.merge(indices_from(L(j), {}, {{j, 1}}));
      for (const auto& I : set) tasks.push_back({ELFamily::CurvePair, {i, j}, I});
    }
  return run_tasks(tasks, jobs, [&](const Task& t) {
    if (t.family == ELFamily::CurveSingle) return var_derivative_1d(L(t.indices[0]), t.I, t.indices[0]);
    int i = t.indices[0], j = t.indices[1];
    return var_derivative_1d(L(i), t.I.plus(i), i) - var_derivative_1d(L(j), t.I.plus(j), j);
  });
}

std::vector<ELEquation> first_jet_system(const std::vector<DiffPoly>& lagrangians) {
  const int n = static_cast<int>(lagrangians.size());
  for (const auto& L : lagrangians)
    if (L.max_order() > 1) throw DimensionError("first-jet system of a higher-order Lagrangian");
  auto L = [&](int i) { return lagrangians[i - 1]; };
  auto e = [&](int i) { return MultiIndex::unit(n, i); };
  const MultiIndex zero(n);
  std::vector<ELEquation> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back({ELFamily::CurveSingle, {i}, zero,
                   partial(L(i), zero) - total_derivative(partial(L(i), e(i)), i)});
    for (int j = 1; j <= n; ++j)
      if (j != i) out.push_back({ELFamily::CurveSingle, {i}, e(j), partial(L(i), e(j))});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back({ELFamily::CurvePair, {i, j}, zero, partial(L(i), e(i)) - partial(L(j), e(j))});
  return out;
}

bool same_equations(const std::vector<ELEquation>& a, const std::vector<ELEquation>& b) {
  using Key = std::tuple<ELFamily, std::vector<int>, MultiIndex>;
  auto table = [](const std::vector<ELEquation>& eqs) {
    std::map<Key, DiffPoly> out;
    for (const auto& eq : eqs)
      if (!eq.residual.is_zero()) out.emplace(Key{eq.family, eq.indices, eq.I}, eq.residual);
    return out;
  };
  return table(a) == table(b);
}

std::vector<ELEquation> el_surfaces(const LagrangianTwoForm& L, int jobs) {
  const int n = L.dim();
  std::vector<Task> tasks;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (const auto& I : indices_from(L.get(i, j), {i, j}, {}))
        tasks.push_back({ELFamily::SurfaceSingle, {i, j}, I});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (i == j || i == k) continue;
        auto set = indices_from(L.get(i, j), {i}, {{j, 1}});
        set.merge(indices_from(L.get(i, k), {i}, {{k, 1}}));
        for (const auto& I : set) tasks.push_back({ELFamily::SurfacePair, {i, j, k}, I});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto set = indices_from(L.get(i, j), {}, {{i, 1}, {j, 1}});
        set.merge(indices_from(L.get(j, k), {}, {{j, 1}, {k, 1}}));
        set.merge(indices_from(L.get(k, i), {}, {{k, 1}, {i, 1}}));
        for (const auto& I : set) tasks.push_back({ELFamily::SurfaceTriple, {i, j, k}, I});
      }
  return run_tasks(tasks, jobs, [&](const Task& t) {
    const auto& x = t.indices;
    switch (t.family) {
      case ELFamily::SurfaceSingle:
        return var_derivative_2d(L.get(x[0], x[1]), t.I, x[0], x[1]);
      case ELFamily::SurfacePair:
        return var_derivative_2d(L.get(x[0], x[1]), t.I.plus(x[1]), x[0], x[1]) -
               var_derivative_2d(L.get(x[0], x[2]), t.I.plus(x[2]), x[0], x[2]);
      default: {
        int i = x[0], j = x[1], k = x[2];
        return var_derivative_2d(L.get(i, j), t.I.plus(i).plus(j), i, j) +
               var_derivative_2d(L.get(j, k), t.I.plus(j).plus(k), j, k) +
               var_derivative_2d(L.get(k, i), t.I.plus(k).plus(i), k, i);
      }
    }
  });
}

namespace {

std::optional<int> matching_relation(const DiffPoly& residual,
                                     const std::vector<std::pair<int, DiffPoly>>& relations) {
  for (const auto& [label, rel] : relations) {
    if (rel.size() != residual.size()) continue;
    const auto& [lead, lc] = rel.terms().back();
    Rational c = residual.coefficient(lead) / lc;
    if (c != 0 && residual == rel * c) return label;
  }
  return std::nullopt;
}

}  // namespace

ELReport classify(const std::vector<ELEquation>& eqs, const Reducer& reducer, int jobs) {
  const auto relations = reducer.equations();
  ELReport report;
  report.records = parallel_map(eqs.size(), jobs, [&](std::size_t k) {
    const ELEquation& eq = eqs[k];
    ELRecord rec{eq, ELStatus::IdenticallyZero, 0, DiffPoly(eq.residual.dim())};
    if (eq.residual.is_zero()) return rec;
    if (auto label = matching_relation(eq.residual, relations)) {
      rec.status = ELStatus::EvolutionEquation;
      rec.flow = *label;
      return rec;
    }
    rec.reduced = reducer.reduce(eq.residual);
    rec.status = rec.reduced.is_zero() ? ELStatus::ConsequenceOfFlows : ELStatus::NonzeroResidual;
    return rec;
  });
  return report;
}

std::map<Triple, DiffPoly> dL_coefficients(const LagrangianTwoForm& L, int jobs) {
  const int n = L.dim();
  if (n < 3) throw DimensionError("exterior derivative of a two-form needs three dimensions");
  std::vector<Triple> triples;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
  auto values = parallel_map(triples.size(), jobs, [&](std::size_t t) {
    auto [i, j, k] = triples[t];
    return total_derivative(L.get(i, j), k) - total_derivative(L.get(i, k), j) +
           total_derivative(L.get(j, k), i);
  });
  std::map<Triple, DiffPoly> out;
  for (std::size_t t = 0; t < triples.size(); ++t) out.emplace(triples[t], std::move(values[t]));
  return out;
}

std::map<Triple, ClosednessResidual> closedness_check(const LagrangianTwoForm& L, const Reducer& reducer,
                                                      int jobs) {
  auto M = dL_coefficients(L, jobs);
  std::vector<std::pair<Triple, DiffPoly>> items(M.begin(), M.end());
  auto values = parallel_map(items.size(), jobs, [&](std::size_t t) {
    const DiffPoly& m = items[t].second;
    return ClosednessResidual{reducer.reduce(m), reducer.reduce(total_derivative(m, 1))};
  });
  std::map<Triple, ClosednessResidual> out;
  for (std::size_t t = 0; t < items.size(); ++t) out.emplace(items[t].first, std::move(values[t]));
  return out;
}

std::map<Triple, ClosednessResidual> closedness_check(const LagrangianTwoForm& L,
                                                      const EvolutionSystem& sys,
                                                      std::optional<int> omit, int jobs) {
  std::set<int> keep;
  if (omit) {
    if (!sys.flow(*omit)) throw UnknownFlow(*omit);
    keep.insert(*omit);
  }
  return closedness_check(L, FlowReducer(sys, ElimOrder::LargestFirst, keep), jobs);
}

std::string serialize(const ELReport& report, const Naming& naming) {
  std::ostringstream out;
  out << "format pluri-el-report 1\n";
  for (const auto& r : report.records) {
    const auto& eq = r.equation;
    std::string idx;
    for (std::size_t k = 0; k < eq.indices.size(); ++k) {
      if (k) idx += (eq.family == ELFamily::SurfacePair && k == 1) ? ";" : ",";
      idx += std::to_string(eq.indices[k]);
    }
    out << "equation\tfamily=" << family_name(eq.family) << "\tindices=" << idx
        << "\tI=" << eq.I.exponent_tuple() << "\tstatus=" << status_name(r.status)
        << "\tflow=" << r.flow << "\tresidual=" << render(eq.residual, naming)
        << "\treduced=" << render(r.reduced, naming) << "\n";
  }
  out << "summary\tequations=" << report.records.size()
      << "\tidentically-zero=" << report.count(ELStatus::IdenticallyZero)
      << "\tevolution-equation=" << report.count(ELStatus::EvolutionEquation)
      << "\tconsequence-of-flows=" << report.count(ELStatus::ConsequenceOfFlows)
      << "\tNONZERO-RESIDUAL=" << report.count(ELStatus::NonzeroResidual) << "\n";
  return out.str();
}

}  // namespace pluri
