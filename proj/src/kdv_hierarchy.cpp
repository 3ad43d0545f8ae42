#include "pluri/kdv_hierarchy.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pluri/errors.hpp"

namespace pluri {

DiffPoly LagrangianTwoForm::get(int i, int j) const {
  if (i == j) return DiffPoly(dim_);
  if (i > j) return -get(j, i);
  auto it = table_.find({i, j});
  return it == table_.end() ? DiffPoly(dim_) : it->second;
}

void LagrangianTwoForm::set(int i, int j, DiffPoly value) {
  if (i == j || i < 1 || j < 1 || i > dim_ || j > dim_)
    throw DimensionError("two-form index out of range");
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  table_[{i, j}] = std::move(value);
}

namespace {

DiffPoly shift_x(const DiffPoly& p, int by) {
  if (!p.is_pure_x()) throw MixedDirections("index shift of a polynomial with time derivatives");
  if (p.has_trig()) throw MixedDirections("index shift of a trig polynomial");
  return p.map_monomials(p.dim(), [&](const Monomial& m) {
    Monomial out;
    for (const auto& [v, e] : m.factors()) {
      if (v(1) + by < 0) throw MixedDirections("potential v itself occurs");
      out = out.with_exponent(v.plus(1, by), e);
    }
    return out;
  });
}

}  // namespace

DiffPoly shift_to_potential(const DiffPoly& p) { return shift_x(p, 1); }
DiffPoly shift_from_potential(const DiffPoly& p) { return shift_x(p, -1); }

std::vector<DiffPoly> resolvent_coeffs(int dim, int kmax) {
  const DiffPoly u = DiffPoly::variable(MultiIndex(dim));
  const DiffPoly ux = DiffPoly::variable(MultiIndex::x_power(dim, 1));
  std::vector<DiffPoly> r{DiffPoly::constant(dim, rat(1, 2))};
  for (int k = 1; k <= kmax; ++k) {
    const DiffPoly& prev = r.back();
    DiffPoly d1 = total_derivative(prev, 1);
    DiffPoly rhs = total_derivative(prev, MultiIndex::x_power(dim, 3)) +
                   rat(4) * u * d1 + rat(2) * ux * prev;
    r.push_back(x_antiderivative(rhs));
  }
  return r;
}

std::vector<DiffPoly> first_integral_coeffs(const std::vector<DiffPoly>& r) {
  const int dim = r.front().dim();
  const DiffPoly u = DiffPoly::variable(MultiIndex(dim));
  std::vector<DiffPoly> rx, rxx;
  for (const auto& rk : r) {
    rx.push_back(total_derivative(rk, 1));
    rxx.push_back(total_derivative(rx.back(), 1));
  }
  std::vector<DiffPoly> out;
  for (int n = 0; n < static_cast<int>(r.size()); ++n) {
    DiffPoly c(dim);
    for (int a = 0; a <= n - 1; ++a) {
      int b = n - 1 - a;
      c += r[a] * rxx[b] - rat(1, 2) * rx[a] * rx[b] + rat(2) * u * r[a] * r[b];
    }
    for (int a = 0; a <= n; ++a) c -= rat(1, 2) * r[a] * r[n - a];
    out.push_back(std::move(c));
  }
  return out;
}

DiffPoly compute_a(const DiffPoly& h_i, int j) {
  const int dim = h_i.dim();
  DiffPoly a(dim);
  for (int alpha = 0; alpha < h_i.max_order(); ++alpha) {
    DiffPoly dh = var_derivative_1d(h_i, MultiIndex::x_power(dim, alpha + 1), 1);
    if (dh.is_zero()) continue;
    a += DiffPoly::variable(MultiIndex::x_power(dim, alpha).plus(j)) * dh;
  }
  return a;
}

DiffPoly compute_b(const DiffPoly& g_i, const DiffPoly& g_j) {
  return x_antiderivative(total_derivative(g_i, 1) * g_j);
}

HierarchyContext::HierarchyContext(int n, int kmax) : n_(n), kmax_(kmax) {
  if (n < 1 || n > MultiIndex::kMaxDim) throw DimensionError("multi-time dimension out of range");
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  r_ = resolvent_coeffs(n, kmax + 1);
  derive_from_r();
}

void HierarchyContext::derive_from_r() {
  g_.clear();
  for (const auto& rk : r_) g_.push_back(shift_to_potential(rk));
  h_.clear();
  for (int k = 1; k <= kmax_; ++k) h_.push_back(g_[k + 1] * rat(1, 4 * k + 2));
  a_.clear();
  b_.clear();
  for (int i = 1; i <= kmax_; ++i)
    for (int j = 1; j <= kmax_; ++j) {
      if (j <= n_) a_[{i, j}] = compute_a(h(i), j);
      b_[{i, j}] = compute_b(g_[i], g_[j]);
    }
}

EvolutionSystem HierarchyContext::system() const {
  EvolutionSystem sys(n_);
  for (int j = 2; j <= n_; ++j) sys.set_flow(j, g(j));
  return sys;
}

std::string HierarchyContext::cache_file_name(int n, int kmax) {
  return "hierarchy-n" + std::to_string(n) + "-k" + std::to_string(kmax) + ".json";
}

namespace {

constexpr int kCacheVersion = 1;

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

std::string HierarchyContext::to_cache() const {
  nlohmann::ordered_json doc;
  doc["format"] = "pluri-hierarchy-cache";
  doc["format_version"] = kCacheVersion;
  doc["n"] = n_;
  doc["kmax"] = kmax_;
  Naming u = u_naming();
  Naming v = v_naming();
  for (const auto& p : r_) doc["r"].push_back(render(p, u));
  for (const auto& p : g_) doc["g"].push_back(render(p, v));
  for (const auto& p : h_) doc["h"].push_back(render(p, v));
  for (const auto& [key, p] : a_) doc["a"][pair_key(key.first, key.second)] = render(p, v);
  for (const auto& [key, p] : b_) doc["b"][pair_key(key.first, key.second)] = render(p, v);
  return doc.dump(1) + "\n";
}

std::optional<HierarchyContext> HierarchyContext::parse_cache(const std::string& text, int n, int kmax) {
  try {
    auto doc = nlohmann::json::parse(text);
    if (doc.at("format") != "pluri-hierarchy-cache" || doc.at("format_version") != kCacheVersion ||
        doc.at("n") != n || doc.at("kmax") != kmax)
      return std::nullopt;
    HierarchyContext ctx;
    ctx.n_ = n;
    ctx.kmax_ = kmax;
    Naming u = ctx.u_naming();
    Naming v = ctx.v_naming();
    // Every stored string must already be canonical.
    auto read = [](const std::string& s, const Naming& naming) {
      DiffPoly p = parse(s, naming);
      if (render(p, naming) != s) throw ParseError("non-canonical cache entry");
      return p;
    };
    const auto& rs = doc.at("r");
    if (rs.size() != static_cast<std::size_t>(kmax + 2)) return std::nullopt;
    for (std::size_t k = 0; k < rs.size(); ++k) {
      DiffPoly rk = read(rs[k].get<std::string>(), u);
      const int kk = static_cast<int>(k);
      if (weight(rk, 2) != 2 * kk || !rk.is_pure_x()) return std::nullopt;
      if (kk >= 1 && rk.max_order() != 2 * kk - 2) return std::nullopt;
      ctx.r_.push_back(std::move(rk));
    }
    if (ctx.r_[0] != DiffPoly::constant(n, rat(1, 2))) return std::nullopt;
    for (std::size_t k = 0; k < ctx.r_.size(); ++k)
      if (read(doc.at("g").at(k).get<std::string>(), v) != shift_to_potential(ctx.r_[k])) return std::nullopt;
    if (doc.at("g").size() != ctx.r_.size()) return std::nullopt;
    ctx.g_.clear();
    for (const auto& rk : ctx.r_) ctx.g_.push_back(shift_to_potential(rk));
    if (doc.at("h").size() != static_cast<std::size_t>(kmax)) return std::nullopt;
    for (int k = 1; k <= kmax; ++k) {
      DiffPoly hk = read(doc.at("h").at(k - 1).get<std::string>(), v);
      if (hk != ctx.g_[k + 1] * rat(1, 4 * k + 2) || hk.max_order() != 2 * k + 1) return std::nullopt;
      ctx.h_.push_back(std::move(hk));
    }
    for (int i = 1; i <= kmax; ++i)
      for (int j = 1; j <= kmax; ++j) {
        if (j <= n) {
          DiffPoly aij = read(doc.at("a").at(pair_key(i, j)).get<std::string>(), v);
          if (weight(aij, 1) != 2 * i + 2 * j) return std::nullopt;
          ctx.a_[{i, j}] = std::move(aij);
        }
        DiffPoly bij = read(doc.at("b").at(pair_key(i, j)).get<std::string>(), v);
        if (weight(bij, 1) != 2 * i + 2 * j || !bij.is_pure_x()) return std::nullopt;
        ctx.b_[{i, j}] = std::move(bij);
      }
    for (int i = 1; i <= kmax; ++i)
      for (int j = i; j <= kmax; ++j)
        if (ctx.b_.at({i, j}) + ctx.b_.at({j, i}) != ctx.g_[i] * ctx.g_[j]) return std::nullopt;
    return ctx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

HierarchyContext HierarchyContext::load_or_build(int n, int kmax, const std::filesystem::path& dir) {
  const auto file = dir / cache_file_name(n, kmax);
  if (std::ifstream in{file}) {
    std::stringstream buf;
    buf << in.rdbuf();
    if (auto ctx = parse_cache(buf.str(), n, kmax)) return std::move(*ctx);
  }
  HierarchyContext ctx(n, kmax);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::random_device rd;
  const auto tmp = dir / (file.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << ctx.to_cache();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return ctx;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return ctx;
}

LagrangianTwoForm build_two_form(const HierarchyContext& ctx) {
  const int n = ctx.n();
  if (ctx.kmax() < n) throw std::invalid_argument("two-form needs kmax >= n");
  LagrangianTwoForm L(n);
  auto var = [n](int j) { return DiffPoly::variable(MultiIndex::unit(n, j)); };
  for (int i = 2; i <= n; ++i) L.set(1, i, rat(1, 2) * var(1) * var(i) - ctx.h(i));
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      L.set(i, j,
            rat(1, 2) * (var(i) * ctx.g(j) - var(j) * ctx.g(i)) + (ctx.a(i, j) - ctx.a(j, i)) -
                rat(1, 2) * (ctx.b(i, j) - ctx.b(j, i)));
  return L;
}

DiffPoly c_family_member(const HierarchyContext& ctx, int i, int j, const Rational& c) {
  const int n = ctx.n();
  DiffPoly vi = DiffPoly::variable(MultiIndex::unit(n, i));
  DiffPoly vj = DiffPoly::variable(MultiIndex::unit(n, j));
  const Rational half = rat(1, 2);
  return c * vi * vj + (ctx.a(i, j) - ctx.a(j, i)) + (half - c) * vi * ctx.g(j) -
         (half + c) * vj * ctx.g(i) + half * (ctx.b(j, i) - ctx.b(i, j)) + c * ctx.g(i) * ctx.g(j);
}

DiffPoly substitute_flow(const DiffPoly& p, const HierarchyContext& ctx, int flow, int keep) {
  EvolutionSystem sys(ctx.n());
  sys.set_flow(flow, ctx.g(flow));
  return FlowReducer(std::move(sys), ElimOrder::LargestFirst, {keep}).reduce(p);
}

}  // namespace pluri
