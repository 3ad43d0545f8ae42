#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "pluri/bicomplex.hpp"
#include "pluri/diff_poly.hpp"

namespace pluri {

/// Bounds for random differential polynomials.
struct PolyShape {
  int dim = 3;
  int max_order = 3;
  int max_degree = 3;
  int max_terms = 4;
  bool pure_x = false;
  bool trig = false;
  int coeff_range = 5;
};

inline JetVar random_var(std::mt19937& rng, const PolyShape& shape) {
  std::uniform_int_distribution<int> order(0, shape.max_order);
  std::uniform_int_distribution<int> coord(1, shape.pure_x ? 1 : shape.dim);
  MultiIndex I(shape.dim);
  for (int n = order(rng); n > 0; --n) I = I.plus(coord(rng));
  return I;
}

inline Rational random_coeff(std::mt19937& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return rat(n, den(rng));
}

inline DiffPoly random_poly(std::mt19937& rng, const PolyShape& shape) {
  std::uniform_int_distribution<int> terms(1, shape.max_terms);
  std::uniform_int_distribution<int> degree(0, shape.max_degree);
  std::uniform_int_distribution<int> coin(0, 3);
  DiffPoly p(shape.dim);
  for (int t = terms(rng); t > 0; --t) {
    Monomial m;
    for (int d = degree(rng); d > 0; --d) {
      JetVar v = random_var(rng, shape);
      m = m.with_exponent(v, m.exponent(v) + 1);
    }
    DiffPoly term = DiffPoly::monomial(shape.dim, m, random_coeff(rng, shape.coeff_range));
    if (shape.trig && coin(rng) == 0) term *= coin(rng) % 2 ? DiffPoly::sin_u(shape.dim) : DiffPoly::cos_u(shape.dim);
    p += term;
  }
  return p;
}

/// Sum of one to three random terms; forms get at most second-order generators.
inline BiForm random_form(std::mt19937& rng, int p, int q, const PolyShape& shape) {
  std::uniform_int_distribution<int> count(1, 3);
  BiForm w(shape.dim, p, q);
  PolyShape gen = shape;
  gen.max_order = 2;
  for (int t = count(rng); t > 0; --t) {
    std::vector<MultiIndex> vertical;
    for (int a = 0; a < p; ++a) vertical.push_back(random_var(rng, gen));
    std::vector<int> coords(shape.dim);
    std::iota(coords.begin(), coords.end(), 1);
    std::shuffle(coords.begin(), coords.end(), rng);
    coords.resize(q);
    w += BiForm::term(random_poly(rng, shape), vertical, coords, shape.dim);
  }
  return w;
}

}  // namespace pluri
