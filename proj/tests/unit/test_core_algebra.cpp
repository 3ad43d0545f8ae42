#include <doctest.h>

#include <random>

#include "pluri/errors.hpp"
#include "pluri/naming.hpp"
#include "pluri/random.hpp"

using namespace pluri;

namespace {

const Naming kXyz = Naming::xyz();

DiffPoly P(const char* text) { return parse(text, kXyz); }

}  // namespace

TEST_CASE("multi-index order and arithmetic") {
  MultiIndex a(3, {1, 0, 0});
  MultiIndex b(3, {0, 1, 0});
  MultiIndex c(3, {2, 0, 0});
  CHECK(a > b);
  CHECK(c > a);
  CHECK(MultiIndex(3) < b);
  CHECK(a.plus(2) == MultiIndex(3, {1, 1, 0}));
  CHECK(c.minus(a) == a);
  CHECK_FALSE(b.minus(a).has_value());
  CHECK(MultiIndex(3, {2, 1, 0}).exponent_tuple() == "(2,1,0)");
  CHECK(MultiIndex(3, {2, 1, 3}).without(3) == MultiIndex(3, {2, 1, 0}));
  CHECK(MultiIndex(3, {4, 0, 0}).is_pure_x());
  CHECK_FALSE(MultiIndex(3, {4, 0, 1}).is_pure_x());
}

TEST_CASE("ring operations") {
  CHECK(P("u") * P("u") == P("u^2"));
  CHECK((P("1/2*u_x^2") + P("-1/2*u_x^2")).is_zero());
  CHECK(P("sin(u)") * P("sin(u)") == P("1 - cos(u)^2"));
  CHECK(render(P("sin(u)*sin(u)"), kXyz) == "-cos(u)^2 + 1");
  CHECK_THROWS_AS(DiffPoly::variable(MultiIndex(2)) + DiffPoly::variable(MultiIndex(3)), DimensionError);
  CHECK(DiffPoly() + P("u_x") == P("u_x"));
}

TEST_CASE("weight") {
  Naming n = Naming::kdv(3);
  CHECK(weight(parse("u_xx + 3*u^2", n), 2) == 4);
  CHECK_FALSE(weight(parse("u + u_x", n), 2).has_value());
  CHECK(weight(DiffPoly::constant(3, rat(1, 2)), 2) == 0);
  CHECK(weight(parse("u_t2", n), 2) == 5);
  CHECK(weight(parse("u_x,t3", n), 1) == 7);
  CHECK_FALSE(weight(P("cos(u)"), 2).has_value());
}

TEST_CASE("rendering") {
  Naming n = Naming::kdv(3);
  CHECK(render(parse("u_xxxx + 10*u*u_xx + 5*u_x^2 + 10*u^3", n), n) ==
        "10*u^3 + 5*u_x^2 + 10*u*u_xx + u_xxxx");
  CHECK(render(parse("u_x,t2 - 1/2", n), n) == "u_x,t2 - 1/2");
  CHECK(render(parse("-u_t2*u_t3", n), n) == "-u_t3*u_t2");
  CHECK(render(DiffPoly(3), n) == "0");
  CHECK(render(P("u_xy - sin(u)"), kXyz) == "u_xy - sin(u)");
  CHECK(render(P("1/2*u_x^2*cos(u)"), kXyz) == "1/2*u_x^2*cos(u)");
  CHECK(render(MultiIndex(3, {2, 0, 1}), n) == "u_xx,t3");
  CHECK(render(MultiIndex(3, {1, 1, 0}), kXyz) == "u_xy");
}

TEST_CASE("parser") {
  Naming n = Naming::kdv(4);
  CHECK(parse("v_t2t3", Naming::kdv(4, "v")) == DiffPoly::variable(MultiIndex(4, {0, 1, 1, 0})));
  CHECK(parse("(u + 1)^2", n) == parse("u^2 + 2*u + 1", n));
  CHECK(parse("u_x,t2", n) == parse("u_xt2", n));
  CHECK_THROWS_AS(parse("w_x", n), ParseError);
  CHECK_THROWS_AS(parse("u_q", n), ParseError);
  CHECK_THROWS_AS(parse("u +", n), ParseError);
}

TEST_CASE("render and parse round trip on random polynomials") {
  std::mt19937 rng(11);
  PolyShape shape{.dim = 3, .max_order = 3, .max_degree = 3, .max_terms = 5, .trig = true};
  Naming n = Naming::kdv(3);
  for (int k = 0; k < 100; ++k) {
    DiffPoly p = random_poly(rng, shape);
    CHECK(parse(render(p, n), n) == p);
    CHECK(parse(render(p, kXyz), kXyz) == p);
  }
}

TEST_CASE("canonical form and ring laws on random polynomials") {
  std::mt19937 rng(7);
  PolyShape shape{.dim = 3, .max_order = 2, .max_degree = 2, .max_terms = 4, .trig = true};
  for (int k = 0; k < 100; ++k) {
    DiffPoly p = random_poly(rng, shape);
    DiffPoly q = random_poly(rng, shape);
    DiffPoly r = random_poly(rng, shape);
    CHECK(p + q - q == p);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    for (const auto& [m, c] : (p * q * r).terms()) {
      CHECK(m.trig().sin_exp <= 1);
      CHECK(c != 0);
    }
  }
}

TEST_CASE("weight is additive") {
  std::mt19937 rng(3);
  Naming n = Naming::kdv(3);
  DiffPoly p = parse("u_xx + 3*u^2", n);
  DiffPoly q = parse("u_t2 + u*u_x", n);
  CHECK(weight(p * q, 2) == *weight(p, 2) + *weight(q, 2));
  PolyShape shape{.dim = 3, .max_order = 2, .max_degree = 2, .max_terms = 1};
  for (int k = 0; k < 50; ++k) {
    DiffPoly a = random_poly(rng, shape);
    DiffPoly b = random_poly(rng, shape);
    CHECK(weight(a * b, 1) == *weight(a, 1) + *weight(b, 1));
  }
}
