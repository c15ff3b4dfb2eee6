#include <catch2/catch_amalgamated.hpp>

#include "liejets/lie/deform.hpp"
#include "support/fixtures.hpp"

using namespace liejets;

namespace {

StructureConstants load_algebra(const std::string& name) {
  return StructureConstants::load_file(data_path("algebras/" + name + ".json"));
}

Cochain cocycle_direction(const StructureConstants& c, std::size_t which) {
  QMatrix d2 = ce_differential_matrix(c, 2);
  auto basis = d2.kernel_basis(Rational(1));
  REQUIRE(which < basis.size());
  return Cochain::from_coordinates(c.dim(), 2, basis[which]);
}

}  // namespace

TEST_CASE("the quadratic defect map vanishes exactly on Lie tables") {
  for (const auto& name : algebra_catalog()) {
    INFO(name);
    CHECK(jacobi_map(load_algebra(name)).is_zero());
  }
  CHECK_FALSE(jacobi_map(load_algebra("broken_jacobi3")).is_zero());
}

TEST_CASE("second difference identity for the obstruction hessian") {
  StructureConstants c = load_algebra("heisenberg3");
  Cochain C = cocycle_direction(c, 0);
  Cochain h = hessian_obstruction(c, C);

  // J is quadratic, so J(c+2C) - 2J(c+C) + J(c) recovers the pure second-order part
  StructureConstants ct = C.to_constants();
  Cochain expect = jacobi_map(c + ct * Rational(2)) + jacobi_map(c + ct) * Rational(-2) + jacobi_map(c);
  CHECK(h == expect);
  CHECK(h == jacobi_map(ct) * Rational(2));
}

TEST_CASE("hessian demands a cocycle direction") {
  StructureConstants c = load_algebra("sl2");
  // find a 2-cochain with nonzero differential
  QMatrix d2 = ce_differential_matrix(c, 2);
  bool found = false;
  for (unsigned idx = 0; idx < Cochain::dimension(3, 2) && !found; ++idx) {
    std::vector<Rational> coords(Cochain::dimension(3, 2), Rational(0));
    coords[idx] = 1;
    bool in_kernel = true;
    for (std::size_t row = 0; row < d2.rows(); ++row)
      if (d2.at(row, idx) != 0) in_kernel = false;
    if (!in_kernel) {
      Cochain bad = Cochain::from_coordinates(3, 2, coords);
      CHECK_THROWS_AS(hessian_obstruction(c, bad), MathError);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("trivial directions have exact obstructions") {
  // a direction that is itself a coboundary obstructs only up to a coboundary
  StructureConstants c = load_algebra("heisenberg3");
  QMatrix d1 = ce_differential_matrix(c, 1);
  QMatrix d2 = ce_differential_matrix(c, 2);
  for (unsigned idx = 0; idx < Cochain::dimension(3, 1); ++idx) {
    std::vector<Rational> a(Cochain::dimension(3, 1), Rational(0));
    a[idx] = 1;
    Cochain dir = Cochain::from_coordinates(3, 2, d1.apply(a));
    Cochain h = hessian_obstruction(c, dir);
    INFO("generator " << idx);
    CHECK(d2.column_span_contains(h.coordinates()));
  }
}

TEST_CASE("first residual coefficient is the differential of the leading term") {
  StructureConstants c = load_algebra("sl2");
  std::vector<Rational> coords(Cochain::dimension(3, 2), Rational(0));
  coords[0] = 1;
  coords[4] = Rational(-2, 3);
  Cochain C1 = Cochain::from_coordinates(3, 2, coords);

  DeformationSeries s{c, {C1}};
  auto res = deformation_residual(s, 2);
  REQUIRE(res.size() == 3);
  CHECK(res[0].is_zero());
  // linear coefficient of J along c + tC is minus the coboundary of C
  CHECK(res[1] == ce_differential(c, C1) * Rational(-1));
  CHECK(res[1] == jacobi_polar(c, C1.to_constants()));
  CHECK(res[2] == jacobi_map(C1.to_constants()));
}

TEST_CASE("cocycle directions are exactly the flat-to-first-order ones") {
  StructureConstants c = load_algebra("heisenberg3");
  Cochain C = cocycle_direction(c, 2);
  DeformationSeries s{c, {C}};
  CHECK(deformation_residual(s, 1)[1].is_zero());
  // and the second coefficient is half the hessian
  CHECK(hessian_obstruction(c, C) == deformation_residual(s, 2)[2] * Rational(2));
}

TEST_CASE("semisimple base extends to high order with vanishing residuals") {
  StructureConstants c = load_algebra("sl2");
  // every cocycle here even has vanishing quadratic term, so the whole
  // continuation is flat; the solvable case below exercises nonzero steps
  for (const auto& v : ce_differential_matrix(c, 2).kernel_basis(Rational(1)))
    CHECK(jacobi_map(Cochain::from_coordinates(3, 2, v).to_constants()).is_zero());
  Cochain C1 = cocycle_direction(c, 1);
  ExtensionResult r = extend_deformation(c, C1, 4);
  REQUIRE(r.extended);
  CHECK(r.series.coeffs.size() == 4);
  CHECK(r.step_freedom == 6);
  auto res = deformation_residual(r.series, 4);
  for (unsigned v = 0; v <= 4; ++v) {
    INFO("order " << v);
    CHECK(res[v].is_zero());
  }
}

TEST_CASE("solvable base where each continuation step does real work") {
  StructureConstants c = load_algebra("solv3");
  Cochain C1(3, 2);
  C1.set({1, 2}, 2, Rational(1));
  C1.set({1, 3}, 1, Rational(-1));
  C1.set({1, 3}, 2, Rational(-2));
  C1.set({1, 3}, 3, Rational(-1));
  C1.set({2, 3}, 2, Rational(-1));
  REQUIRE(ce_differential(c, C1).is_zero());
  // the quadratic term is nonzero, so the order-2 solve must cancel it;
  // a wrong sign there would leave a nonzero residual below
  REQUIRE_FALSE(jacobi_map(C1.to_constants()).is_zero());

  ExtensionResult r = extend_deformation(c, C1, 4);
  REQUIRE(r.extended);
  CHECK_FALSE(r.series.coeffs[1].is_zero());
  auto res = deformation_residual(r.series, 4);
  for (unsigned v = 0; v <= 4; ++v) {
    INFO("order " << v);
    CHECK(res[v].is_zero());
  }
}

TEST_CASE("flat base with a non-integrable direction obstructs immediately") {
  StructureConstants flat = load_algebra("abelian3");
  StructureConstants dir = load_algebra("broken_jacobi3");
  Cochain C1 = Cochain::from_constants(dir);

  // every direction is a cocycle over the flat base, so the gate passes
  CHECK(ce_differential(flat, C1).is_zero());

  ExtensionResult r = extend_deformation(flat, C1, 3);
  CHECK_FALSE(r.extended);
  CHECK(r.obstruction_order == 1);
  CHECK(r.step_freedom == 9);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == jacobi_map(dir) * Rational(2));

  // the label matches the curve: J(c + t C1) has exact leading coefficient t^2 J(C1)
  DeformationSeries s{flat, {C1}};
  auto res = deformation_residual(s, 2);
  CHECK(res[1].is_zero());
  CHECK(res[2] == jacobi_map(dir));
}

TEST_CASE("planar flat algebra extends unconditionally") {
  StructureConstants c = load_algebra("abelian2");
  Cochain C1(2, 2);
  C1.set({1, 2}, 1, Rational(3));
  ExtensionResult r = extend_deformation(c, C1, 6);
  CHECK(r.extended);
  CHECK(r.series.coeffs.size() == 6);
}

TEST_CASE("error contract of the extension driver") {
  StructureConstants c = load_algebra("sl2");
  Cochain C1 = cocycle_direction(c, 0);
  CHECK_THROWS_AS(extend_deformation(c, C1, 0), InputError);

  // non-cocycle leading term
  Cochain bad(3, 2);
  bad.set({1, 2}, 1, Rational(1));
  if (!ce_differential(c, bad).is_zero()) CHECK_THROWS_AS(extend_deformation(c, bad, 2), MathError);

  // non-Lie base
  StructureConstants broken = load_algebra("broken_jacobi3");
  Cochain any(3, 2);
  CHECK_THROWS_AS(extend_deformation(broken, any, 2), MathError);
}
