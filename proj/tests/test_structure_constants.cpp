#include <catch2/catch_amalgamated.hpp>

#include "liejets/lie/structure_constants.hpp"
#include "support/fixtures.hpp"

using namespace liejets;

TEST_CASE("catalog files load and satisfy the Jacobi identity") {
  for (const auto& name : algebra_catalog()) {
    INFO(name);
    auto c = StructureConstants::load_file(data_path("algebras/" + name + ".json"));
    CHECK(c.jacobi_holds());
  }
}

TEST_CASE("the shipped counterexample violates Jacobi with the expected witness") {
  auto c = StructureConstants::load_file(data_path("algebras/broken_jacobi3.json"));
  auto w = c.jacobi_witness();
  REQUIRE(w.has_value());
  CHECK(w->i == 1);
  CHECK(w->j == 2);
  CHECK(w->k == 3);
  CHECK(w->defect == std::vector<Rational>{Rational(0), Rational(0), Rational(-1)});
  CHECK_THROWS_AS(c.require_jacobi(), MathError);
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  auto c = StructureConstants::load_file(data_path("algebras/sl2.json"));
  std::vector<Rational> x{Rational(1), Rational(-2), Rational(3)};
  std::vector<Rational> y{Rational(0), Rational(5), Rational(1, 2)};
  std::vector<Rational> z{Rational(7), Rational(1), Rational(-1)};
  auto xy = c.bracket(x, y);
  auto yx = c.bracket(y, x);
  for (unsigned t = 0; t < 3; ++t) CHECK(xy[t] == -yx[t]);
  // [x + 3z, y] = [x,y] + 3[z,y]
  std::vector<Rational> xz(3);
  for (unsigned t = 0; t < 3; ++t) xz[t] = x[t] + Rational(3) * z[t];
  auto lhs = c.bracket(xz, y);
  auto zy = c.bracket(z, y);
  for (unsigned t = 0; t < 3; ++t) CHECK(lhs[t] == xy[t] + Rational(3) * zy[t]);
}

TEST_CASE("change of basis transforms the bracket covariantly") {
  auto h = StructureConstants::load_file(data_path("algebras/heisenberg3.json"));

  SECTION("identity leaves the table alone") {
    QMatrix id = QMatrix::identity(3, Rational(0), Rational(1));
    CHECK(h.change_basis(id) == h);
  }

  SECTION("scaling the central direction rescales the constant") {
    QMatrix a = QMatrix::identity(3, Rational(0), Rational(1));
    a.at(2, 2) = 2;
    auto hbar = h.change_basis(a);
    CHECK(hbar.at(3, 1, 2) == Rational(1, 2));
  }

  SECTION("a then its inverse round-trips") {
    QMatrix a = make_qmatrix(3, 3);
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(0, 2) = 0;
    a.at(1, 0) = 0; a.at(1, 1) = 1; a.at(1, 2) = 3;
    a.at(2, 0) = 1; a.at(2, 1) = 0; a.at(2, 2) = 1;
    auto ainv = a.inverse(Rational(1));
    REQUIRE(ainv.has_value());
    CHECK(h.change_basis(a).change_basis(*ainv) == h);
  }

  SECTION("singular matrix is rejected") {
    QMatrix s = make_qmatrix(3, 3);
    s.at(0, 0) = 1;
    CHECK_THROWS_AS(h.change_basis(s), InputError);
  }
}

TEST_CASE("serialization round-trips through JSON") {
  for (const auto& name : algebra_catalog()) {
    auto c = StructureConstants::load_file(data_path("algebras/" + name + ".json"));
    CHECK(StructureConstants::from_json(c.to_json()) == c);
  }
}

TEST_CASE("malformed structure-constant files are rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(StructureConstants::from_json(json::parse(R"({ "brackets": [] })")),
                  InputError);
  CHECK_THROWS_AS(StructureConstants::from_json(json::parse(R"({ "dim": 0 })")),
                  InputError);
  // rho >= sigma is not allowed: only the upper triangle is listed
  CHECK_THROWS_AS(StructureConstants::from_json(json::parse(
                      R"({ "dim": 2, "brackets": [{ "rho": 2, "sigma": 1, "tau": 1, "value": "1" }] })")),
                  InputError);
  CHECK_THROWS_AS(StructureConstants::from_json(json::parse(
                      R"({ "dim": 2, "brackets": [{ "rho": 1, "sigma": 2, "tau": 5, "value": "1" }] })")),
                  InputError);
  CHECK_THROWS_AS(StructureConstants::from_json(json::parse(
                      R"({ "dim": 2, "brackets": [{ "rho": 1, "sigma": 2, "tau": 1, "value": 3 }] })")),
                  InputError);
  CHECK_THROWS_AS(StructureConstants::load_file(data_path("algebras/no_such_file.json")),
                  InputError);
}
