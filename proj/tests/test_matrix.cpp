#include <catch2/catch_amalgamated.hpp>

#include "liejets/matrix.hpp"

using namespace liejets;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m = make_qmatrix(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("rank agrees under both pivot strategies") {
  QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}});
  CHECK(m.rank(PivotStrategy::FirstNonzero) == 2);
  CHECK(m.rank(PivotStrategy::LastNonzero) == 2);
  CHECK(m.transpose().rank() == 2);
}

TEST_CASE("kernel basis really spans the null space") {
  QMatrix m = from_rows({{1, 2, 0, -1}, {0, 0, 1, 2}});
  auto basis = m.kernel_basis(Rational(1));
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    auto y = m.apply(v);
    for (const auto& e : y) CHECK(e == 0);
  }
  // the two basis vectors are independent: stack them and check rank
  QMatrix stacked = make_qmatrix(0, 4);
  for (const auto& v : basis) stacked.append_row(v);
  CHECK(stacked.rank() == 2);
}

TEST_CASE("solve distinguishes consistent from inconsistent systems") {
  QMatrix m = from_rows({{1, 1}, {1, -1}, {2, 0}});
  auto sol = m.solve({Rational(3), Rational(1), Rational(4)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
  CHECK_FALSE(m.solve({Rational(3), Rational(1), Rational(5)}).has_value());
  CHECK(m.column_span_contains({Rational(3), Rational(1), Rational(4)}));
  CHECK_FALSE(m.column_span_contains({Rational(3), Rational(1), Rational(5)}));
}

TEST_CASE("left kernel gives row relations") {
  QMatrix m = from_rows({{1, 2}, {3, 6}, {1, 1}});
  auto lk = m.left_kernel_basis(Rational(1));
  REQUIRE(lk.size() == 1);
  // the relation annihilates every column
  const auto& v = lk[0];
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += v[i] * m.at(i, j);
    CHECK(s == 0);
  }
}

TEST_CASE("rank over the function field sees generic behaviour") {
  // [[x1, x2], [x2, x1]] has determinant x1^2 - x2^2, nonzero as a function
  FMatrix m = make_fmatrix(2, 2, 2);
  m.at(0, 0) = RationalFunction::variable(2, 1);
  m.at(0, 1) = RationalFunction::variable(2, 2);
  m.at(1, 0) = RationalFunction::variable(2, 2);
  m.at(1, 1) = RationalFunction::variable(2, 1);
  CHECK(m.rank() == 2);
  CHECK(m.rank(PivotStrategy::LastNonzero) == 2);

  // scale one row into the other: rank drops to 1 identically
  FMatrix d = make_fmatrix(2, 2, 2);
  d.at(0, 0) = RationalFunction::variable(2, 1);
  d.at(0, 1) = RationalFunction::variable(2, 2);
  d.at(1, 0) = RationalFunction::variable(2, 1) * Rational(2);
  d.at(1, 1) = RationalFunction::variable(2, 2) * Rational(2);
  CHECK(d.rank() == 1);
  auto ker = d.kernel_basis(RationalFunction::constant(2, Rational(1)));
  REQUIRE(ker.size() == 1);
  for (const auto& e : d.apply(ker[0])) CHECK(e.is_zero());
}

TEST_CASE("identity and product behave") {
  QMatrix a = from_rows({{1, 2}, {3, 4}});
  QMatrix i2 = QMatrix::identity(2, Rational(0), Rational(1));
  QMatrix p = a * i2;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(p.at(r, c) == a.at(r, c));
  QMatrix b = from_rows({{0, 1}, {1, 0}});
  QMatrix ab = a * b;
  CHECK(ab.at(0, 0) == 2);
  CHECK(ab.at(0, 1) == 1);
  CHECK(ab.at(1, 0) == 4);
  CHECK(ab.at(1, 1) == 3);
}

TEST_CASE("laplace determinant and adjugate inverse over Q") {
  QMatrix a = from_rows({{2, 1, 0}, {1, -1, 3}, {0, 2, 1}});
  // expansion by hand: 2*(-1-6) - 1*(1-0) + 0 = -15
  CHECK(laplace_determinant(a) == Rational(-15));

  auto inv = adjugate_inverse(a, Rational(1));
  REQUIRE(inv.has_value());
  QMatrix p = a * *inv;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.at(i, j) == (i == j ? Rational(1) : Rational(0)));

  // agrees with the elimination-based inverse
  auto inv2 = a.inverse(Rational(1));
  REQUIRE(inv2.has_value());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(inv->at(i, j) == inv2->at(i, j));

  QMatrix s = from_rows({{1, 2}, {2, 4}});
  CHECK(laplace_determinant(s) == Rational(0));
  CHECK(!adjugate_inverse(s, Rational(1)).has_value());
}

TEST_CASE("adjugate inverse over rational functions") {
  FMatrix m = make_fmatrix(2, 2, 2);
  RationalFunction x = RationalFunction::variable(2, 1);
  RationalFunction y = RationalFunction::variable(2, 2);
  RationalFunction one = RationalFunction::constant(2, Rational(1));
  m.at(0, 0) = x;
  m.at(0, 1) = one;
  m.at(1, 0) = y;
  m.at(1, 1) = x;
  CHECK((laplace_determinant(m) - (x * x - y)).is_zero());
  auto inv = adjugate_inverse(m, one);
  REQUIRE(inv.has_value());
  FMatrix p = m * *inv;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (i == j)
        CHECK((p.at(i, j) - one).is_zero());
      else
        CHECK(p.at(i, j).is_zero());
    }
}
