#include <doctest.h>

#include "affkl/error.hpp"
#include "affkl/lattice.hpp"
#include "affkl/laurent_poly.hpp"

using namespace affkl;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
    IntMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (Int x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("determinant of small integer matrices") {
    CHECK(determinant(mat({{2, -1}, {-1, 2}})) == 3);
    CHECK(determinant(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("adjugate times matrix is det times identity") {
    const IntMat d4 = mat({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    const IntMat adj = adjugate(d4);
    const IntMat prod = adj * d4;
    CHECK(same(prod, IntMat(IntMat::Identity(4, 4) * determinant(d4))));
    // A zero pivot in the first column forces a row swap.
    const IntMat swap = mat({{0, 1}, {1, 0}});
    CHECK(same(adjugate(swap), mat({{0, -1}, {-1, 0}})));
}

TEST_CASE("parsing integer lists and rationals") {
    CHECK(parse_int_list("1,-2, 0") == std::vector<Int>{1, -2, 0});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("1,x"), Error);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(5, 2)) == "5/2");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(join_ints({3, -1}) == "3,-1");
}

TEST_CASE("Laurent polynomial arithmetic") {
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly p = q * q + LaurentPoly(-1);
    CHECK(p.degree() == 2);
    CHECK(p.low() == 0);
    CHECK(p.eval_at_one() == 0);
    CHECK(p.bar().low() == -2);
    CHECK(p.bar().bar() == p);
    CHECK((p - p).is_zero());
    LaurentPoly r;
    r.add_scaled(q, 3, 2);
    CHECK(r == LaurentPoly::monomial(3, 3));
    CHECK((q + LaurentPoly(1)) * (q - LaurentPoly(1)) == p);
}
