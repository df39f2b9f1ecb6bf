#include <doctest.h>

#include "affkl/affine_weyl.hpp"
#include "affkl/error.hpp"
#include "affkl/root_data.hpp"

using namespace affkl;

namespace {

IntVec vec(std::initializer_list<Int> xs) { return to_intvec(std::vector<Int>(xs)); }

} // namespace

TEST_CASE("type labels") {
    CHECK(parse_type("D4") == TypeLabel{Family::D, 4});
    CHECK(parse_type("a_3") == TypeLabel{Family::A, 3});
    CHECK(parse_type("E8").name() == "E8");
    CHECK_THROWS_AS(parse_type("B2"), Error);
    CHECK_THROWS_AS(parse_type("G2"), Error);
    CHECK_THROWS_AS(parse_type("X9"), Error);
    CHECK_THROWS_AS(parse_type("D3"), Error);
    CHECK_THROWS_AS(parse_type("E9"), Error);
    try {
        parse_type("C3");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unsupported_type);
    }
}

TEST_CASE("D4 data") {
    const auto d = build_cartan("D4");
    CHECK(same(d->highest_root(), vec({1, 2, 1, 1})));
    CHECK(d->marks() == std::vector<Int>{1, 1, 2, 1, 1});
    CHECK(d->dual_coxeter() == 6);
    CHECK(d->positive_roots().size() == 12);
    CHECK(d->cartan_det() == 4);
    CHECK(d->neighbours(2).size() == 4);
    CHECK(d->path_from_zero(3) == std::vector<int>{0, 2, 3});
    CHECK(d->norm_sq(d->highest_root()) == 2);
}

TEST_CASE("root counts and dual Coxeter numbers") {
    struct Row {
        const char* type;
        std::size_t positive;
        Int hv;
    };
    for (const Row& row : {Row{"A1", 1, 2}, Row{"A2", 3, 3}, Row{"A4", 10, 5}, Row{"D5", 20, 8},
                           Row{"E6", 36, 12}, Row{"E7", 63, 18}, Row{"E8", 120, 30}}) {
        CAPTURE(row.type);
        const auto d = build_cartan(row.type);
        CHECK(d->positive_roots().size() == row.positive);
        CHECK(d->dual_coxeter() == row.hv);
        Int sum = 0;
        for (Int a : d->marks())
            sum += a;
        CHECK(sum == row.hv);
        // theta is the unique root of maximal height and has norm 2
        CHECK(d->is_root(d->highest_root()));
        CHECK(d->norm_sq(d->highest_root()) == 2);
    }
}

TEST_CASE("affine weights") {
    for (const char* t : {"A2", "D4", "E6"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        const int r = d->rank();
        CHECK(d->level(d->rho_hat()) == d->dual_coxeter());
        CHECK(d->level(d->fundamental(0)) == 1);
        CHECK(d->level(d->delta()) == 0);
        // sum a_j alpha_j = delta
        AffineWeight s = d->zero_weight();
        for (int j = 0; j <= r; ++j)
            for (Int k = 0; k < d->mark(j); ++k)
                s += d->simple_root(j);
        CHECK(s == d->delta());
        // <Lambda_i, alpha_j^vee> = delta_ij
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= r; ++j) {
                HhatVector h{IntVec::Zero(r), 0, 0};
                if (j == 0) {
                    h.x = -d->highest_root();
                    h.k = 1;
                } else {
                    h.x(j - 1) = 1;
                }
                CHECK(d->pairing(d->fundamental(i), h) == Rational(i == j ? 1 : 0));
            }
        CHECK(d->pairing(d->delta(), HhatVector{IntVec::Zero(r), 0, 1}) == Rational(1));
    }
}

TEST_CASE("weight classification") {
    const auto d = build_cartan("D4");
    // lambda = -Lambda_0: lambda + rho^ is dominant and singular at node 0 only
    const AffineWeight lambda = d->parse_weight({-1, 0, 0, 0, 0});
    const WeightClass c = classify_weight(*d, lambda + d->rho_hat());
    CHECK(c.level == 5);
    CHECK(c.dominant);
    CHECK(!c.regular);
    CHECK(stabilizer(*d, lambda) == std::vector<int>{0});
    CHECK(classify_weight(*d, d->rho_hat()).regular);
    CHECK_THROWS_AS(d->parse_weight({1, 2}), Error);
}
