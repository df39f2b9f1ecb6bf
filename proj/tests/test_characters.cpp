#include <doctest.h>

#include "affkl/characters.hpp"
#include "affkl/error.hpp"
#include "affkl/verify.hpp"

using namespace affkl;

namespace {

AffineWeight base_of(const CharacterTruncation& t) {
    const CartanDatum& d = *t.spec.datum;
    const AffineWeight top = t.spec.Lambda + d.rho_hat();
    return t.route == Route::kac_wakimoto ? top : t.spec.w.act(top);
}

} // namespace

TEST_CASE("route names") {
    for (Route r : {Route::closed_form, Route::kac_wakimoto, Route::kl_oracle})
        CHECK(parse_route(route_name(r)) == r);
    CHECK_THROWS_AS(parse_route("fast"), Error);
}

TEST_CASE("D4 singular pairs") {
    const auto d = build_cartan("D4");
    SUBCASE("lambda = -Lambda_0, i = 0") {
        const auto spec = validate_pair(d, d->parse_weight({-1, 0, 0, 0, 0}), 0);
        CHECK(spec.case_tag == CaseTag::singular_b);
        CHECK(spec.w.reduced_word() == Word{0});
        CHECK(spec.Lambda == d->parse_weight({-1, 0, 0, 0, 0}));
        REQUIRE(spec.alpha);
        CHECK(spec.alpha->n == 0);
        CHECK(same(spec.alpha->beta, d->highest_root()));
    }
    SUBCASE("lambda = Lambda_k - Lambda_2, w = s_2 s_0") {
        for (int k : {1, 3, 4}) {
            CAPTURE(k);
            std::vector<Int> c{0, 0, -1, 0, 0};
            c[static_cast<std::size_t>(k)] = 1;
            const auto spec = validate_pair(d, d->parse_weight(c), 2);
            CHECK(spec.w.reduced_word() == Word{2, 0});
            // Lambda = -2 Lambda_0 + Lambda_k up to a multiple of delta
            std::vector<Int> big{-2, 0, 0, 0, 0};
            big[static_cast<std::size_t>(k)] = 1;
            CHECK(same(spec.Lambda.c, to_intvec(big)));
            REQUIRE(spec.alpha);
            // theta - alpha_2
            CHECK(same(spec.alpha->beta, to_intvec({1, 1, 1, 1})));
            CHECK(spec.alpha->n == 0);
        }
    }
}

TEST_CASE("dot action and alpha orthogonality on the packaged examples") {
    const auto d = build_cartan("D4");
    for (const auto& ex : d4_examples(false)) {
        CAPTURE(ex.label);
        const auto spec = validate_pair(d, d->parse_weight(ex.lambda), ex.i);
        CHECK(spec.w.dot(spec.Lambda) == spec.lambda);
        CHECK(spec.w.act(spec.Lambda + d->rho_hat()) == spec.lambda + d->rho_hat());
        REQUIRE(spec.alpha);
        const AffineRoot& a = *spec.alpha;
        CHECK(d->pairing(spec.Lambda + d->rho_hat(), HhatVector{IntVec(-a.beta), 1 - a.n, 0}) == Rational(0));
        CHECK(classify_weight(*d, spec.Lambda).quasi_dominant);
    }
}

TEST_CASE("regular pairs") {
    const auto d = build_cartan("D4");
    for (int i = 0; i <= 4; ++i) {
        const auto spec = validate_pair(d, d->zero_weight(), i);
        CHECK(spec.case_tag == CaseTag::regular_a);
        CHECK(!spec.alpha);
        CHECK_THROWS_AS(char_kac_wakimoto(spec, 4), Error);
    }
}

TEST_CASE("rejected pairs") {
    const auto d = build_cartan("D4");
    auto code = [&](std::vector<Int> c, Int i) {
        try {
            validate_pair(d, d->parse_weight(c), i);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::internal;
    };
    // lambda + rho^ not dominant
    CHECK(code({-2, 0, 0, 0, 0}, 0) == ErrorCode::invalid_pair);
    // level of lambda + rho^ not positive
    CHECK(code({-1, -1, -1, -1, -1}, 0) == ErrorCode::invalid_pair);
    // stabiliser {0, 1}
    CHECK(code({-1, -1, 0, 0, 0}, 0) == ErrorCode::invalid_pair);
    // stabiliser {0} but i = 2
    CHECK(code({-1, 0, 0, 0, 0}, 2) == ErrorCode::invalid_pair);
    CHECK(code({0, 0, 0, 0, 0}, 7) == ErrorCode::invalid_argument);
    CHECK_THROWS_AS(validate_pair(d, build_cartan("A2")->zero_weight(), 0), Error);
}

TEST_CASE("exponents agree with generator-by-generator evaluation") {
    const auto d = build_cartan("D4");
    const auto spec = validate_pair(d, d->parse_weight({-1, 0, 0, 0, 0}), 0);
    for (Route r : {Route::closed_form, Route::kac_wakimoto, Route::kl_oracle}) {
        CAPTURE(route_name(r));
        const auto t = build_character(spec, 2, r, 10);
        REQUIRE(!t.terms.empty());
        const AffineWeight base = base_of(t);
        for (const auto& term : t.terms) {
            const auto u = AffineWeylElement::from_word(d, term.u_word);
            const auto tg = AffineWeylElement::translation(d, term.gamma);
            CHECK((u * tg).act(base) == term.weight);
            AffineWeight step = tg.act(base);
            for (auto it = term.u_word.rbegin(); it != term.u_word.rend(); ++it)
                step = AffineWeylElement::generator(d, *it).act(step);
            CHECK(step == term.weight);
        }
    }
}

TEST_CASE("routes agree and invariants hold") {
    const auto d = build_cartan("D4");
    const auto spec = validate_pair(d, d->parse_weight({-1, 0, 0, 0, 0}), 0);
    const auto closed = char_closed_form(spec, 6);
    const auto kw = char_kac_wakimoto(spec, 6);
    const auto kl = char_kl_oracle(spec, 6, 12);
    CHECK(compare(closed, closed).pass());
    CHECK(compare(closed, closed).compared == closed.terms.size());
    const auto a = compare(closed, kw);
    CHECK(a.pass());
    CHECK(a.compared == closed.terms.size());
    const auto b = compare(closed, kl);
    CHECK(b.pass());
    CHECK(b.compared > 0);
    for (const auto* t : {&closed, &kw, &kl}) {
        const auto inv = check_invariants(*t);
        CHECK(inv.highest_term_is_one);
        CHECK(inv.antisymmetry_checked > 0);
        CHECK(inv.antisymmetry_failures == 0);
    }
    const auto other = validate_pair(d, d->zero_weight(), 0);
    CHECK_THROWS_AS(compare(closed, char_closed_form(other, 2)), Error);
}

TEST_CASE("type A corollary shape") {
    const auto d = build_cartan("A2");
    for (Int i : {0, 1, 2}) {
        CAPTURE(i);
        std::vector<Int> c(3, 0);
        c[static_cast<std::size_t>(residue(i, 3))] = -1;
        const auto spec = validate_pair(d, d->parse_weight(c), i);
        std::vector<Int> expected{-(1 + i), 0, i};
        CHECK(same(spec.Lambda.c, to_intvec(expected)));
        const auto closed = char_closed_form(spec, 8);
        const auto kw = char_kac_wakimoto(spec, 8);
        const auto rep = compare(closed, kw);
        CHECK(rep.pass());
        CHECK(rep.compared == closed.terms.size());
        CHECK(compare(closed, char_kl_oracle(spec, 8, 12)).pass());
    }
}

TEST_CASE("truncation ball") {
    const auto d = build_cartan("A2");
    const AffineWeight rho = d->rho_hat();
    // rho_bar is not in 3 Q^vee, so radius 0 catches nothing
    const auto ball = truncation_ball(*d, rho, 0);
    CHECK(ball.empty());
    const auto wide = truncation_ball(*d, rho, 20);
    CHECK(!wide.empty());
    const auto wider = truncation_ball(*d, rho, 40);
    CHECK(wider.size() > wide.size());
    CHECK_THROWS_AS(truncation_ball(*d, rho, -1), Error);
    CHECK_THROWS_AS(truncation_ball(*d, d->zero_weight(), 4), Error);
}
