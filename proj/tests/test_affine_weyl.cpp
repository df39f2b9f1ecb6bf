#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "affkl/affine_weyl.hpp"
#include "affkl/error.hpp"

using namespace affkl;

namespace {

AffineWeylElement random_element(const DatumPtr& d, std::mt19937& rng, int letters) {
    std::uniform_int_distribution<int> pick(0, d->rank());
    Word w;
    for (int k = 0; k < letters; ++k)
        w.push_back(pick(rng));
    return AffineWeylElement::from_word(d, w);
}

// Number of positive affine roots made negative, counted directly.
int inversion_count(const AffineWeylElement& w) {
    const CartanDatum& d = *w.datum();
    Int bound = 2;
    for (const IntVec& b : d.positive_roots())
        bound = std::max(bound, std::abs(d.inner(b, w.gamma())) + 2);
    int count = 0;
    for (const IntVec& b : d.positive_roots())
        for (int sign : {1, -1})
            for (Int n = 0; n <= bound; ++n) {
                const AffineRoot a{IntVec(sign * b), n};
                if (!a.is_positive())
                    continue;
                if (!w.act(a).is_positive())
                    ++count;
            }
    return count;
}

Int floor_div(Int a, Int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// Length of a periodic permutation from its window.
Int window_length(const std::vector<Int>& w) {
    const Int n = static_cast<Int>(w.size());
    Int len = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            len += std::abs(floor_div(w[j] - w[i], n));
    return len;
}

std::size_t count_reduced_words(const AffineWeylElement& w) {
    if (w.is_identity())
        return 1;
    std::size_t total = 0;
    for (int s : w.left_descents())
        total += count_reduced_words(AffineWeylElement::generator(w.datum(), s) * w);
    return total;
}

} // namespace

TEST_CASE("generators are involutions satisfying the braid relations") {
    for (const char* t : {"A2", "A3", "D4", "E6"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        const int r = d->rank();
        for (int i = 0; i <= r; ++i) {
            const auto si = AffineWeylElement::generator(d, i);
            CHECK((si * si).is_identity());
            CHECK(si.length() == 1);
            for (int j = i + 1; j <= r; ++j) {
                const auto sj = AffineWeylElement::generator(d, j);
                const bool linked = d->affine_cartan()(i, j) != 0;
                AffineWeylElement p = si * sj;
                AffineWeylElement power = p;
                for (int k = 1; k < (linked ? 3 : 2); ++k)
                    power = power * p;
                CHECK(power.is_identity());
            }
        }
    }
}

TEST_CASE("ball sizes") {
    const auto a2 = build_cartan("A2");
    CHECK(enumerate_up_to_length(a2, 2).size() == 10);
    CHECK(enumerate_up_to_length(a2, 12).size() == 235);
    const auto d4 = build_cartan("D4");
    const auto ball = enumerate_up_to_length(d4, 8);
    CHECK(ball.size() == 1076);
    CHECK(finite_weyl_group(d4).size() == 192);
    CHECK(finite_weyl_group(build_cartan("E6")).size() == 51840);
    CHECK_THROWS_AS(enumerate_up_to_length(d4, 12, 1000), CapExceeded);
}

TEST_CASE("reduced words") {
    const auto d4 = build_cartan("D4");
    const auto w = AffineWeylElement::from_word(d4, {2, 0});
    CHECK(w.reduced_word() == Word{2, 0});
    CHECK(AffineWeylElement::from_word(d4, {2, 0, 0}).reduced_word() == Word{2});
    CHECK(w.is_left_descent(2));
    CHECK(!w.is_left_descent(0));
    CHECK(w.is_right_descent(0));
    CHECK(w.sign() == 1);
}

TEST_CASE("length equals the number of inverted positive affine roots") {
    std::mt19937 rng(7);
    for (const char* t : {"A2", "A3", "D4", "E6"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        for (int k = 0; k < 40; ++k) {
            const auto w = random_element(d, rng, 1 + k % 14);
            CHECK(w.length() == inversion_count(w));
            CHECK(w.inverse().length() == w.length());
            CHECK(AffineWeylElement::from_word(d, w.reduced_word()) == w);
        }
    }
}

TEST_CASE("actions are compatible with the product") {
    std::mt19937 rng(11);
    for (const char* t : {"A3", "D4"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        const int r = d->rank();
        std::uniform_int_distribution<Int> coef(-4, 4);
        for (int k = 0; k < 30; ++k) {
            const auto w1 = random_element(d, rng, 6);
            const auto w2 = random_element(d, rng, 7);
            std::vector<Int> c(static_cast<std::size_t>(r + 1));
            for (Int& x : c)
                x = coef(rng);
            const AffineWeight mu = d->parse_weight(c, Rational(coef(rng), 2));
            CHECK((w1 * w2).act(mu) == w1.act(w2.act(mu)));
            CHECK((w1 * w2).dot(mu) == w1.dot(w2.dot(mu)));
            HhatVector h{IntVec::Zero(r), coef(rng), coef(rng)};
            for (int j = 0; j < r; ++j)
                h.x(j) = coef(rng);
            CHECK((w1 * w2).act(h) == w1.act(w2.act(h)));
            CHECK(d->pairing(w1.act(mu), w1.act(h)) == d->pairing(mu, h));
            const AffineRoot a{d->positive_roots()[static_cast<std::size_t>(k) % d->positive_roots().size()], k % 3 - 1};
            CHECK((w1 * w2).act(a) == w1.act(w2.act(a)));
            CHECK(d->level(w1.act(mu)) == d->level(mu));
        }
    }
}

TEST_CASE("type A windows") {
    const auto a3 = build_cartan("A3");
    CHECK(AffineWeylElement::generator(a3, 0).window() == std::vector<Int>{0, 2, 3, 5});
    CHECK(AffineWeylElement::generator(a3, 2).window() == std::vector<Int>{1, 3, 2, 4});
    CHECK(AffineWeylElement::identity(a3).window() == std::vector<Int>{1, 2, 3, 4});
    std::mt19937 rng(3);
    for (int k = 0; k < 60; ++k) {
        const auto w = random_element(a3, rng, 1 + k % 12);
        const auto win = w.window();
        CHECK(AffineWeylElement::from_window(a3, win) == w);
        CHECK(window_length(win) == w.length());
    }
    CHECK_THROWS_AS(AffineWeylElement::from_window(a3, {1, 2, 3, 8}), Error);
    CHECK_THROWS_AS(AffineWeylElement::from_window(a3, {1, 5, 3, 4}), Error);
    CHECK_THROWS_AS(AffineWeylElement::identity(build_cartan("D4")).window(), Error);
}

TEST_CASE("epsilon coordinates") {
    const IntVec g = from_epsilon({2, -1, 0, -1});
    CHECK(to_epsilon(g) == std::vector<Int>{2, -1, 0, -1});
    CHECK_THROWS_AS(from_epsilon({1, 1}), Error);
    CHECK(residue(-1, 3) == 2);
    CHECK(residue(7, 3) == 1);
}

TEST_CASE("minimal coset representatives") {
    for (const char* t : {"A2", "D4"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        std::mt19937 rng(5);
        std::uniform_int_distribution<Int> coef(-3, 3);
        for (int k = 0; k < 25; ++k) {
            IntVec g(d->rank());
            for (int j = 0; j < d->rank(); ++j)
                g(j) = coef(rng);
            const auto w = min_coset_rep(d, g);
            CHECK(same(w.gamma(), g));
            for (int j = 1; j <= d->rank(); ++j)
                CHECK(!w.is_right_descent(j));
            // minimal: every other coset element is longer
            for (const auto& u : finite_weyl_group(d))
                CHECK((w * u).length() == w.length() + u.length());
        }
    }
}

TEST_CASE("subregular elements") {
    const auto d4 = build_cartan("D4");
    CHECK(subregular_word(*d4, 0) == Word{0});
    CHECK(subregular_word(*d4, 2) == Word{2, 0});
    CHECK(subregular_word(*d4, 1) == Word{1, 2, 0});
    CHECK_THROWS_AS(subregular_word(*d4, 5), Error);
    const auto a2 = build_cartan("A2");
    CHECK(subregular_word(*a2, 2) == Word{2, 1, 0});
    CHECK(subregular_word(*a2, -2) == Word{1, 2, 0});
    for (const char* t : {"A2", "A3", "D4", "D5", "E6"}) {
        CAPTURE(t);
        const auto d = build_cartan(t);
        const Int lo = d->is_type_a() ? -5 : 0;
        const Int hi = d->is_type_a() ? 5 : d->rank();
        for (Int i = lo; i <= hi; ++i) {
            CAPTURE(i);
            const auto w = subregular_w(d, i);
            const Word word = subregular_word(*d, i);
            CHECK(w.length() == static_cast<int>(word.size()));
            CHECK(count_reduced_words(w) == 1);
            // w_i is minimal in its coset t_nu W^fin
            CHECK(min_coset_rep(d, subregular_nu(d, i)) == w);
        }
    }
    // s_0 = t_theta s_theta, so nu_0 = theta^vee
    CHECK(same(subregular_nu(d4, 0), d4->highest_root()));
}

TEST_CASE("stabilisers and longest coset elements") {
    const auto d4 = build_cartan("D4");
    const AffineWeight lambda = d4->parse_weight({-1, 0, 0, 0, 0});
    CHECK(is_longest_in_coset(*d4, lambda, AffineWeylElement::generator(d4, 0)));
    CHECK(!is_longest_in_coset(*d4, lambda, AffineWeylElement::generator(d4, 2)));
    CHECK(is_longest_in_coset(*d4, d4->zero_weight(), AffineWeylElement::generator(d4, 2)));
}
