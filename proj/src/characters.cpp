#include "affkl/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "affkl/error.hpp"

namespace affkl {

const char* route_name(Route r) {
    switch (r) {
    case Route::closed_form: return "closed";
    case Route::kac_wakimoto: return "kw";
    case Route::kl_oracle: return "kl";
    }
    return "closed";
}

Route parse_route(const std::string& s) {
    if (s == "closed" || s == "closed_form")
        return Route::closed_form;
    if (s == "kw" || s == "kac_wakimoto")
        return Route::kac_wakimoto;
    if (s == "kl" || s == "kl_oracle")
        return Route::kl_oracle;
    fail(ErrorCode::invalid_argument, "unknown route '" + s + "' (expected closed, kw or kl)");
}

namespace {

std::string index_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + "}";
}

// Shared tail of validate_pair and exploratory_spec.
void finish_spec(HighestWeightSpec& spec) {
    const CartanDatum& dt = *spec.datum;
    if (!is_longest_in_coset(dt, spec.lambda, spec.w))
        fail(ErrorCode::invalid_pair, "w is not the longest element of its coset under the stabiliser of lambda");
    spec.Lambda = spec.w.inverse().dot(spec.lambda);
    if (!classify_weight(dt, spec.Lambda).quasi_dominant)
        fail(ErrorCode::invalid_pair, "Lambda = w^{-1} . lambda is not quasi-dominant");
    if (spec.case_tag == CaseTag::singular_b) {
        AffineRoot a = spec.w.inverse().act(simple_affine_root(dt, spec.node));
        a.n += 1;
        spec.alpha = a;
        // (delta - alpha, Lambda + rho^) = kappa - <Lambda + rho^, alpha^vee>
        const AffineWeight top = spec.Lambda + dt.rho_hat();
        HhatVector co{-a.beta, 1 - a.n, 0};
        if (dt.pairing(top, co).numerator() != 0)
            fail(ErrorCode::internal, "delta - alpha is not orthogonal to Lambda + rho^");
    }
}

void check_lambda(const CartanDatum& dt, const AffineWeight& lambda) {
    if (lambda.c.size() != dt.rank() + 1)
        fail(ErrorCode::datum_mismatch, "weight has the wrong number of coefficients for " + dt.name());
    const AffineWeight shifted = lambda + dt.rho_hat();
    if (!(shifted.c.array() >= 0).all())
        fail(ErrorCode::invalid_pair, "lambda + rho^ is not dominant");
    if (dt.level(shifted) <= 0)
        fail(ErrorCode::invalid_pair, "lambda + rho^ does not have positive level");
}

} // namespace

HighestWeightSpec validate_pair(DatumPtr datum, const AffineWeight& lambda, Int i) {
    const CartanDatum& dt = *datum;
    check_lambda(dt, lambda);
    HighestWeightSpec spec;
    spec.datum = datum;
    spec.lambda = lambda;
    spec.i = i;
    if (dt.is_type_a()) {
        spec.node = residue(i, dt.rank() + 1);
    } else {
        if (i < 0 || i > dt.rank())
            fail(ErrorCode::invalid_argument, "i must be a node 0.." + std::to_string(dt.rank()));
        spec.node = static_cast<int>(i);
    }
    const std::vector<int> stab = stabilizer(dt, lambda);
    if (stab.empty())
        spec.case_tag = CaseTag::regular_a;
    else if (stab.size() == 1 && stab[0] == spec.node)
        spec.case_tag = CaseTag::singular_b;
    else
        fail(ErrorCode::invalid_pair, "stabiliser of lambda + rho^ is " + index_list(stab) + ", expected {} or {"
                                          + std::to_string(spec.node) + "}");
    spec.w = subregular_w(datum, i);
    finish_spec(spec);
    if (spec.alpha && !dt.is_type_a()
        && !(spec.alpha->n == 0 && spec.alpha->is_positive() && dt.is_root(spec.alpha->beta)))
        fail(ErrorCode::internal, "alpha is not a positive finite root");
    return spec;
}

HighestWeightSpec exploratory_spec(DatumPtr datum, const AffineWeight& lambda, const Word& word) {
    const CartanDatum& dt = *datum;
    check_lambda(dt, lambda);
    if (word.empty())
        fail(ErrorCode::invalid_argument, "exploratory spec needs a nonempty word");
    HighestWeightSpec spec;
    spec.datum = datum;
    spec.lambda = lambda;
    spec.node = word.front();
    spec.i = word.front();
    spec.exploratory = true;
    spec.w = AffineWeylElement::from_word(datum, word);
    if (spec.w.length() != static_cast<int>(word.size()))
        fail(ErrorCode::invalid_argument, "word is not reduced");
    const std::vector<int> stab = stabilizer(dt, lambda);
    if (stab.empty())
        spec.case_tag = CaseTag::regular_a;
    else if (stab.size() == 1 && stab[0] == spec.node)
        spec.case_tag = CaseTag::singular_b;
    else
        fail(ErrorCode::invalid_pair, "stabiliser of lambda + rho^ is " + index_list(stab));
    finish_spec(spec);
    return spec;
}

const CharacterTerm* CharacterTruncation::find(const AffineWeight& mu) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), mu, [](const CharacterTerm& t, const AffineWeight& m) {
        if (!same(t.weight.c, m.c))
            return std::lexicographical_compare(t.weight.c.data(), t.weight.c.data() + t.weight.c.size(), m.c.data(),
                                                m.c.data() + m.c.size());
        return t.weight.delta < m.delta;
    });
    if (it != terms.end() && it->weight == mu)
        return &*it;
    return nullptr;
}

std::vector<IntVec> truncation_ball(const CartanDatum& dt, const AffineWeight& nu, Int radius) {
    if (radius < 0)
        fail(ErrorCode::invalid_argument, "radius must be nonnegative");
    const Int kappa = dt.level(nu);
    if (kappa <= 0)
        fail(ErrorCode::invalid_argument, "truncation needs a base weight of positive level");
    const int r = dt.rank();
    const IntVec f = dt.finite_part(nu);
    const IntMat& adj = dt.cartan_adjugate();
    const Int det = dt.cartan_det();
    // Scaled norm: det |f + kappa A g|^2 = f.adj.f + 2 kappa det f.g + kappa^2 det g.A.g
    const Int ff = f.dot(adj * f);
    const Int bound = det * kappa * kappa * radius;
    std::vector<double> centre(static_cast<std::size_t>(r)), half(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        centre[static_cast<std::size_t>(j)] = -static_cast<double>(adj.row(j).dot(f)) / static_cast<double>(det * kappa);
        half[static_cast<std::size_t>(j)] =
            std::sqrt(static_cast<double>(radius) * static_cast<double>(adj(j, j)) / static_cast<double>(det)) + 1.0;
    }
    std::vector<IntVec> out;
    IntVec g(r);
    std::function<void(int)> rec = [&](int j) {
        if (j == r) {
            const Int v = ff + 2 * kappa * det * f.dot(g) + kappa * kappa * det * g.dot(dt.cartan() * g);
            if (v <= bound)
                out.push_back(g);
            return;
        }
        const auto lo = static_cast<Int>(std::floor(centre[static_cast<std::size_t>(j)] - half[static_cast<std::size_t>(j)]));
        const auto hi = static_cast<Int>(std::ceil(centre[static_cast<std::size_t>(j)] + half[static_cast<std::size_t>(j)]));
        for (Int x = lo; x <= hi; ++x) {
            g(j) = x;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

struct FiniteGroup {
    std::vector<AffineWeylElement> elements;
    std::vector<Word> words;
    std::vector<int> signs;
};

FiniteGroup finite_group(const DatumPtr& datum) {
    FiniteGroup g;
    g.elements = finite_weyl_group(datum);
    for (const auto& u : g.elements) {
        g.words.push_back(u.reduced_word());
        g.signs.push_back(g.words.back().size() % 2 == 0 ? 1 : -1);
    }
    return g;
}

class Accumulator {
public:
    void add(const AffineWeight& mu, Int coeff, const Word& u_word, const IntVec& gamma) {
        auto [it, fresh] = index_.try_emplace(mu, terms_.size());
        if (fresh) {
            terms_.push_back(CharacterTerm{mu, 0, u_word, gamma});
            dropped_.push_back(false);
        }
        terms_[it->second].coeff += coeff;
        ++presentations_;
    }

    void drop(const AffineWeight& mu) {
        auto [it, fresh] = index_.try_emplace(mu, terms_.size());
        if (fresh) {
            terms_.push_back(CharacterTerm{mu, 0, {}, IntVec()});
            dropped_.push_back(true);
        }
        dropped_[it->second] = true;
    }

    void finish(CharacterTruncation& out, Int divisor = 1) {
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (dropped_[k]) {
                ++out.incomplete;
                continue;
            }
            if (terms_[k].coeff % divisor != 0)
                fail(ErrorCode::internal, "merged coefficient is not an integer");
            terms_[k].coeff /= divisor;
            out.terms.push_back(std::move(terms_[k]));
        }
        std::sort(out.terms.begin(), out.terms.end(), [](const CharacterTerm& a, const CharacterTerm& b) {
            const auto& x = a.weight.c;
            const auto& y = b.weight.c;
            if (!same(x, y))
                return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
            return a.weight.delta < b.weight.delta;
        });
        out.presentations = presentations_;
    }

private:
    std::unordered_map<AffineWeight, std::size_t, AffineWeightHash> index_;
    std::vector<CharacterTerm> terms_;
    std::vector<bool> dropped_;
    std::size_t presentations_ = 0;
};

// Calls fn(u index, gamma, u t_gamma(nu)) for every presentation in the ball.
template <class Fn>
void for_each_presentation(const DatumPtr& datum, const FiniteGroup& fin, const AffineWeight& nu, Int radius, Fn&& fn) {
    for (const IntVec& gamma : truncation_ball(*datum, nu, radius)) {
        const AffineWeight translated = AffineWeylElement::translation(datum, gamma).act(nu);
        for (std::size_t k = 0; k < fin.elements.size(); ++k)
            fn(k, gamma, fin.elements[k].act(translated));
    }
}

CharacterTruncation start(const HighestWeightSpec& spec, Int radius, Route route) {
    CharacterTruncation t;
    t.spec = spec;
    t.radius = radius;
    t.route = route;
    return t;
}

} // namespace

CharacterTruncation char_closed_form(const HighestWeightSpec& spec, Int radius) {
    if (spec.exploratory)
        fail(ErrorCode::invalid_pair, "the closed form applies to w_i only");
    const DatumPtr& datum = spec.datum;
    const FiniteGroup fin = finite_group(datum);
    const int sign_w = spec.w.sign();
    const AffineWeight top = spec.w.act(spec.Lambda + datum->rho_hat());
    Accumulator acc;
    for_each_presentation(datum, fin, top, radius, [&](std::size_t k, const IntVec& gamma, const AffineWeight& mu) {
        const Int m = m_closed(*datum, spec.i, IntVec(-gamma));
        acc.add(mu, fin.signs[k] * sign_w * m, fin.words[k], gamma);
    });
    CharacterTruncation t = start(spec, radius, Route::closed_form);
    acc.finish(t);
    return t;
}

CharacterTruncation char_kac_wakimoto(const HighestWeightSpec& spec, Int radius) {
    if (spec.case_tag != CaseTag::singular_b || !spec.alpha)
        fail(ErrorCode::invalid_pair, "the Kac-Wakimoto shape needs a singular spec (case b)");
    const DatumPtr& datum = spec.datum;
    const CartanDatum& dt = *datum;
    const FiniteGroup fin = finite_group(datum);
    const AffineWeight top = spec.Lambda + dt.rho_hat();
    Accumulator acc;
    CharacterTruncation t = start(spec, radius, Route::kac_wakimoto);
    if (dt.is_type_a()) {
        // Indicator of <Lambda_bar_{n-1}, gamma> >= 0 (i >= 0) or <Lambda_bar_1, gamma> >= 0 (i <= 0).
        const int coord = spec.i >= 0 ? dt.rank() - 1 : 0;
        for_each_presentation(datum, fin, top, radius, [&](std::size_t k, const IntVec& gamma, const AffineWeight& mu) {
            acc.add(mu, gamma(coord) >= 0 ? fin.signs[k] : 0, fin.words[k], gamma);
        });
        acc.finish(t);
        return t;
    }
    // (1/2) eps(u) (<alpha, gamma> + 1); accumulate doubled values and halve after merging.
    const IntVec a_dual = dt.cartan() * spec.alpha->beta;
    for_each_presentation(datum, fin, top, radius, [&](std::size_t k, const IntVec& gamma, const AffineWeight& mu) {
        acc.add(mu, fin.signs[k] * (a_dual.dot(gamma) + 1), fin.words[k], gamma);
    });
    acc.finish(t, 2);
    return t;
}

CharacterTruncation char_kl_oracle(const HighestWeightSpec& spec, Int radius, AntisphericalModule& module) {
    const DatumPtr& datum = spec.datum;
    if (!(*module.index().datum() == *datum))
        fail(ErrorCode::datum_mismatch, "module and spec belong to different types");
    const FiniteGroup fin = finite_group(datum);
    ElementIndex& index = module.index();
    const ElemId v = index.id(spec.w);
    if (!index.is_min_coset(v))
        fail(ErrorCode::invalid_pair, "w is not a minimal coset representative");
    const int sign_v = spec.w.sign();
    const AffineWeight top = spec.lambda + datum->rho_hat();
    const int cap = module.algebra().config().length_cap;
    // Coefficient eps(u w_nu) m^{w_{-gamma}}_{w_nu}(1) at u t_gamma(lambda + rho^).
    std::unordered_map<AffineWeylElement, std::optional<Int>, AffineWeylHash> column;
    auto mult = [&](const IntVec& gamma) -> std::optional<Int> {
        const AffineWeylElement key = AffineWeylElement::translation(datum, gamma);
        if (auto it = column.find(key); it != column.end())
            return it->second;
        std::optional<Int> m;
        const ElemId wg = module.min_rep(IntVec(-gamma));
        if (index.length(wg) <= cap) {
            const auto inv = module.parabolic_inverse(wg);
            auto it = inv.find(v);
            m = it == inv.end() ? 0 : it->second.eval_at_one();
        }
        column.emplace(key, m);
        return m;
    };
    Accumulator acc;
    for_each_presentation(datum, fin, top, radius, [&](std::size_t k, const IntVec& gamma, const AffineWeight& mu) {
        const std::optional<Int> m = mult(gamma);
        if (!m)
            acc.drop(mu);
        else
            acc.add(mu, fin.signs[k] * sign_v * *m, fin.words[k], gamma);
    });
    CharacterTruncation t = start(spec, radius, Route::kl_oracle);
    acc.finish(t);
    return t;
}

CharacterTruncation char_kl_oracle(const HighestWeightSpec& spec, Int radius, int length_cap) {
    HeckeAlgebra algebra(spec.datum, KlConfig{length_cap});
    AntisphericalModule module(algebra);
    return char_kl_oracle(spec, radius, module);
}

CharacterTruncation build_character(const HighestWeightSpec& spec, Int radius, Route route, int length_cap) {
    switch (route) {
    case Route::closed_form: return char_closed_form(spec, radius);
    case Route::kac_wakimoto: return char_kac_wakimoto(spec, radius);
    case Route::kl_oracle: return char_kl_oracle(spec, radius, length_cap);
    }
    fail(ErrorCode::invalid_argument, "unknown route");
}

CompareReport compare(const CharacterTruncation& a, const CharacterTruncation& b) {
    if (!(*a.spec.datum == *b.spec.datum) || !(a.spec.Lambda == b.spec.Lambda))
        fail(ErrorCode::invalid_argument, "cannot compare tables of different highest weights");
    CompareReport rep;
    for (const auto& t : a.terms) {
        const CharacterTerm* o = b.find(t.weight);
        if (!o)
            continue;
        ++rep.compared;
        const Int diff = t.coeff > o->coeff ? t.coeff - o->coeff : o->coeff - t.coeff;
        if (diff != 0) {
            rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
            rep.mismatches.push_back(Mismatch{t.weight, t.coeff, o->coeff});
        }
    }
    return rep;
}

InvariantReport check_invariants(const CharacterTruncation& t) {
    InvariantReport rep;
    const CartanDatum& dt = *t.spec.datum;
    const CharacterTerm* top = t.find(t.spec.Lambda + dt.rho_hat());
    rep.highest_term_is_one = top && top->coeff == 1;
    for (const auto& term : t.terms) {
        for (int j = 1; j <= dt.rank(); ++j) {
            AffineWeight s = term.weight;
            s.c -= term.weight.c(j) * dt.affine_cartan().col(j);
            const CharacterTerm* o = t.find(s);
            if (!o)
                continue;
            ++rep.antisymmetry_checked;
            if (o->coeff != -term.coeff)
                ++rep.antisymmetry_failures;
        }
    }
    return rep;
}

} // namespace affkl
