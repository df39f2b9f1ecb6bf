#include "affkl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

#include "affkl/error.hpp"

namespace affkl {

namespace {

std::string summary(const SuiteResult& r, const std::string& what) {
    return what + ": " + std::to_string(r.checked) + " checked, " + std::to_string(r.failures) + " failed";
}

bool in_interval(Int x, Int lo, Int hi) { return lo <= x && x <= hi; }

} // namespace

std::vector<Int> subregular_indices(const CartanDatum& datum, int cap) {
    std::vector<Int> out;
    if (datum.is_type_a()) {
        // l(w_i) = |i| + 1
        for (Int i = -(cap - 1); i <= cap - 1; ++i)
            out.push_back(i);
        return out;
    }
    for (int i = 0; i <= datum.rank(); ++i)
        if (static_cast<int>(subregular_word(datum, i).size()) <= cap)
            out.push_back(i);
    return out;
}

SuiteResult verify_oracle_equality(DatumPtr datum, int cap) {
    SuiteResult res;
    HeckeAlgebra algebra(datum, KlConfig{cap});
    AntisphericalModule module(algebra);
    ElementIndex& index = algebra.index();
    std::vector<std::pair<Int, ElemId>> subreg;
    for (Int i : subregular_indices(*datum, cap)) {
        const ElemId wi = index.id(subregular_w(datum, i));
        res.record(index.is_min_coset(wi) && index.length(wi) <= cap);
        subreg.emplace_back(i, wi);
    }
    for (ElemId x : module.min_coset_ball(cap)) {
        const IntVec gamma = index.element(x).gamma();
        const auto column = module.parabolic_inverse(x);
        for (const auto& [i, wi] : subreg) {
            auto it = column.find(wi);
            const Int kl = it == column.end() ? 0 : it->second.eval_at_one();
            res.record(kl == m_closed(*datum, i, gamma));
        }
    }
    res.detail = summary(res, datum->name() + " closed form vs parabolic inverse KL, cap " + std::to_string(cap));
    return res;
}

SuiteResult verify_diagonal(DatumPtr datum, int cap) {
    SuiteResult res;
    HeckeAlgebra algebra(datum, KlConfig{cap});
    AntisphericalModule module(algebra);
    for (ElemId x : module.min_coset_ball(cap)) {
        const auto column = module.parabolic_inverse(x);
        auto it = column.find(x);
        res.record(it != column.end() && it->second == LaurentPoly(1));
    }
    res.detail = summary(res, datum->name() + " diagonal m = 1, cap " + std::to_string(cap));
    return res;
}

SuiteResult verify_parabolic_full(DatumPtr datum, int max_length) {
    SuiteResult res;
    HeckeAlgebra algebra(datum, KlConfig{max_length});
    AntisphericalModule module(algebra);
    ElementIndex& index = algebra.index();
    for (ElemId x : module.min_coset_ball(max_length)) {
        const auto par = module.parabolic_inverse(x);
        const auto full = algebra.inverse_kl(x);
        std::set<ElemId> keys;
        for (const auto& [v, p] : par)
            keys.insert(v);
        for (const auto& [v, p] : full)
            if (index.is_min_coset(v))
                keys.insert(v);
        for (ElemId v : keys) {
            auto a = par.find(v);
            auto b = full.find(v);
            const LaurentPoly pa = a == par.end() ? LaurentPoly() : a->second;
            const LaurentPoly pb = b == full.end() ? LaurentPoly() : b->second;
            res.record(pa == pb);
        }
    }
    res.detail = summary(res, datum->name() + " parabolic vs full inverse KL, length <= " + std::to_string(max_length));
    return res;
}

SuiteResult verify_module_identity(DatumPtr datum, int samples, Int max_norm, std::uint64_t seed) {
    SuiteResult res;
    const CartanDatum& dt = *datum;
    std::mt19937_64 rng(seed);
    std::vector<Int> half;
    for (int j = 0; j < dt.rank(); ++j)
        half.push_back(static_cast<Int>(std::floor(std::sqrt(static_cast<double>(max_norm)
                                                             * static_cast<double>(dt.cartan_adjugate()(j, j))
                                                             / static_cast<double>(dt.cartan_det())))));
    int drawn = 0;
    while (drawn < samples) {
        IntVec g(dt.rank());
        for (int j = 0; j < dt.rank(); ++j)
            g(j) = std::uniform_int_distribution<Int>(-half[static_cast<std::size_t>(j)],
                                                      half[static_cast<std::size_t>(j)])(rng);
        if (dt.norm_sq(g) > max_norm)
            continue;
        ++drawn;
        res.record(decompose_translate(datum, g) == closed_column(dt, g));
    }
    res.detail = summary(res, dt.name() + " decompose_translate vs closed column");
    return res;
}

SuiteResult verify_z_table(int n, Int i_range, Int a_range) {
    SuiteResult res;
    for (Int i = -i_range; i <= i_range; ++i) {
        if (i % n == 0)
            continue;
        const int ri = residue(i, n);
        for (Int a = -a_range; a <= a_range; ++a) {
            const Int lhs = z_value(i, -a, ri, n) - z_value(i, -a, ri + 1, n);
            Int first = 0;
            if (a >= 0 && in_interval(i, ri - a * n, ri - n))
                first = -1;
            if (a <= 0 && in_interval(i, ri, ri + (-a - 1) * n))
                first = 1;
            Int second = 0;
            if (in_interval(i, ri, ri + (-a - 1) * n))
                second = 1;
            else if (in_interval(i, ri - a * n, ri - n))
                second = -1;
            res.record(lhs == first && lhs == second);
        }
    }
    res.detail = summary(res, "z case table, n = " + std::to_string(n));
    return res;
}

SuiteResult verify_lengths(DatumPtr datum, int max_length) {
    SuiteResult res;
    const auto elements = enumerate_up_to_length(datum, max_length);
    std::unordered_set<AffineWeylElement, AffineWeylHash> previous, current;
    // enumerate_up_to_length is breadth-first, so the level of an element is its length.
    std::size_t k = 0;
    for (int len = 0; len <= max_length; ++len) {
        std::unordered_set<AffineWeylElement, AffineWeylHash> next;
        if (len == 0) {
            next.insert(AffineWeylElement::identity(datum));
        } else {
            for (const auto& w : current)
                for (int s = 0; s <= datum->rank(); ++s) {
                    AffineWeylElement y = AffineWeylElement::generator(datum, s) * w;
                    if (!previous.count(y) && !current.count(y))
                        next.insert(std::move(y));
                }
        }
        for (const auto& w : next) {
            const Word word = w.reduced_word();
            res.record(static_cast<int>(word.size()) == len && AffineWeylElement::from_word(datum, word) == w);
        }
        std::size_t same_level = 0;
        while (k < elements.size() && elements[k].length() == len) {
            same_level += next.count(elements[k]);
            ++k;
        }
        res.record(same_level == next.size());
        previous = std::move(current);
        current = std::move(next);
    }
    res.detail = summary(res, datum->name() + " greedy vs breadth-first length, length <= " + std::to_string(max_length));
    return res;
}

SuiteResult verify_kl_sanity(DatumPtr datum, int max_length) {
    SuiteResult res;
    HeckeAlgebra algebra(datum, KlConfig{max_length});
    ElementIndex& index = algebra.index();
    const auto elements = enumerate_up_to_length(datum, max_length);
    for (const auto& v : elements) {
        const ElemId vid = index.id(v);
        const SparseVec c = algebra.kl_basis(vid);
        // bar(C_v) = q^{-l(v)} C_v
        HeckeElement barred = algebra.bar(HeckeElement{c});
        SparseVec scaled;
        add_scaled(scaled, c, 1, -index.length(vid));
        res.record(equal(barred.terms, scaled));
        // Bruhat interval below v from subwords of a reduced word.
        const Word word = v.reduced_word();
        std::unordered_set<AffineWeylElement, AffineWeylHash> below;
        for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
            AffineWeylElement w = AffineWeylElement::identity(datum);
            for (std::size_t b = 0; b < word.size(); ++b)
                if (mask & (1u << b))
                    w = w * AffineWeylElement::generator(datum, word[b]);
            below.insert(std::move(w));
        }
        bool support_ok = c.size() == below.size();
        for (const auto& [x, p] : c)
            support_ok = support_ok && below.count(index.element(x));
        res.record(support_ok);
        for (const auto& w : below) {
            if (index.length(vid) - w.length() > 2)
                continue;
            auto it = c.find(index.id(w));
            res.record(it != c.end() && it->second == LaurentPoly(1));
        }
        // m^w_v = m^{w^-1}_{v^-1}
        const auto m = algebra.inverse_kl(vid);
        const auto mi = algebra.inverse_kl(index.id(v.inverse()));
        bool sym = m.size() == mi.size();
        for (const auto& [x, p] : m) {
            auto it = mi.find(index.id(index.element(x).inverse()));
            sym = sym && it != mi.end() && it->second == p;
        }
        res.record(sym);
    }
    res.detail = summary(res, datum->name() + " KL sanity, length <= " + std::to_string(max_length));
    return res;
}

std::vector<ExampleSpec> d4_examples(bool exploratory) {
    auto weight = [](std::initializer_list<std::pair<int, Int>> entries) {
        std::vector<Int> c(5, 0);
        for (auto [i, v] : entries)
            c[static_cast<std::size_t>(i)] += v;
        return c;
    };
    std::vector<ExampleSpec> out;
    const int outer[3] = {1, 3, 4};
    if (!exploratory) {
        out.push_back({"d4-ex-1", weight({{0, -1}}), 0, {}});
        for (int k : outer)
            out.push_back({"d4-ex-2-k" + std::to_string(k), weight({{k, 1}, {2, -1}}), 2, {}});
        out.push_back({"d4-ex-3", weight({{0, 1}, {2, -1}}), 2, {}});
        for (int p : outer)
            out.push_back({"d4-ex-4-p" + std::to_string(p), weight({{p, -1}}), p, {}});
        return out;
    }
    for (int k : outer)
        for (int l : outer) {
            if (l == k)
                continue;
            const int p = 8 - k - l;
            const std::string tag = "-k" + std::to_string(k) + "l" + std::to_string(l);
            out.push_back({"d4-ex-5" + tag, weight({{l, -1}}), l, {l, p, 2, 0}});
            out.push_back({"d4-ex-6" + tag, weight({{k, -1}}), k, {k, p, l, 2, 0}});
            out.push_back({"d4-ex-7" + tag, weight({{k, 1}, {2, -1}}), 2, {2, l, p, 2, 0}});
        }
    return out;
}

std::vector<ExampleSpec> type_a_corollary_examples(int n, bool include_negative) {
    std::vector<ExampleSpec> out;
    for (Int i = include_negative ? -2 : 0; i <= 2; ++i) {
        std::vector<Int> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(residue(i, n))] = -1;
        out.push_back({"a" + std::to_string(n - 1) + "-corollary-i" + std::to_string(i), c, i, {}});
    }
    return out;
}

SuiteResult verify_kw_agreement(Int radius) {
    SuiteResult res;
    const DatumPtr d4 = build_cartan("D4");
    for (const auto& ex : d4_examples(false)) {
        const HighestWeightSpec spec = validate_pair(d4, d4->parse_weight(ex.lambda), ex.i);
        const CompareReport rep = compare(char_closed_form(spec, radius), char_kac_wakimoto(spec, radius));
        res.record(rep.pass() && rep.compared > 0);
    }
    res.detail = summary(res, "D4 items 1-4 closed form vs Kac-Wakimoto, radius " + std::to_string(radius));
    return res;
}

SuiteResult verify_type_a_corollary(Int radius, int kl_cap) {
    SuiteResult res;
    for (int n : {3, 4}) {
        const DatumPtr dt = build_cartan("A" + std::to_string(n - 1));
        for (const auto& ex : type_a_corollary_examples(n, false)) {
            const HighestWeightSpec spec = validate_pair(dt, dt->parse_weight(ex.lambda), ex.i);
            // Lambda = -(1+i) Lambda_0 + i Lambda_{n-1}, up to delta.
            AffineWeight expected = dt->zero_weight();
            expected.c(0) = -(1 + ex.i);
            expected.c(n - 1) += ex.i;
            res.record(same(spec.Lambda.c, expected.c));
            const CharacterTruncation closed = char_closed_form(spec, radius);
            const CompareReport kw = compare(closed, char_kac_wakimoto(spec, radius));
            res.record(kw.pass() && kw.compared == closed.terms.size());
            if (kl_cap > 0) {
                const CompareReport kl = compare(closed, char_kl_oracle(spec, radius, kl_cap));
                res.record(kl.pass() && kl.compared > 0);
            }
        }
    }
    res.detail = summary(res, "type A corollary, radius " + std::to_string(radius));
    return res;
}

SuiteResult verify_table_invariants(Int radius, int kl_cap) {
    SuiteResult res;
    auto check = [&](const HighestWeightSpec& spec, bool kw) {
        std::vector<CharacterTruncation> tables{char_closed_form(spec, radius)};
        if (kw)
            tables.push_back(char_kac_wakimoto(spec, radius));
        if (kl_cap > 0)
            tables.push_back(char_kl_oracle(spec, radius, kl_cap));
        for (const auto& t : tables) {
            const InvariantReport rep = check_invariants(t);
            res.record(rep.pass() && rep.antisymmetry_checked > 0);
        }
    };
    const DatumPtr d4 = build_cartan("D4");
    for (const auto& ex : d4_examples(false))
        check(validate_pair(d4, d4->parse_weight(ex.lambda), ex.i), true);
    for (Int i : {0, 2})
        check(validate_pair(d4, d4->zero_weight(), i), false);
    for (int n : {3, 4}) {
        const DatumPtr dt = build_cartan("A" + std::to_string(n - 1));
        for (const auto& ex : type_a_corollary_examples(n, true))
            check(validate_pair(dt, dt->parse_weight(ex.lambda), ex.i), true);
        check(validate_pair(dt, dt->zero_weight(), 1), false);
    }
    res.detail = summary(res, "character table invariants, radius " + std::to_string(radius));
    return res;
}

} // namespace affkl
