#include "affkl/antispherical.hpp"

#include <algorithm>

#include "affkl/error.hpp"

namespace affkl {

AntisphericalModule::AntisphericalModule(HeckeAlgebra& algebra)
    : algebra_(algebra), index_(algebra.index()) {}

ElemId AntisphericalModule::min_rep(const IntVec& gamma) {
    return index_.coset_rep(index_.id(AffineWeylElement::translation(index_.datum(), gamma)));
}

std::vector<ElemId> AntisphericalModule::min_coset_ball(int max_length) {
    // Left prefixes of minimal representatives are minimal, so a left BFS reaches all of them.
    std::vector<ElemId> out{index_.identity()};
    std::size_t begin = 0;
    for (int len = 0; len < max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (int s = 0; s < index_.generators(); ++s) {
                const ElemId y = index_.left_mul(s, out[k]);
                if (index_.length(y) == len + 1 && index_.is_min_coset(y)
                    && std::find(out.begin() + static_cast<std::ptrdiff_t>(end), out.end(), y) == out.end())
                    out.push_back(y);
            }
        begin = end;
    }
    return out;
}

ModuleElement AntisphericalModule::project(const HeckeElement& h) {
    ModuleElement m;
    for (const auto& [x, p] : h.terms) {
        const ElemId rep = index_.coset_rep(x);
        const int du = index_.length(x) - index_.length(rep);
        m.terms[rep].add_scaled(p, du % 2 == 0 ? 1 : -1, 0);
    }
    prune(m.terms);
    return m;
}

ModuleElement AntisphericalModule::act_generator(int s, const ModuleElement& m) {
    ModuleElement out;
    for (const auto& [x, p] : m.terms) {
        if (!index_.is_min_coset(x))
            fail(ErrorCode::invalid_argument, "module element supported off the minimal coset representatives");
        const ElemId y = index_.left_mul(s, x);
        if (index_.length(y) > index_.length(x)) {
            if (index_.is_min_coset(y))
                out.terms[y] += p;
            else
                out.terms[x] -= p;
        } else {
            out.terms[y].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, -1, 0);
        }
    }
    prune(out.terms);
    return out;
}

ModuleElement AntisphericalModule::act(const HeckeElement& h, const ModuleElement& m) {
    ModuleElement out;
    for (const auto& [x, p] : h.terms) {
        ModuleElement t = m;
        const Word word = index_.reduced_word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            t = act_generator(*it, t);
        add_scaled(out.terms, t.terms, p);
    }
    prune(out.terms);
    return out;
}

ModuleElement AntisphericalModule::bar(const ModuleElement& m) {
    // H'_x = phi(H_x) for minimal x, and phi commutes with the bar involution.
    ModuleElement out;
    for (const auto& [x, p] : m.terms) {
        ModuleElement b = project(HeckeElement{algebra_.bar_standard(x)});
        add_scaled(out.terms, b.terms, p.bar());
    }
    prune(out.terms);
    return out;
}

void AntisphericalModule::check_cap(ElemId x) const {
    if (index_.length(x) > algebra_.config().length_cap)
        fail(ErrorCode::cap_exceeded, "element of length " + std::to_string(index_.length(x))
                                          + " exceeds the Kazhdan-Lusztig length cap "
                                          + std::to_string(algebra_.config().length_cap));
}

const SparseVec& AntisphericalModule::parabolic_kl(ElemId x) {
    if (auto it = kl_.find(x); it != kl_.end())
        return it->second;
    if (!index_.is_min_coset(x))
        fail(ErrorCode::invalid_argument, "parabolic KL basis requested for a non-minimal coset representative");
    check_cap(x);
    SparseVec d;
    if (x == index_.identity()) {
        d[x] = LaurentPoly(1);
    } else {
        const int s = index_.first_left_descent(x);
        ModuleElement prev{parabolic_kl(index_.left_mul(s, x))};
        ModuleElement hs = act_generator(s, prev);
        d = std::move(hs.terms);
        add_scaled(d, prev.terms, 1, 0);
        detail::reduce_to_kl(d, x, index_, [this](ElemId z) -> const SparseVec& { return parabolic_kl(z); });
    }
    return kl_.emplace(x, std::move(d)).first->second;
}

const SparseVec& AntisphericalModule::standard_in_kl(ElemId x) {
    if (auto it = inv_.find(x); it != inv_.end())
        return it->second;
    check_cap(x);
    SparseVec e;
    e[x] = LaurentPoly(1);
    const SparseVec cx = parabolic_kl(x);
    for (const auto& [z, p] : cx) {
        if (z == x)
            continue;
        add_scaled(e, standard_in_kl(z), -p);
    }
    prune(e);
    return inv_.emplace(x, std::move(e)).first->second;
}

std::map<ElemId, LaurentPoly> AntisphericalModule::parabolic_inverse(ElemId x) {
    std::map<ElemId, LaurentPoly> out;
    const int lx = index_.length(x);
    for (const auto& [z, p] : standard_in_kl(x))
        out[z] = (lx + index_.length(z)) % 2 == 0 ? p : -p;
    return out;
}

ModuleElement AntisphericalModule::t_basis(const IntVec& gamma) {
    const ElemId x = min_rep(gamma);
    ModuleElement m;
    m.terms[x] = LaurentPoly(index_.length(x) % 2 == 0 ? 1 : -1);
    return m;
}

ModuleElement AntisphericalModule::c_basis(const IntVec& nu) {
    const ElemId x = min_rep(nu);
    ModuleElement m;
    add_scaled(m.terms, parabolic_kl(x), index_.length(x) % 2 == 0 ? 1 : -1, 0);
    return m;
}

std::map<ElemId, LaurentPoly> AntisphericalModule::t_in_c(const IntVec& gamma) {
    // The sign normalisations of T and C cancel against eps(w_gamma w_nu^{-1}).
    return parabolic_inverse(min_rep(gamma));
}

} // namespace affkl
