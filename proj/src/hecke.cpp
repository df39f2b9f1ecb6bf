#include "affkl/hecke.hpp"

#include "affkl/error.hpp"

namespace affkl {

ElementIndex::ElementIndex(DatumPtr datum) : datum_(std::move(datum)) {
    intern(AffineWeylElement::identity(datum_), 0);
}

ElemId ElementIndex::intern(AffineWeylElement w, int length) {
    const auto x = static_cast<ElemId>(elements_.size());
    ids_.emplace(w, x);
    elements_.push_back(std::move(w));
    lengths_.push_back(length);
    left_.resize(left_.size() + static_cast<std::size_t>(generators()), -1);
    right_.resize(right_.size() + static_cast<std::size_t>(generators()), -1);
    coset_.push_back(-1);
    return x;
}

ElemId ElementIndex::id(const AffineWeylElement& w) {
    if (auto f = find(w))
        return *f;
    if (!(*w.datum() == *datum_))
        fail(ErrorCode::datum_mismatch, "element of " + w.datum()->name() + " in an index for " + datum_->name());
    return intern(w, w.length());
}

std::optional<ElemId> ElementIndex::find(const AffineWeylElement& w) const {
    auto it = ids_.find(w);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

ElemId ElementIndex::left_mul(int s, ElemId x) {
    const std::size_t slot = static_cast<std::size_t>(x) * static_cast<std::size_t>(generators())
                           + static_cast<std::size_t>(s);
    if (left_[slot] >= 0)
        return left_[slot];
    const AffineWeylElement& w = element(x);
    AffineWeylElement y = AffineWeylElement::generator(datum_, s) * w;
    ElemId yid;
    if (auto f = find(y))
        yid = *f;
    else
        yid = intern(std::move(y), w.is_left_descent(s) ? length(x) - 1 : length(x) + 1);
    left_[slot] = yid;
    left_[static_cast<std::size_t>(yid) * static_cast<std::size_t>(generators()) + static_cast<std::size_t>(s)] = x;
    return yid;
}

ElemId ElementIndex::right_mul(ElemId x, int s) {
    const std::size_t slot = static_cast<std::size_t>(x) * static_cast<std::size_t>(generators())
                           + static_cast<std::size_t>(s);
    if (right_[slot] >= 0)
        return right_[slot];
    const AffineWeylElement& w = element(x);
    AffineWeylElement y = w * AffineWeylElement::generator(datum_, s);
    ElemId yid;
    if (auto f = find(y))
        yid = *f;
    else
        yid = intern(std::move(y), w.is_right_descent(s) ? length(x) - 1 : length(x) + 1);
    right_[slot] = yid;
    right_[static_cast<std::size_t>(yid) * static_cast<std::size_t>(generators()) + static_cast<std::size_t>(s)] = x;
    return yid;
}

int ElementIndex::first_left_descent(ElemId x) {
    for (int s = 0; s < generators(); ++s)
        if (is_left_descent(s, x))
            return s;
    return -1;
}

bool ElementIndex::is_min_coset(ElemId x) {
    for (int s = 1; s < generators(); ++s)
        if (is_right_descent(x, s))
            return false;
    return true;
}

ElemId ElementIndex::coset_rep(ElemId x) {
    if (coset_[static_cast<std::size_t>(x)] >= 0)
        return coset_[static_cast<std::size_t>(x)];
    ElemId y = x;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s = 1; s < generators(); ++s)
            if (is_right_descent(y, s)) {
                y = right_mul(y, s);
                moved = true;
                break;
            }
    }
    coset_[static_cast<std::size_t>(x)] = y;
    return y;
}

Word ElementIndex::reduced_word(ElemId x) {
    Word w;
    while (x != identity()) {
        const int s = first_left_descent(x);
        w.push_back(s);
        x = left_mul(s, x);
    }
    return w;
}

void add_scaled(SparseVec& into, const SparseVec& v, const LaurentPoly& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [x, p] : v)
        into[x] += p * scale;
}

void add_scaled(SparseVec& into, const SparseVec& v, Int scale, int shift) {
    if (scale == 0)
        return;
    for (const auto& [x, p] : v)
        into[x].add_scaled(p, scale, shift);
}

void prune(SparseVec& v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero())
            it = v.erase(it);
        else
            ++it;
    }
}

bool equal(const SparseVec& a, const SparseVec& b) {
    auto nonzero = [](const SparseVec& v) {
        std::size_t n = 0;
        for (const auto& [x, p] : v)
            n += p.is_zero() ? 0 : 1;
        return n;
    };
    if (nonzero(a) != nonzero(b))
        return false;
    for (const auto& [x, p] : a) {
        if (p.is_zero())
            continue;
        auto it = b.find(x);
        if (it == b.end() || it->second != p)
            return false;
    }
    return true;
}

HeckeAlgebra::HeckeAlgebra(DatumPtr datum, KlConfig config)
    : index_(std::make_shared<ElementIndex>(std::move(datum))), config_(config) {}

HeckeElement HeckeAlgebra::standard(const AffineWeylElement& w) {
    HeckeElement h;
    h.terms[index_->id(w)] = LaurentPoly(1);
    return h;
}

HeckeElement HeckeAlgebra::left_mul_generator(int s, const HeckeElement& h) {
    // H_s H_x = H_{sx} if sx > x, else q H_{sx} + (q - 1) H_x.
    HeckeElement out;
    for (const auto& [x, p] : h.terms) {
        const ElemId y = index_->left_mul(s, x);
        if (index_->length(y) > index_->length(x)) {
            out.terms[y] += p;
        } else {
            out.terms[y].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, -1, 0);
        }
    }
    prune(out.terms);
    return out;
}

HeckeElement HeckeAlgebra::right_mul_generator(const HeckeElement& h, int s) {
    HeckeElement out;
    for (const auto& [x, p] : h.terms) {
        const ElemId y = index_->right_mul(x, s);
        if (index_->length(y) > index_->length(x)) {
            out.terms[y] += p;
        } else {
            out.terms[y].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, 1, 1);
            out.terms[x].add_scaled(p, -1, 0);
        }
    }
    prune(out.terms);
    return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement out;
    for (const auto& [x, p] : a.terms) {
        HeckeElement t = b;
        const Word word = index_->reduced_word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            t = left_mul_generator(*it, t);
        add_scaled(out.terms, t.terms, p);
    }
    prune(out.terms);
    return out;
}

const SparseVec& HeckeAlgebra::bar_standard(ElemId x) {
    if (auto it = bar_.find(x); it != bar_.end())
        return it->second;
    SparseVec v;
    if (x == index_->identity()) {
        v[x] = LaurentPoly(1);
    } else {
        // bar(H_x) = bar(H_s) bar(H_{sx}), bar(H_s) = q^{-1} H_s + (q^{-1} - 1)
        const int s = index_->first_left_descent(x);
        HeckeElement rest{bar_standard(index_->left_mul(s, x))};
        HeckeElement hs = left_mul_generator(s, rest);
        add_scaled(v, hs.terms, 1, -1);
        add_scaled(v, rest.terms, 1, -1);
        add_scaled(v, rest.terms, -1, 0);
        prune(v);
    }
    return bar_.emplace(x, std::move(v)).first->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) {
    HeckeElement out;
    for (const auto& [x, p] : h.terms)
        add_scaled(out.terms, bar_standard(x), p.bar());
    prune(out.terms);
    return out;
}

void HeckeAlgebra::check_cap(ElemId x) const {
    if (index_->length(x) > config_.length_cap)
        fail(ErrorCode::cap_exceeded, "element of length " + std::to_string(index_->length(x))
                                          + " exceeds the Kazhdan-Lusztig length cap "
                                          + std::to_string(config_.length_cap));
}

const SparseVec& HeckeAlgebra::kl_basis(ElemId v) {
    if (auto it = kl_.find(v); it != kl_.end())
        return it->second;
    check_cap(v);
    SparseVec d;
    if (v == index_->identity()) {
        d[v] = LaurentPoly(1);
    } else {
        const int s = index_->first_left_descent(v);
        HeckeElement prev{kl_basis(index_->left_mul(s, v))};
        // C_s = H_s + 1
        HeckeElement hs = left_mul_generator(s, prev);
        d = std::move(hs.terms);
        add_scaled(d, prev.terms, 1, 0);
        detail::reduce_to_kl(d, v, *index_, [this](ElemId z) -> const SparseVec& { return kl_basis(z); });
    }
    return kl_.emplace(v, std::move(d)).first->second;
}

HeckeElement HeckeAlgebra::kl_element(const AffineWeylElement& v) {
    return HeckeElement{kl_basis(index_->id(v))};
}

LaurentPoly HeckeAlgebra::kl_poly(const AffineWeylElement& w, const AffineWeylElement& v) {
    const SparseVec& c = kl_basis(index_->id(v));
    auto it = c.find(index_->id(w));
    return it == c.end() ? LaurentPoly() : it->second;
}

const SparseVec& HeckeAlgebra::standard_in_kl(ElemId w) {
    if (auto it = inv_.find(w); it != inv_.end())
        return it->second;
    check_cap(w);
    // H_w = C_w - sum_{y < w} P_{y,w} H_y
    SparseVec e;
    e[w] = LaurentPoly(1);
    const SparseVec cw = kl_basis(w);
    for (const auto& [y, p] : cw) {
        if (y == w)
            continue;
        add_scaled(e, standard_in_kl(y), -p);
    }
    prune(e);
    return inv_.emplace(w, std::move(e)).first->second;
}

std::map<ElemId, LaurentPoly> HeckeAlgebra::inverse_kl(ElemId w) {
    std::map<ElemId, LaurentPoly> out;
    const int lw = index_->length(w);
    for (const auto& [v, p] : standard_in_kl(w))
        out[v] = (lw + index_->length(v)) % 2 == 0 ? p : -p;
    return out;
}

} // namespace affkl
