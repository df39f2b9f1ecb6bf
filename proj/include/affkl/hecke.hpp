#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "affkl/affine_weyl.hpp"
#include "affkl/error.hpp"
#include "affkl/laurent_poly.hpp"

namespace affkl {

using ElemId = std::int32_t;

// Interns group elements so that the Hecke kernels can work with dense ids.
// Lengths and multiplication by simple reflections are cached.
class ElementIndex {
public:
    explicit ElementIndex(DatumPtr datum);

    const DatumPtr& datum() const { return datum_; }
    int generators() const { return datum_->rank() + 1; }
    std::size_t size() const { return elements_.size(); }

    ElemId id(const AffineWeylElement& w);
    std::optional<ElemId> find(const AffineWeylElement& w) const;
    const AffineWeylElement& element(ElemId x) const { return elements_.at(static_cast<std::size_t>(x)); }
    int length(ElemId x) const { return lengths_.at(static_cast<std::size_t>(x)); }
    ElemId identity() const { return 0; }

    ElemId left_mul(int s, ElemId x);
    ElemId right_mul(ElemId x, int s);
    bool is_left_descent(int s, ElemId x) { return length(left_mul(s, x)) < length(x); }
    bool is_right_descent(ElemId x, int s) { return length(right_mul(x, s)) < length(x); }
    // Smallest s with s x < x, or -1 for the identity.
    int first_left_descent(ElemId x);

    // x is minimal in x W^fin.
    bool is_min_coset(ElemId x);
    // The minimal representative of x W^fin.
    ElemId coset_rep(ElemId x);

    Word reduced_word(ElemId x);

private:
    ElemId intern(AffineWeylElement w, int length);

    DatumPtr datum_;
    std::vector<AffineWeylElement> elements_;
    std::vector<int> lengths_;
    std::vector<ElemId> left_;  // generators() entries per element, -1 = unknown
    std::vector<ElemId> right_;
    std::vector<ElemId> coset_;
    std::unordered_map<AffineWeylElement, ElemId, AffineWeylHash> ids_;
};

using SparseVec = std::unordered_map<ElemId, LaurentPoly>;

void add_scaled(SparseVec& into, const SparseVec& v, const LaurentPoly& scale);
void add_scaled(SparseVec& into, const SparseVec& v, Int scale, int shift);
void prune(SparseVec& v);
bool equal(const SparseVec& a, const SparseVec& b);

// Sum of a_x H_x in the Iwahori-Hecke algebra with (H_s + 1)(H_s - q) = 0.
struct HeckeElement {
    SparseVec terms;
};

struct KlConfig {
    // Maximal length of an element whose Kazhdan-Lusztig data may be computed.
    int length_cap = 14;
};

class HeckeAlgebra {
public:
    explicit HeckeAlgebra(DatumPtr datum, KlConfig config = {});

    ElementIndex& index() { return *index_; }
    const std::shared_ptr<ElementIndex>& shared_index() const { return index_; }
    const KlConfig& config() const { return config_; }

    HeckeElement standard(const AffineWeylElement& w);
    HeckeElement left_mul_generator(int s, const HeckeElement& h);
    HeckeElement right_mul_generator(const HeckeElement& h, int s);
    HeckeElement mul(const HeckeElement& a, const HeckeElement& b);
    HeckeElement bar(const HeckeElement& h);
    // bar(H_x), memoised.
    const SparseVec& bar_standard(ElemId x);

    // C_v = sum_w P_{w,v} H_w.
    const SparseVec& kl_basis(ElemId v);
    HeckeElement kl_element(const AffineWeylElement& v);
    LaurentPoly kl_poly(const AffineWeylElement& w, const AffineWeylElement& v);

    // H_w = sum_v eps(w v^{-1}) m^w_v C_v; returns v -> m^w_v.
    std::map<ElemId, LaurentPoly> inverse_kl(ElemId w);
    // Raw coefficients of H_w in the C basis, memoised.
    const SparseVec& standard_in_kl(ElemId w);

private:
    void check_cap(ElemId x) const;

    std::shared_ptr<ElementIndex> index_;
    KlConfig config_;
    std::unordered_map<ElemId, SparseVec> kl_;
    std::unordered_map<ElemId, SparseVec> inv_;
    std::unordered_map<ElemId, SparseVec> bar_;
};

namespace detail {

// Turns D = C_s * C_{sy} (expressed in a standard basis) into C_y by
// subtracting mu(z) q^{(l(y)-l(z))/2} C_z, scanning z by decreasing length.
template <class Basis>
void reduce_to_kl(SparseVec& d, ElemId top, ElementIndex& index, Basis&& basis) {
    const int ly = index.length(top);
    std::vector<ElemId> order;
    order.reserve(d.size());
    for (const auto& [z, p] : d)
        if (z != top)
            order.push_back(z);
    std::sort(order.begin(), order.end(), [&](ElemId a, ElemId b) {
        const int la = index.length(a), lb = index.length(b);
        return la != lb ? la > lb : a < b;
    });
    for (ElemId z : order) {
        auto it = d.find(z);
        if (it == d.end() || it->second.is_zero())
            continue;
        const int diff = ly - index.length(z);
        const int bound = (diff - 1) / 2;
        const LaurentPoly& p = it->second;
        if (diff <= 0 || p.low() < 0)
            fail(ErrorCode::internal, "Kazhdan-Lusztig reduction met a coefficient outside the Bruhat interval");
        if (p.degree() <= bound)
            continue;
        if (diff % 2 != 0 || p.degree() != diff / 2)
            fail(ErrorCode::internal, "Kazhdan-Lusztig reduction: unexpected excess degree");
        const Int mu = p.coeff(diff / 2);
        const SparseVec& cz = basis(z);
        add_scaled(d, cz, -mu, diff / 2);
    }
    prune(d);
    auto it = d.find(top);
    if (it == d.end() || it->second != LaurentPoly(1))
        fail(ErrorCode::internal, "Kazhdan-Lusztig reduction lost the leading term");
}

} // namespace detail

} // namespace affkl
