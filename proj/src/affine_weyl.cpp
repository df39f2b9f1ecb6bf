#include "affkl/affine_weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "affkl/error.hpp"

namespace affkl {

AffineWeylElement::AffineWeylElement(DatumPtr datum, IntVec gamma, IntMat u, IntMat uinv)
    : datum_(std::move(datum)), gamma_(std::move(gamma)), u_(std::move(u)), uinv_(std::move(uinv)) {}

AffineWeylElement AffineWeylElement::identity(DatumPtr datum) {
    const int r = datum->rank();
    return AffineWeylElement(std::move(datum), IntVec::Zero(r), IntMat::Identity(r, r),
                             IntMat::Identity(r, r));
}

AffineWeylElement AffineWeylElement::generator(DatumPtr datum, int i) {
    const int r = datum->rank();
    if (i < 0 || i > r)
        fail(ErrorCode::invalid_argument, "generator index " + std::to_string(i) + " out of range for "
                                              + datum->name());
    IntMat m = IntMat::Identity(r, r);
    IntVec g = IntVec::Zero(r);
    if (i == 0) {
        // s_0 = t_theta s_theta
        const IntVec& th = datum->highest_root();
        m -= th * (th.transpose() * datum->cartan());
        g = th;
    } else {
        m.row(i - 1) -= datum->cartan().row(i - 1);
    }
    return AffineWeylElement(std::move(datum), g, m, m);
}

AffineWeylElement AffineWeylElement::translation(DatumPtr datum, const IntVec& gamma) {
    if (gamma.size() != datum->rank())
        fail(ErrorCode::not_a_coroot, "translation vector has " + std::to_string(gamma.size())
                                          + " coordinates, expected " + std::to_string(datum->rank()));
    AffineWeylElement w = identity(std::move(datum));
    w.gamma_ = gamma;
    return w;
}

AffineWeylElement AffineWeylElement::from_word(DatumPtr datum, const Word& word) {
    AffineWeylElement w = identity(datum);
    for (int i : word)
        w = w * generator(datum, i);
    return w;
}

void AffineWeylElement::require_same_datum(const AffineWeylElement& o) const {
    if (!datum_ || !o.datum_)
        fail(ErrorCode::invalid_argument, "operation on a default-constructed group element");
    if (datum_ != o.datum_ && !(*datum_ == *o.datum_))
        fail(ErrorCode::datum_mismatch, "elements of " + datum_->name() + " and " + o.datum_->name());
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
    require_same_datum(o);
    return AffineWeylElement(datum_, gamma_ + u_ * o.gamma_, u_ * o.u_, o.uinv_ * uinv_);
}

AffineWeylElement AffineWeylElement::inverse() const {
    return AffineWeylElement(datum_, -(uinv_ * gamma_), uinv_, u_);
}

AffineWeylElement AffineWeylElement::finite_part() const {
    return AffineWeylElement(datum_, IntVec::Zero(gamma_.size()), u_, uinv_);
}

HhatVector AffineWeylElement::act(const HhatVector& h) const {
    if (h.x.size() != gamma_.size())
        fail(ErrorCode::datum_mismatch, "Cartan vector of wrong rank");
    const IntMat& a = datum_->cartan();
    const IntVec ux = u_ * h.x;
    const Int gg = gamma_.dot(a * gamma_);
    HhatVector out;
    out.x = ux + h.d * gamma_;
    out.k = h.k - ux.dot(a * gamma_) - (gg / 2) * h.d;
    out.d = h.d;
    return out;
}

AffineWeight AffineWeylElement::act(const AffineWeight& mu) const {
    const CartanDatum& dt = *datum_;
    const Int kappa = dt.level(mu);
    // (u f)_j = <f, u^{-1} alpha_j^vee>
    const IntVec f = uinv_.transpose() * dt.finite_part(mu);
    const IntVec shifted = f + kappa * (dt.cartan() * gamma_);
    const Int gg = gamma_.dot(dt.cartan() * gamma_);
    const Rational x = mu.delta - f.dot(gamma_) - (gg / 2) * kappa;
    return dt.from_parts(shifted, kappa, x);
}

AffineRoot AffineWeylElement::act(const AffineRoot& r) const {
    if (r.beta.size() != gamma_.size())
        fail(ErrorCode::datum_mismatch, "affine root of wrong rank");
    AffineRoot out;
    out.beta = u_ * r.beta;
    out.n = r.n - out.beta.dot(datum_->cartan() * gamma_);
    return out;
}

AffineWeight AffineWeylElement::dot(const AffineWeight& mu) const {
    const AffineWeight rho = datum_->rho_hat();
    return act(mu + rho) - rho;
}

AffineRoot simple_affine_root(const CartanDatum& datum, int i) {
    AffineRoot a;
    if (i == 0) {
        a.beta = -datum.highest_root();
        a.n = 1;
    } else {
        a.beta = IntVec::Zero(datum.rank());
        a.beta(i - 1) = 1;
        a.n = 0;
    }
    return a;
}

bool AffineWeylElement::is_right_descent(int i) const {
    return !act(simple_affine_root(*datum_, i)).is_positive();
}

bool AffineWeylElement::is_left_descent(int i) const {
    // w^{-1}(beta + n delta) = u^{-1} beta + (n + <beta, gamma>) delta
    const AffineRoot a = simple_affine_root(*datum_, i);
    AffineRoot b;
    b.beta = uinv_ * a.beta;
    b.n = a.n + a.beta.dot(datum_->cartan() * gamma_);
    return !b.is_positive();
}

std::vector<int> AffineWeylElement::left_descents() const {
    std::vector<int> out;
    for (int i = 0; i <= rank(); ++i)
        if (is_left_descent(i))
            out.push_back(i);
    return out;
}

std::vector<int> AffineWeylElement::right_descents() const {
    std::vector<int> out;
    for (int i = 0; i <= rank(); ++i)
        if (is_right_descent(i))
            out.push_back(i);
    return out;
}

Word AffineWeylElement::reduced_word() const {
    Word word;
    AffineWeylElement w = *this;
    const int r = rank();
    while (!w.is_identity()) {
        int i = 0;
        while (i <= r && !w.is_left_descent(i))
            ++i;
        if (i > r)
            fail(ErrorCode::internal, "non-identity element without a left descent");
        word.push_back(i);
        w = generator(datum_, i) * w;
        if (word.size() > 1000000)
            fail(ErrorCode::internal, "descent removal did not terminate");
    }
    return word;
}

int AffineWeylElement::length() const {
    return static_cast<int>(reduced_word().size());
}

bool AffineWeylElement::operator==(const AffineWeylElement& o) const {
    if (datum_ != o.datum_ && !(datum_ && o.datum_ && *datum_ == *o.datum_))
        return false;
    return same(gamma_, o.gamma_) && same(u_, o.u_);
}

std::size_t AffineWeylElement::hash() const {
    return hash_entries(u_, hash_entries(gamma_, 0x51ed27));
}

std::vector<Int> to_epsilon(const IntVec& gamma) {
    const auto r = gamma.size();
    std::vector<Int> eps(static_cast<std::size_t>(r + 1));
    Int prev = 0;
    for (Eigen::Index k = 0; k < r; ++k) {
        eps[static_cast<std::size_t>(k)] = gamma(k) - prev;
        prev = gamma(k);
    }
    eps[static_cast<std::size_t>(r)] = -prev;
    return eps;
}

IntVec from_epsilon(const std::vector<Int>& eps) {
    if (eps.empty())
        fail(ErrorCode::not_a_coroot, "empty epsilon vector");
    IntVec g(static_cast<Eigen::Index>(eps.size() - 1));
    Int s = 0;
    for (std::size_t k = 0; k + 1 < eps.size(); ++k) {
        s += eps[k];
        g(static_cast<Eigen::Index>(k)) = s;
    }
    if (s + eps.back() != 0)
        fail(ErrorCode::not_a_coroot, "epsilon coordinates do not sum to zero");
    return g;
}

int residue(Int i, int n) {
    const Int m = i % n;
    return static_cast<int>(m < 0 ? m + n : m);
}

std::vector<Int> AffineWeylElement::window() const {
    if (!datum_->is_type_a())
        fail(ErrorCode::invalid_argument, "periodic permutations are only available in type A");
    const int r = rank();
    const int n = r + 1;
    const std::vector<Int> a = to_epsilon(gamma_);
    // u(alpha_j^vee) = eps_{pi(j)} - eps_{pi(j+1)}
    std::vector<int> pi(static_cast<std::size_t>(n + 1), 0);
    for (int j = 0; j < r; ++j) {
        const std::vector<Int> col = to_epsilon(u_.col(j));
        for (int k = 0; k < n; ++k) {
            if (col[static_cast<std::size_t>(k)] == 1)
                pi[static_cast<std::size_t>(j + 1)] = k + 1;
            if (col[static_cast<std::size_t>(k)] == -1)
                pi[static_cast<std::size_t>(j + 2)] = k + 1;
        }
    }
    if (r == 0)
        pi[1] = 1;
    std::vector<Int> w(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int p = pi[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(j - 1)] = p + a[static_cast<std::size_t>(p - 1)] * n;
    }
    return w;
}

AffineWeylElement AffineWeylElement::from_window(DatumPtr datum, const std::vector<Int>& window) {
    if (!datum->is_type_a())
        fail(ErrorCode::invalid_argument, "periodic permutations are only available in type A");
    const int r = datum->rank();
    const int n = r + 1;
    if (static_cast<int>(window.size()) != n)
        fail(ErrorCode::invalid_argument, "window must have " + std::to_string(n) + " entries");
    std::vector<int> pi(static_cast<std::size_t>(n + 1));
    std::vector<Int> a(static_cast<std::size_t>(n), 0);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int j = 1; j <= n; ++j) {
        const Int s = window[static_cast<std::size_t>(j - 1)];
        const int p = residue(s - 1, n) + 1;
        if (hit[static_cast<std::size_t>(p - 1)])
            fail(ErrorCode::invalid_argument, "window entries are not distinct modulo n");
        hit[static_cast<std::size_t>(p - 1)] = true;
        pi[static_cast<std::size_t>(j)] = p;
        a[static_cast<std::size_t>(p - 1)] = (s - p) / n;
    }
    Int total = 0;
    for (Int x : a)
        total += x;
    if (total != 0)
        fail(ErrorCode::invalid_argument, "window does not describe an element of the affine Weyl group");
    IntMat u(r, r);
    for (int j = 0; j < r; ++j) {
        std::vector<Int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(pi[static_cast<std::size_t>(j + 1)] - 1)] += 1;
        e[static_cast<std::size_t>(pi[static_cast<std::size_t>(j + 2)] - 1)] -= 1;
        u.col(j) = from_epsilon(e);
    }
    AffineWeylElement fin = identity(datum);
    fin.u_ = u;
    // inverse of a Weyl group matrix: A^{-1} u^T A
    fin.uinv_ = (datum->cartan_adjugate() * u.transpose() * datum->cartan()) / datum->cartan_det();
    return translation(datum, from_epsilon(a)) * fin;
}

AffineWeylElement min_coset_rep(DatumPtr datum, const IntVec& gamma) {
    AffineWeylElement w = AffineWeylElement::translation(datum, gamma);
    const int r = datum->rank();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= r; ++i)
            if (w.is_right_descent(i)) {
                w = w * AffineWeylElement::generator(datum, i);
                moved = true;
                break;
            }
    }
    return w;
}

Word subregular_word(const CartanDatum& datum, Int i) {
    Word word;
    if (datum.is_type_a()) {
        const int n = datum.rank() + 1;
        if (i > 0)
            for (Int k = i; k >= 1; --k)
                word.push_back(residue(k, n));
        else if (i < 0)
            for (Int k = i; k <= -1; ++k)
                word.push_back(residue(k, n));
        word.push_back(0);
        return word;
    }
    if (i < 0 || i > datum.rank())
        fail(ErrorCode::invalid_argument, "subregular index must be a node 0.." + std::to_string(datum.rank()));
    const std::vector<int> path = datum.path_from_zero(static_cast<int>(i));
    word.assign(path.rbegin(), path.rend());
    return word;
}

AffineWeylElement subregular_w(DatumPtr datum, Int i) {
    const Word word = subregular_word(*datum, i);
    return AffineWeylElement::from_word(datum, word);
}

IntVec subregular_nu(DatumPtr datum, Int i) {
    return subregular_w(std::move(datum), i).gamma();
}

std::vector<AffineWeylElement> enumerate_up_to_length(DatumPtr datum, int max_length, std::size_t cap) {
    std::vector<AffineWeylElement> out{AffineWeylElement::identity(datum)};
    std::unordered_set<AffineWeylElement, AffineWeylHash> seen(out.begin(), out.end());
    std::size_t level_begin = 0;
    for (int len = 0; len < max_length; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (int i = 0; i <= datum->rank(); ++i) {
                if (out[k].is_left_descent(i))
                    continue;
                AffineWeylElement y = AffineWeylElement::generator(datum, i) * out[k];
                if (seen.insert(y).second) {
                    out.push_back(std::move(y));
                    if (out.size() > cap)
                        fail(ErrorCode::cap_exceeded, "more than " + std::to_string(cap)
                                                          + " elements of length <= " + std::to_string(max_length));
                }
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::vector<AffineWeylElement> finite_weyl_group(DatumPtr datum, std::size_t cap) {
    std::vector<AffineWeylElement> out{AffineWeylElement::identity(datum)};
    std::unordered_set<AffineWeylElement, AffineWeylHash> seen(out.begin(), out.end());
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 1; i <= datum->rank(); ++i) {
            AffineWeylElement y = AffineWeylElement::generator(datum, i) * out[k];
            if (seen.insert(y).second) {
                out.push_back(std::move(y));
                if (out.size() > cap)
                    fail(ErrorCode::cap_exceeded, "finite Weyl group of " + datum->name() + " exceeds "
                                                      + std::to_string(cap) + " elements");
            }
        }
    return out;
}

WeightClass classify_weight(const CartanDatum& datum, const AffineWeight& mu) {
    WeightClass wc;
    wc.level = datum.level(mu);
    wc.dominant = (mu.c.array() >= 0).all();
    wc.quasi_dominant = (mu.c.tail(datum.rank()).array() >= 0).all();
    if (wc.level == 0) {
        // Level zero: the affine coroot beta^vee + nK pairs like beta^vee.
        const IntVec f = datum.finite_part(mu);
        wc.regular = true;
        for (const auto& b : datum.positive_roots())
            if (f.dot(b) == 0)
                wc.regular = false;
        return wc;
    }
    // The linear action commutes with negation, so reduce to positive level and
    // move into the dominant chamber, where the stabiliser is read off directly.
    IntVec c = wc.level > 0 ? IntVec(mu.c) : IntVec(-mu.c);
    const IntMat& ac = datum.affine_cartan();
    for (std::size_t steps = 0;; ++steps) {
        Eigen::Index j = 0;
        while (j < c.size() && c(j) >= 0)
            ++j;
        if (j == c.size())
            break;
        c -= c(j) * ac.col(j);
        if (steps > 10000000)
            fail(ErrorCode::internal, "dominance reduction did not terminate");
    }
    wc.regular = (c.array() > 0).all();
    return wc;
}

std::vector<int> stabilizer(const CartanDatum& datum, const AffineWeight& lambda) {
    const AffineWeight shifted = lambda + datum.rho_hat();
    std::vector<int> out;
    for (int j = 0; j <= datum.rank(); ++j)
        if (shifted.c(j) == 0)
            out.push_back(j);
    return out;
}

bool is_longest_in_coset(const CartanDatum& datum, const AffineWeight& lambda, const AffineWeylElement& w) {
    for (int j : stabilizer(datum, lambda))
        if (!w.is_left_descent(j))
            return false;
    return true;
}

} // namespace affkl
