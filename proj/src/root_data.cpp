#include "affkl/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>

#include "affkl/error.hpp"

namespace affkl {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::unsupported_type: return "unsupported_type";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::datum_mismatch: return "datum_mismatch";
    case ErrorCode::not_a_coroot: return "not_a_coroot";
    case ErrorCode::invalid_weight: return "invalid_weight";
    case ErrorCode::invalid_pair: return "invalid_pair";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::internal: return "internal";
    }
    return "internal";
}

std::string TypeLabel::name() const {
    const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(rank);
}

TypeLabel parse_type(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != '_' && ch != ' ')
            s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (s.size() < 2)
        fail(ErrorCode::unsupported_type, "cannot parse Cartan type '" + std::string(text) + "'");
    const char letter = s[0];
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 1000)
            fail(ErrorCode::unsupported_type, "cannot parse Cartan type '" + std::string(text) + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    switch (letter) {
    case 'A':
        if (rank >= 1)
            return {Family::A, rank};
        break;
    case 'D':
        if (rank >= 4)
            return {Family::D, rank};
        break;
    case 'E':
        if (rank >= 6 && rank <= 8)
            return {Family::E, rank};
        break;
    case 'B': case 'C': case 'F': case 'G':
        fail(ErrorCode::unsupported_type, "type " + s + " is not simply-laced");
    default:
        break;
    }
    fail(ErrorCode::unsupported_type, "unsupported Cartan type '" + std::string(text) + "'");
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
    c += o.c;
    delta += o.delta;
    return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
    c -= o.c;
    delta -= o.delta;
    return *this;
}

AffineWeight AffineWeight::operator-() const {
    return AffineWeight{-c, -delta};
}

std::size_t AffineWeightHash::operator()(const AffineWeight& w) const {
    std::size_t h = hash_entries(w.c, 17);
    hash_combine(h, std::hash<Int>{}(w.delta.numerator()));
    hash_combine(h, std::hash<Int>{}(w.delta.denominator()));
    return h;
}

bool AffineRoot::is_positive() const {
    if (n != 0)
        return n > 0;
    return (beta.array() >= 0).all() && (beta.array() > 0).any();
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(TypeLabel t) {
    std::vector<std::pair<int, int>> e;
    const int r = t.rank;
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < r; ++i)
            e.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 1; i + 2 < r; ++i)
            e.emplace_back(i, i + 1);
        e.emplace_back(r - 2, r - 1);
        e.emplace_back(r - 2, r);
        break;
    case Family::E:
        e.emplace_back(1, 3);
        e.emplace_back(2, 4);
        for (int i = 3; i < r; ++i)
            e.emplace_back(i, i + 1);
        break;
    }
    return e;
}

int height(const IntVec& v) { return static_cast<int>(v.sum()); }

} // namespace

CartanDatum::CartanDatum(TypeLabel label) : label_(label), rank_(label.rank) {
    const int r = rank_;
    cartan_ = IntMat::Zero(r, r);
    for (int i = 0; i < r; ++i)
        cartan_(i, i) = 2;
    for (auto [a, b] : dynkin_edges(label)) {
        cartan_(a - 1, b - 1) = -1;
        cartan_(b - 1, a - 1) = -1;
    }
    cartan_det_ = determinant(cartan_);
    cartan_adj_ = adjugate(cartan_);

    // Close the simple roots under simple reflections.
    auto key = [](const IntVec& v) { return to_std(v); };
    std::set<std::vector<Int>> seen;
    std::queue<IntVec> todo;
    for (int i = 0; i < r; ++i) {
        IntVec e = IntVec::Zero(r);
        e(i) = 1;
        seen.insert(key(e));
        todo.push(e);
    }
    while (!todo.empty()) {
        IntVec b = todo.front();
        todo.pop();
        for (int i = 0; i < r; ++i) {
            IntVec s = b;
            s(i) -= cartan_.row(i).dot(b);
            if (seen.insert(key(s)).second)
                todo.push(s);
        }
    }
    for (const auto& v : seen) {
        IntVec b = to_intvec(v);
        if ((b.array() >= 0).all())
            positive_.push_back(b);
    }
    std::sort(positive_.begin(), positive_.end(), [](const IntVec& a, const IntVec& b) {
        if (height(a) != height(b))
            return height(a) < height(b);
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
    theta_ = positive_.back();
    if (positive_.size() >= 2 && height(positive_[positive_.size() - 2]) == height(theta_))
        fail(ErrorCode::internal, "highest root is not unique");

    two_rho_ = IntVec::Zero(r);
    for (const auto& b : positive_)
        two_rho_ += b;

    marks_.assign(static_cast<std::size_t>(r + 1), 1);
    for (int i = 0; i < r; ++i)
        marks_[static_cast<std::size_t>(i + 1)] = theta_(i);
    dual_coxeter_ = 0;
    for (Int a : marks_)
        dual_coxeter_ += a;

    affine_cartan_ = IntMat::Zero(r + 1, r + 1);
    affine_cartan_.bottomRightCorner(r, r) = cartan_;
    const IntVec ct = cartan_ * theta_;
    affine_cartan_(0, 0) = 2;
    for (int j = 0; j < r; ++j) {
        affine_cartan_(0, j + 1) = -ct(j);
        affine_cartan_(j + 1, 0) = -ct(j);
    }
    adjacency_.assign(static_cast<std::size_t>(r + 1), {});
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
            if (i != j && affine_cartan_(i, j) != 0)
                adjacency_[static_cast<std::size_t>(i)].push_back(j);
}

std::vector<int> CartanDatum::path_from_zero(int i) const {
    if (is_type_a())
        fail(ErrorCode::invalid_argument, "the affine diagram of type A is a cycle; paths are not unique");
    if (i < 0 || i > rank_)
        fail(ErrorCode::invalid_argument, "node index out of range");
    std::vector<int> parent(static_cast<std::size_t>(rank_ + 1), -1);
    std::queue<int> q;
    q.push(0);
    parent[0] = 0;
    while (!q.empty()) {
        const int a = q.front();
        q.pop();
        for (int b : neighbours(a))
            if (parent[static_cast<std::size_t>(b)] < 0) {
                parent[static_cast<std::size_t>(b)] = a;
                q.push(b);
            }
    }
    std::vector<int> path{i};
    while (path.back() != 0)
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

bool CartanDatum::is_root(const IntVec& beta) const {
    if (beta.size() != rank_)
        return false;
    for (const auto& b : positive_)
        if (same(b, beta) || same(b, IntVec(-beta)))
            return true;
    return false;
}

Int CartanDatum::inner(const IntVec& a, const IntVec& b) const {
    if (a.size() != rank_ || b.size() != rank_)
        fail(ErrorCode::datum_mismatch, "lattice vector of wrong rank for " + name());
    return a.dot(cartan_ * b);
}

AffineWeight CartanDatum::zero_weight() const {
    return AffineWeight{IntVec::Zero(rank_ + 1), Rational(0)};
}

AffineWeight CartanDatum::fundamental(int i) const {
    if (i < 0 || i > rank_)
        fail(ErrorCode::invalid_argument, "fundamental weight index out of range");
    AffineWeight w = zero_weight();
    w.c(i) = 1;
    return w;
}

AffineWeight CartanDatum::rho_hat() const {
    return AffineWeight{IntVec::Ones(rank_ + 1), Rational(0)};
}

AffineWeight CartanDatum::delta() const {
    AffineWeight w = zero_weight();
    w.delta = 1;
    return w;
}

AffineWeight CartanDatum::simple_root(int j) const {
    if (j < 0 || j > rank_)
        fail(ErrorCode::invalid_argument, "simple root index out of range");
    AffineWeight w{affine_cartan_.col(j), Rational(j == 0 ? 1 : 0)};
    return w;
}

AffineWeight CartanDatum::from_parts(const IntVec& f, Int level, Rational delta) const {
    AffineWeight w = zero_weight();
    Int c0 = level;
    for (int i = 0; i < rank_; ++i) {
        w.c(i + 1) = f(i);
        c0 -= marks_[static_cast<std::size_t>(i + 1)] * f(i);
    }
    w.c(0) = c0;
    w.delta = delta;
    return w;
}

AffineWeight CartanDatum::parse_weight(const std::vector<Int>& coeffs, Rational delta) const {
    if (static_cast<int>(coeffs.size()) != rank_ + 1)
        fail(ErrorCode::invalid_weight, "a weight of " + name() + " needs " + std::to_string(rank_ + 1)
                                            + " coefficients c_0..c_r");
    return AffineWeight{to_intvec(coeffs), delta};
}

Int CartanDatum::level(const AffineWeight& mu) const {
    if (mu.c.size() != rank_ + 1)
        fail(ErrorCode::datum_mismatch, "weight of wrong rank for " + name());
    Int k = 0;
    for (int i = 0; i <= rank_; ++i)
        k += marks_[static_cast<std::size_t>(i)] * mu.c(i);
    return k;
}

IntVec CartanDatum::finite_part(const AffineWeight& mu) const {
    if (mu.c.size() != rank_ + 1)
        fail(ErrorCode::datum_mismatch, "weight of wrong rank for " + name());
    return mu.c.tail(rank_);
}

Int CartanDatum::scaled_finite_norm(const AffineWeight& mu) const {
    const IntVec f = finite_part(mu);
    return f.dot(cartan_adj_ * f);
}

Rational CartanDatum::finite_norm(const AffineWeight& mu) const {
    return Rational(scaled_finite_norm(mu), cartan_det_);
}

Rational CartanDatum::pairing(const AffineWeight& mu, const HhatVector& h) const {
    if (mu.c.size() != rank_ + 1 || h.x.size() != rank_)
        fail(ErrorCode::datum_mismatch, "pairing arguments do not match " + name());
    // gamma + kK = k alpha_0^vee + sum_j (g_j + k a_j) alpha_j^vee
    Rational out = Rational(mu.c(0) * h.k);
    for (int j = 0; j < rank_; ++j)
        out += mu.c(j + 1) * (h.x(j) + h.k * marks_[static_cast<std::size_t>(j + 1)]);
    out += mu.delta * h.d;
    return out;
}

Int CartanDatum::norm_sq(const HhatVector& h) const {
    if (h.k != 0 || h.d != 0)
        fail(ErrorCode::invalid_argument, "norm is only defined on the finite Cartan subalgebra here");
    return norm_sq(h.x);
}

DatumPtr build_cartan(TypeLabel label) {
    return std::make_shared<const CartanDatum>(label);
}

DatumPtr build_cartan(std::string_view label) {
    return build_cartan(parse_type(label));
}

} // namespace affkl
