#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "affkl/lattice.hpp"

namespace affkl {

enum class Family { A, D, E };

struct TypeLabel {
    Family family;
    int rank;

    std::string name() const;
    bool operator==(const TypeLabel&) const = default;
};

// Accepts "A2", "a_3", "D4", "E6" ... Non simply-laced labels are rejected.
TypeLabel parse_type(std::string_view text);

// Element of the affine Cartan h^ = h + CK + Cd. The finite part is in
// simple-coroot coordinates.
struct HhatVector {
    IntVec x;
    Int k = 0;
    Int d = 0;

    bool operator==(const HhatVector& o) const { return same(x, o.x) && k == o.k && d == o.d; }
};

// sum_{i=0}^r c_i Lambda_i + delta_coeff * delta
struct AffineWeight {
    IntVec c;
    Rational delta{0};

    bool operator==(const AffineWeight& o) const { return same(c, o.c) && delta == o.delta; }
    AffineWeight& operator+=(const AffineWeight& o);
    AffineWeight& operator-=(const AffineWeight& o);
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    AffineWeight operator-() const;
};

struct AffineWeightHash {
    std::size_t operator()(const AffineWeight& w) const;
};

// beta + n delta with beta in simple-root coordinates.
struct AffineRoot {
    IntVec beta;
    Int n = 0;

    bool operator==(const AffineRoot& o) const { return same(beta, o.beta) && n == o.n; }
    bool is_positive() const;
};

class CartanDatum {
public:
    explicit CartanDatum(TypeLabel label);

    const TypeLabel& label() const { return label_; }
    std::string name() const { return label_.name(); }
    int rank() const { return rank_; }
    bool is_type_a() const { return label_.family == Family::A; }

    // Finite Cartan matrix; also the Gram matrix of Q^vee (all roots have length 2).
    const IntMat& cartan() const { return cartan_; }
    const IntMat& affine_cartan() const { return affine_cartan_; }
    const IntMat& cartan_adjugate() const { return cartan_adj_; }
    Int cartan_det() const { return cartan_det_; }

    const std::vector<IntVec>& positive_roots() const { return positive_; }
    const IntVec& highest_root() const { return theta_; }
    // a_0 .. a_r with a_0 = 1. Marks and comarks coincide.
    const std::vector<Int>& marks() const { return marks_; }
    Int mark(int i) const { return marks_.at(static_cast<std::size_t>(i)); }
    Int dual_coxeter() const { return dual_coxeter_; }
    // Sum of positive roots in simple-root coordinates.
    const IntVec& two_rho() const { return two_rho_; }

    // Neighbours of node i in the affine Dynkin diagram, nodes 0..r.
    const std::vector<int>& neighbours(int i) const { return adjacency_.at(static_cast<std::size_t>(i)); }
    // Unique path 0 = j_0, j_1, ..., j_l = i. Only for the tree-shaped D and E diagrams.
    std::vector<int> path_from_zero(int i) const;

    bool is_root(const IntVec& beta) const;
    bool in_lattice(const IntVec& v) const { return v.size() == rank_; }

    Int inner(const IntVec& a, const IntVec& b) const;
    Int norm_sq(const IntVec& a) const { return inner(a, a); }

    // --- affine weights ---
    AffineWeight zero_weight() const;
    AffineWeight fundamental(int i) const;
    AffineWeight rho_hat() const;
    AffineWeight delta() const;
    AffineWeight simple_root(int j) const;
    AffineWeight from_parts(const IntVec& finite_omega, Int level, Rational delta) const;
    AffineWeight parse_weight(const std::vector<Int>& coeffs, Rational delta = 0) const;

    Int level(const AffineWeight& mu) const;
    IntVec finite_part(const AffineWeight& mu) const;
    // |mu_bar|^2 times det(Cartan); exact integer.
    Int scaled_finite_norm(const AffineWeight& mu) const;
    Rational finite_norm(const AffineWeight& mu) const;

    // <mu, h> with h = gamma + kK + d d.
    Rational pairing(const AffineWeight& mu, const HhatVector& h) const;
    // (h, h) on h^, defined for the finite part only.
    Int norm_sq(const HhatVector& h) const;

    bool operator==(const CartanDatum& o) const { return label_ == o.label_; }

private:
    TypeLabel label_;
    int rank_;
    IntMat cartan_;
    IntMat affine_cartan_;
    IntMat cartan_adj_;
    Int cartan_det_;
    std::vector<IntVec> positive_;
    IntVec theta_;
    IntVec two_rho_;
    std::vector<Int> marks_;
    Int dual_coxeter_;
    std::vector<std::vector<int>> adjacency_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

DatumPtr build_cartan(TypeLabel label);
DatumPtr build_cartan(std::string_view label);

} // namespace affkl
