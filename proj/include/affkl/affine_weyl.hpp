#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affkl/root_data.hpp"

namespace affkl {

using Word = std::vector<int>;

// w = t_gamma u with gamma in Q^vee and u in the finite Weyl group. The
// finite part is kept as an integer matrix on Q^vee in simple-coroot
// coordinates, together with its inverse.
class AffineWeylElement {
public:
    AffineWeylElement() = default;

    static AffineWeylElement identity(DatumPtr datum);
    // s_0 .. s_r
    static AffineWeylElement generator(DatumPtr datum, int i);
    static AffineWeylElement translation(DatumPtr datum, const IntVec& gamma);
    static AffineWeylElement from_word(DatumPtr datum, const Word& word);

    const DatumPtr& datum() const { return datum_; }
    const IntVec& gamma() const { return gamma_; }
    const IntMat& finite_matrix() const { return u_; }
    const IntMat& finite_inverse_matrix() const { return uinv_; }
    int rank() const { return static_cast<int>(gamma_.size()); }

    AffineWeylElement operator*(const AffineWeylElement& o) const;
    AffineWeylElement inverse() const;
    AffineWeylElement finite_part() const;
    bool is_finite() const { return gamma_.isZero(); }
    bool is_identity() const { return is_finite() && u_.isIdentity(); }

    HhatVector act(const HhatVector& h) const;
    AffineWeight act(const AffineWeight& mu) const;
    AffineRoot act(const AffineRoot& a) const;
    AffineWeight dot(const AffineWeight& mu) const;

    bool is_left_descent(int i) const;
    bool is_right_descent(int i) const;
    std::vector<int> left_descents() const;
    std::vector<int> right_descents() const;

    // Greedy removal of the smallest left descent.
    int length() const;
    Word reduced_word() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    bool operator==(const AffineWeylElement& o) const;
    bool operator!=(const AffineWeylElement& o) const { return !(*this == o); }
    std::size_t hash() const;

    // Type A only: the window (sigma(1), ..., sigma(n)) of the periodic permutation.
    std::vector<Int> window() const;
    static AffineWeylElement from_window(DatumPtr datum, const std::vector<Int>& window);

private:
    AffineWeylElement(DatumPtr datum, IntVec gamma, IntMat u, IntMat uinv);
    void require_same_datum(const AffineWeylElement& o) const;

    DatumPtr datum_;
    IntVec gamma_;
    IntMat u_;
    IntMat uinv_;
};

struct AffineWeylHash {
    std::size_t operator()(const AffineWeylElement& w) const { return w.hash(); }
};

AffineRoot simple_affine_root(const CartanDatum& datum, int i);

// Type A: coroot coordinates <-> epsilon coordinates (n entries summing to zero).
std::vector<Int> to_epsilon(const IntVec& gamma);
IntVec from_epsilon(const std::vector<Int>& eps);
// [i] in {0, ..., n-1}
int residue(Int i, int n);

// Minimal element of t_gamma W^fin (the representative w_gamma).
AffineWeylElement min_coset_rep(DatumPtr datum, const IntVec& gamma);

// w_i and its translation part nu_i. For D and E, i is a node 0..r; for A_{n-1}, any integer.
Word subregular_word(const CartanDatum& datum, Int i);
AffineWeylElement subregular_w(DatumPtr datum, Int i);
IntVec subregular_nu(DatumPtr datum, Int i);

// All elements of length <= max_length, ordered by length (BFS discovery order within a length).
std::vector<AffineWeylElement> enumerate_up_to_length(DatumPtr datum, int max_length,
                                                      std::size_t cap = 200000);

// Elements of the finite Weyl group; refuses groups larger than cap.
std::vector<AffineWeylElement> finite_weyl_group(DatumPtr datum, std::size_t cap = 100000);

struct WeightClass {
    Int level = 0;
    bool integral = true;
    bool dominant = false;
    bool quasi_dominant = false;
    bool regular = false;
};

WeightClass classify_weight(const CartanDatum& datum, const AffineWeight& mu);

// Simple j in 0..r with <lambda + rho^, alpha_j^vee> = 0.
std::vector<int> stabilizer(const CartanDatum& datum, const AffineWeight& lambda);

// Whether w is the longest element of W_lambda w.
bool is_longest_in_coset(const CartanDatum& datum, const AffineWeight& lambda,
                         const AffineWeylElement& w);

} // namespace affkl
