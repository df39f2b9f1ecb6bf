#pragma once

#include <map>
#include <string>
#include <vector>

#include "affkl/affine_weyl.hpp"

namespace affkl {

// sum_j x_j eps_j + d_coeff d in Z^{(Z)} + Zd. Zero coefficients are never stored.
struct HInftyVector {
    std::map<Int, Int> eps;
    Int d = 0;

    bool operator==(const HInftyVector&) const = default;
    void add_eps(Int j, Int c);
};

// z_i(a eps_k) for the window size n.
Int z_value(Int i, Int a, int k, int n);

// <Lambda_i, -gamma + |gamma|^2/2 K>
Int m_closed_de(const CartanDatum& datum, int i, const IntVec& gamma);
// -sum_k z_i(<eps_k, gamma> eps_k); gamma given in epsilon coordinates.
Int m_closed_a(Int i, const std::vector<Int>& eps);
// Dispatches on the type; gamma in simple-coroot coordinates.
Int m_closed(const CartanDatum& datum, Int i, const IntVec& gamma);

// Action of Z^n x| S_n on Z^{(Z)} + Zd.
HInftyVector act_infty(const AffineWeylElement& w, const HInftyVector& v);
// t_gamma(d) built from t_{eps_k}(d) = d + eps_k; gamma may lie in Z^n.
HInftyVector translate_d_infty(const std::vector<Int>& eps);
// t_gamma(d) in h^ via the affine action.
HhatVector translate_d(const AffineWeylElement& t_gamma);

// i -> m^{w_gamma}_{w_i}. D/E: every node 0..r. A: the nonzero entries.
using MultColumn = std::map<Int, Int>;

MultColumn decompose_translate(DatumPtr datum, const IntVec& gamma);
MultColumn closed_column(const CartanDatum& datum, const IntVec& gamma);

struct CanonicalImage {
    std::string label;           // "C_0" or "C_nu_i"
    Int index = 0;               // i for C_nu_i
    std::map<Int, Int> coroots;  // coefficients of alpha_j^vee
    Int d = 0;
};

// C_0 -> d and C_{nu_i} -> -alpha_i^vee. For type A the window is [lo, hi].
std::vector<CanonicalImage> canonical_basis_images(const CartanDatum& datum, Int lo = 0, Int hi = 0);

} // namespace affkl
