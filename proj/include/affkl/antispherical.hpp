#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "affkl/hecke.hpp"

namespace affkl {

// Element of the anti-spherical module, keyed by minimal coset representatives.
struct ModuleElement {
    SparseVec terms;
};

// M = sgn (x)_{H^fin} H, with basis H'_x for x minimal in x W^fin.
class AntisphericalModule {
public:
    explicit AntisphericalModule(HeckeAlgebra& algebra);

    HeckeAlgebra& algebra() { return algebra_; }
    ElementIndex& index() { return index_; }

    ElemId min_rep(const IntVec& gamma);
    // Minimal coset representatives of length <= max_length, by length.
    std::vector<ElemId> min_coset_ball(int max_length);

    // phi(H_{w_gamma u}) = eps(u) H'_{w_gamma}
    ModuleElement project(const HeckeElement& h);
    ModuleElement act_generator(int s, const ModuleElement& m);
    ModuleElement act(const HeckeElement& h, const ModuleElement& m);
    ModuleElement bar(const ModuleElement& m);

    // C'_x in the standard basis.
    const SparseVec& parabolic_kl(ElemId x);
    // H'_x = sum_z eps(x z^{-1}) mt^x_z C'_z; returns z -> mt^x_z.
    std::map<ElemId, LaurentPoly> parabolic_inverse(ElemId x);
    const SparseVec& standard_in_kl(ElemId x);

    // T_gamma = eps(w_gamma) H'_{w_gamma} and C_nu = eps(w_nu) C'_{w_nu}.
    ModuleElement t_basis(const IntVec& gamma);
    ModuleElement c_basis(const IntVec& nu);
    // T_gamma = sum_nu m^{w_gamma}_{w_nu} C_nu; keys are w_nu.
    std::map<ElemId, LaurentPoly> t_in_c(const IntVec& gamma);

private:
    void check_cap(ElemId x) const;

    HeckeAlgebra& algebra_;
    ElementIndex& index_;
    std::unordered_map<ElemId, SparseVec> kl_;
    std::unordered_map<ElemId, SparseVec> inv_;
};

} // namespace affkl
