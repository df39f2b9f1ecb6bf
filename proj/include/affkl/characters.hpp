#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affkl/antispherical.hpp"
#include "affkl/subregular.hpp"

namespace affkl {

enum class CaseTag { regular_a, singular_b };
enum class Route { closed_form, kac_wakimoto, kl_oracle };

const char* route_name(Route r);
Route parse_route(const std::string& s);

struct HighestWeightSpec {
    DatumPtr datum;
    AffineWeight lambda;
    AffineWeight Lambda;
    Int i = 0;
    int node = 0;  // i itself for D/E, [i] for type A
    CaseTag case_tag = CaseTag::regular_a;
    AffineWeylElement w;  // w_i, or the supplied element of an exploratory spec
    std::optional<AffineRoot> alpha;
    // Built from an arbitrary w rather than w_i; no correctness claim attached.
    bool exploratory = false;
};

// Checks the hypotheses of the subregular character formula for (lambda, i).
HighestWeightSpec validate_pair(DatumPtr datum, const AffineWeight& lambda, Int i);
// Same bookkeeping for an arbitrary w whose first letter is the stabiliser of lambda.
HighestWeightSpec exploratory_spec(DatumPtr datum, const AffineWeight& lambda, const Word& w);

struct CharacterTerm {
    AffineWeight weight;
    Int coeff = 0;
    // First (u, gamma) presentation met during enumeration.
    Word u_word;
    IntVec gamma;
};

// Coefficients of R^ ch L(Lambda) on the ball |mu_bar|^2 <= kappa^2 radius,
// kappa the level of Lambda + rho^. Zero coefficients inside the domain are kept.
struct CharacterTruncation {
    HighestWeightSpec spec;
    Int radius = 0;
    Route route = Route::closed_form;
    std::vector<CharacterTerm> terms;  // sorted by exponent
    std::size_t presentations = 0;
    std::size_t incomplete = 0;        // exponents dropped by the KL length cap

    const CharacterTerm* find(const AffineWeight& mu) const;
};

// Lattice points gamma with |nu_bar + kappa gamma|^2 <= kappa^2 radius.
std::vector<IntVec> truncation_ball(const CartanDatum& datum, const AffineWeight& nu, Int radius);

CharacterTruncation char_closed_form(const HighestWeightSpec& spec, Int radius);
CharacterTruncation char_kac_wakimoto(const HighestWeightSpec& spec, Int radius);
CharacterTruncation char_kl_oracle(const HighestWeightSpec& spec, Int radius, AntisphericalModule& module);
CharacterTruncation char_kl_oracle(const HighestWeightSpec& spec, Int radius, int length_cap);
CharacterTruncation build_character(const HighestWeightSpec& spec, Int radius, Route route, int length_cap);

struct Mismatch {
    AffineWeight weight;
    Int left = 0;
    Int right = 0;
};

struct CompareReport {
    std::size_t compared = 0;
    Int max_abs_diff = 0;
    std::vector<Mismatch> mismatches;
    bool pass() const { return max_abs_diff == 0; }
};

CompareReport compare(const CharacterTruncation& a, const CharacterTruncation& b);

struct InvariantReport {
    bool highest_term_is_one = false;
    std::size_t antisymmetry_checked = 0;
    std::size_t antisymmetry_failures = 0;
    bool pass() const { return highest_term_is_one && antisymmetry_failures == 0; }
};

// e^{Lambda + rho^} has coefficient 1 and c(s_j mu) = -c(mu) for finite j.
InvariantReport check_invariants(const CharacterTruncation& t);

} // namespace affkl
