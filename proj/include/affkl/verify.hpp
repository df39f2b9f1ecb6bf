#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affkl/characters.hpp"

namespace affkl {

// Outcome of one verification suite. detail is a short human-readable summary.
struct SuiteResult {
    bool pass = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;

    void record(bool ok) {
        ++checked;
        if (!ok) {
            ++failures;
            pass = false;
        }
    }
};

// Subregular indices i whose w_i has length <= cap.
std::vector<Int> subregular_indices(const CartanDatum& datum, int cap);

// Closed-form multiplicities against the parabolic inverse KL data at q = 1.
SuiteResult verify_oracle_equality(DatumPtr datum, int cap);
// m^{w_nu}_{w_nu} = 1 for every minimal representative of length <= cap.
SuiteResult verify_diagonal(DatumPtr datum, int cap);
// Parabolic inverse KL polynomials against the full Hecke algebra ones.
SuiteResult verify_parabolic_full(DatumPtr datum, int max_length);
// decompose_translate against the closed column on random gamma.
SuiteResult verify_module_identity(DatumPtr datum, int samples, Int max_norm, std::uint64_t seed);
// Case table for z_i(-a eps_[i]) - z_i(-a eps_[i]+1).
SuiteResult verify_z_table(int n, Int i_range, Int a_range);
// Greedy length against breadth-first length, and reduced words multiplying back.
SuiteResult verify_lengths(DatumPtr datum, int max_length);
// Bar invariance, P = 1 near the diagonal, and m^w_v = m^{w^-1}_{v^-1}.
SuiteResult verify_kl_sanity(DatumPtr datum, int max_length);

struct ExampleSpec {
    std::string label;
    std::vector<Int> lambda;
    Int i = 0;
    Word w;  // nonempty for the exploratory items
};

// D4 Example items; k, l, p range over the permutations of the outer nodes.
std::vector<ExampleSpec> d4_examples(bool exploratory);
// Lambda = -(1+i)Lambda_0 + i Lambda_{n-1} for n = 3, 4 and i = 0, 1, 2 (and the mirror i < 0).
std::vector<ExampleSpec> type_a_corollary_examples(int n, bool include_negative);

SuiteResult verify_kw_agreement(Int radius);
SuiteResult verify_type_a_corollary(Int radius, int kl_cap);
// Highest term and antisymmetry on every route of every example.
SuiteResult verify_table_invariants(Int radius, int kl_cap);

} // namespace affkl
