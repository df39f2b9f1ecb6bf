#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affkl/verify.hpp"

using namespace affkl;

namespace {

constexpr int kLengthCap = 12;
constexpr int kParabolicLength = 10;
constexpr int kSmallLength = 8;
constexpr Int kRadius = 20;
constexpr int kCharacterKlCap = 12;

struct Part {
    std::string what;
    SuiteResult result;
};

SuiteResult merge(const std::vector<Part>& parts) {
    SuiteResult out;
    for (const auto& p : parts) {
        out.pass = out.pass && p.result.pass;
        out.checked += p.result.checked;
        out.failures += p.result.failures;
        if (!out.detail.empty())
            out.detail += "; ";
        out.detail += p.what + ": " + p.result.detail;
    }
    return out;
}

template <class F>
std::vector<Part> per_type(const std::vector<const char*>& types, F&& f) {
    std::vector<Part> parts;
    for (const char* t : types)
        parts.push_back({t, f(build_cartan(t))});
    return parts;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<SuiteResult()>>> criteria = {
        {"oracle equality (A2, D4, length <= 12)", [] {
             return merge(per_type({"A2", "D4"},
                                   [](DatumPtr d) { return verify_oracle_equality(d, kLengthCap); }));
         }},
        {"parabolic vs full inverse KL (A2, D4, length <= 10)", [] {
             return merge(per_type({"A2", "D4"},
                                   [](DatumPtr d) { return verify_parabolic_full(d, kParabolicLength); }));
         }},
        {"module identity (500 samples, |gamma|^2 <= 50)", [] {
             return merge(per_type({"A2", "A3", "D4", "E6"}, [](DatumPtr d) {
                 return verify_module_identity(d, 500, 50, 20240601);
             }));
         }},
        {"Kac-Wakimoto agreement (D4 items 1-4, radius 20)", [] {
             return verify_kw_agreement(kRadius);
         }},
        {"type A corollary (n = 3, 4, radius 20)", [] {
             return verify_type_a_corollary(kRadius, kCharacterKlCap);
         }},
        {"diagonal normalization (A2, D4, length <= 12)", [] {
             return merge(per_type({"A2", "D4"},
                                   [](DatumPtr d) { return verify_diagonal(d, kLengthCap); }));
         }},
        {"z case table (n = 3, 4, 5)", [] {
             std::vector<Part> parts;
             for (int n : {3, 4, 5})
                 parts.push_back({"n=" + std::to_string(n), verify_z_table(n, 3 * n, 10)});
             return merge(parts);
         }},
        {"greedy vs BFS length (A2, A3, D4, length <= 8)", [] {
             return merge(per_type({"A2", "A3", "D4"},
                                   [](DatumPtr d) { return verify_lengths(d, kSmallLength); }));
         }},
        {"KL sanity (A2, A3, D4, length <= 8)", [] {
             return merge(per_type({"A2", "A3", "D4"},
                                   [](DatumPtr d) { return verify_kl_sanity(d, kSmallLength); }));
         }},
        {"character table invariants (all routes, radius 20)", [] {
             return verify_table_invariants(kRadius, kCharacterKlCap);
         }},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r;
        try {
            r = criteria[k].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.checked == 0)
            r.pass = false;
        if (!r.pass)
            ++failed;
        std::printf("[%s] criterion %zu: %s | %zu checked, %zu failed, %.1fs | %s\n",
                    r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), r.checked,
                    r.failures, secs, r.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
