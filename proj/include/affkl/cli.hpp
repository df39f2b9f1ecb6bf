#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace affkl {

enum class OutputFormat { json, csv, plain };

struct RunConfig {
    std::string type_label;
    int kl_cap = 14;
    long radius = 20;
    int window = 0;  // type A index window for subregular columns; 0 means 3n
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 20240601;
    int threads = 1;

    // Throws Error(invalid_argument) on nonsensical values.
    void validate() const;
};

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_cap = 2;
inline constexpr int exit_verification = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out);

} // namespace affkl
