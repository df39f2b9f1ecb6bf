#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace affkl {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline bool same(const IntVec& a, const IntVec& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool same(const IntMat& a, const IntMat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols()
        && (a.array() == b.array()).all();
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <class Derived>
std::size_t hash_entries(const Eigen::DenseBase<Derived>& m, std::size_t seed = 0) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            hash_combine(seed, std::hash<Int>{}(m(i, j)));
    return seed;
}

IntVec to_intvec(const std::vector<Int>& v);
std::vector<Int> to_std(const IntVec& v);

// Exact determinant via fraction-free elimination.
Int determinant(const IntMat& m);

// det(m) * m^{-1}; exact for integer matrices.
IntMat adjugate(const IntMat& m);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// "1,-2,0" -> {1,-2,0}. Empty string gives an empty vector.
std::vector<Int> parse_int_list(const std::string& s);
std::string join_ints(const std::vector<Int>& v, const char* sep = ",");

} // namespace affkl
