#include "affkl/lattice.hpp"

#include <charconv>
#include <sstream>

#include "affkl/error.hpp"

namespace affkl {

IntVec to_intvec(const std::vector<Int>& v) {
    IntVec out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

std::vector<Int> to_std(const IntVec& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
}

Int determinant(const IntMat& m) {
    // Bareiss elimination keeps every intermediate an exact integer.
    if (m.rows() != m.cols())
        fail(ErrorCode::invalid_argument, "determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0)
        return 1;
    IntMat a = m;
    Int sign = 1;
    Int prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMat adjugate(const IntMat& m) {
    const Eigen::Index n = m.rows();
    const Int det = determinant(m);
    if (det == 0)
        fail(ErrorCode::invalid_argument, "adjugate of a singular matrix requested");
    // Gauss-Jordan over the rationals, then scale by det.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j)
            a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        while (a[piv][col].numerator() == 0)
            ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col])
            x *= inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || a[i][col].numerator() == 0)
                continue;
            const Rational f = a[i][col];
            for (Eigen::Index j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    IntMat out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const Rational v = a[i][n + j] * det;
            if (v.denominator() != 1)
                fail(ErrorCode::internal, "adjugate is not integral");
            out(i, j) = v.numerator();
        }
    return out;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {
Int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        fail(ErrorCode::invalid_argument, "not an integer: '" + std::string(s) + "'");
    return v;
}
} // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    const Int den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 0)
        fail(ErrorCode::invalid_argument, "zero denominator in '" + s + "'");
    return Rational(parse_int(std::string_view(s).substr(0, slash)), den);
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (s.find_first_not_of(' ') == std::string::npos)
        return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_int(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string join_ints(const std::vector<Int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace affkl
