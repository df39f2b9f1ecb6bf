#pragma once

#include <map>
#include <string>
#include <vector>

#include "affkl/lattice.hpp"

namespace affkl {

// Integer Laurent polynomial in q, stored densely from the lowest nonzero exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Int constant); // NOLINT(google-explicit-constructor)
    static LaurentPoly monomial(Int coeff, int exponent);
    static LaurentPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    // Highest exponent; meaningless for the zero polynomial.
    int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int exponent) const;
    Int eval_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(Int s);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, Int s) { return a *= s; }

    // this += s * q^shift * o, the workhorse of the Hecke kernels.
    void add_scaled(const LaurentPoly& o, Int s, int shift);

    LaurentPoly shifted(int k) const;
    // q -> q^{-1}
    LaurentPoly bar() const;

    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::map<int, Int> terms() const;
    std::string to_string() const;

private:
    void trim();

    int low_ = 0;
    std::vector<Int> coeffs_;
};

} // namespace affkl
