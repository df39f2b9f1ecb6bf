#include "affkl/laurent_poly.hpp"

#include <algorithm>

namespace affkl {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) {
        p.low_ = exponent;
        p.coeffs_.push_back(coeff);
    }
    return p;
}

Int LaurentPoly::coeff(int e) const {
    const int k = e - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (Int c : coeffs_)
        s += c;
    return s;
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    while (coeffs_.back() == 0)
        coeffs_.pop_back();
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& o, Int s, int shift) {
    if (o.is_zero() || s == 0)
        return;
    const int olow = o.low_ + shift;
    const int ohigh = olow + static_cast<int>(o.coeffs_.size()) - 1;
    if (is_zero()) {
        low_ = olow;
        coeffs_.assign(o.coeffs_.size(), 0);
    } else {
        const int high = degree();
        if (olow < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - olow), 0);
            low_ = olow;
        }
        if (ohigh > high)
            coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(ohigh - high), 0);
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[static_cast<std::size_t>(olow - low_) + k] += s * o.coeffs_[k];
    trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, -1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(Int s) {
    for (Int& c : coeffs_)
        c *= s;
    trim();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    return p *= -1;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero())
        return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero())
        p.low_ += k;
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    if (is_zero())
        return p;
    p.low_ = -degree();
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return p;
}

std::map<int, Int> LaurentPoly::terms() const {
    std::map<int, Int> t;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            t[low_ + static_cast<int>(k)] = coeffs_[k];
    return t;
}

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const Int c = *it;
        if (c == 0)
            continue;
        const int e = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
        const Int mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1)
            s += std::to_string(mag);
        s += "q";
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace affkl
