#include "affkl/subregular.hpp"

#include <algorithm>
#include <cstdlib>

#include "affkl/error.hpp"

namespace affkl {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

void require_type_a(const CartanDatum& datum) {
    if (!datum.is_type_a())
        fail(ErrorCode::unsupported_type, "operation is specific to type A, got " + datum.name());
}

void require_type_de(const CartanDatum& datum) {
    if (datum.is_type_a())
        fail(ErrorCode::unsupported_type, "operation is specific to types D and E, got " + datum.name());
}

} // namespace

void HInftyVector::add_eps(Int j, Int c) {
    if (c == 0)
        return;
    Int& slot = eps[j];
    slot += c;
    if (slot == 0)
        eps.erase(j);
}

Int z_value(Int i, Int a, int k, int n) {
    if (n < 1 || k < 1 || k > n)
        fail(ErrorCode::invalid_argument, "z_value needs 1 <= k <= n");
    // j ranges over the multiples of n with k + jn <= i.
    const Int top = floor_div(i - k, n);
    if (a >= 0)
        return std::clamp<Int>(top + 1, 0, a);
    return -std::max<Int>(0, std::min<Int>(-1, top) - a + 1);
}

Int m_closed_de(const CartanDatum& datum, int i, const IntVec& gamma) {
    require_type_de(datum);
    if (i < 0 || i > datum.rank())
        fail(ErrorCode::invalid_argument, "node index out of range");
    if (gamma.size() != datum.rank())
        fail(ErrorCode::not_a_coroot, "coroot of wrong rank");
    const Int half = datum.norm_sq(gamma) / 2;
    return (i == 0 ? 0 : -gamma(i - 1)) + half * datum.mark(i);
}

Int m_closed_a(Int i, const std::vector<Int>& eps) {
    const int n = static_cast<int>(eps.size());
    if (n < 3)
        fail(ErrorCode::unsupported_type, "the type A closed form needs n >= 3");
    Int s = 0;
    for (int k = 1; k <= n; ++k)
        s += z_value(i, eps[static_cast<std::size_t>(k - 1)], k, n);
    return -s;
}

Int m_closed(const CartanDatum& datum, Int i, const IntVec& gamma) {
    if (datum.is_type_a())
        return m_closed_a(i, to_epsilon(gamma));
    return m_closed_de(datum, static_cast<int>(i), gamma);
}

HInftyVector act_infty(const AffineWeylElement& w, const HInftyVector& v) {
    require_type_a(*w.datum());
    const int n = w.rank() + 1;
    const std::vector<Int> win = w.window();
    HInftyVector out;
    for (const auto& [j, c] : v.eps) {
        const int p = residue(j - 1, n) + 1;
        out.add_eps(win[static_cast<std::size_t>(p - 1)] + (j - p), c);
    }
    if (v.d != 0) {
        // w = t_gamma u and u fixes d.
        const HInftyVector td = translate_d_infty(to_epsilon(w.gamma()));
        out.d += v.d;
        for (const auto& [j, c] : td.eps)
            out.add_eps(j, v.d * c);
    }
    return out;
}

HInftyVector translate_d_infty(const std::vector<Int>& eps) {
    const int n = static_cast<int>(eps.size());
    // Apply t_{eps_k}^{+-1} one factor at a time; they commute. t_{eps_k}
    // moves eps_j to eps_{j+n} for j = k mod n and sends d to d + eps_k.
    HInftyVector v;
    v.d = 1;
    for (int k = 1; k <= n; ++k) {
        const Int a = eps[static_cast<std::size_t>(k - 1)];
        const Int step = a >= 0 ? 1 : -1;
        for (Int t = 0; t != a; t += step) {
            HInftyVector next;
            next.d = v.d;
            for (const auto& [j, c] : v.eps)
                next.add_eps(residue(j - k, n) == 0 ? j + step * n : j, c);
            if (step > 0)
                next.add_eps(k, v.d);
            else
                next.add_eps(k - n, -v.d);
            v = std::move(next);
        }
    }
    return v;
}

HhatVector translate_d(const AffineWeylElement& t_gamma) {
    HhatVector d;
    d.x = IntVec::Zero(t_gamma.rank());
    d.d = 1;
    return t_gamma.act(d);
}

MultColumn decompose_translate(DatumPtr datum, const IntVec& gamma) {
    if (gamma.size() != datum->rank())
        fail(ErrorCode::not_a_coroot, "coroot of wrong rank");
    MultColumn col;
    if (datum->is_type_a()) {
        // t_gamma(d) - d = sum_j b_j eps_j = sum_i c_i alpha_i^vee with c_i = sum_{j<=i} b_j.
        const HInftyVector td = translate_d_infty(to_epsilon(gamma));
        Int prefix = 0;
        Int prev = 0;
        bool first = true;
        for (const auto& [j, b] : td.eps) {
            if (!first && prefix != 0)
                for (Int i = prev; i < j; ++i)
                    col[i] = -prefix;
            prefix += b;
            prev = j;
            first = false;
        }
        if (prefix != 0)
            fail(ErrorCode::internal, "t_gamma(d) - d left the coroot lattice");
        return col;
    }
    const HhatVector td = translate_d(AffineWeylElement::translation(datum, gamma));
    // t_gamma(d) - d = x + kK and K = sum_i a_i alpha_i^vee.
    const int r = datum->rank();
    col[0] = -td.k;
    for (int i = 1; i <= r; ++i)
        col[i] = -(td.x(i - 1) + td.k * datum->mark(i));
    return col;
}

MultColumn closed_column(const CartanDatum& datum, const IntVec& gamma) {
    MultColumn col;
    if (!datum.is_type_a()) {
        for (int i = 0; i <= datum.rank(); ++i)
            col[i] = m_closed_de(datum, i, gamma);
        return col;
    }
    const std::vector<Int> eps = to_epsilon(gamma);
    const int n = static_cast<int>(eps.size());
    Int amax = 0;
    for (Int a : eps)
        amax = std::max<Int>(amax, std::abs(a));
    const Int reach = n * (amax + 1);
    for (Int i = -reach; i <= reach; ++i)
        if (const Int m = m_closed_a(i, eps); m != 0)
            col[i] = m;
    return col;
}

std::vector<CanonicalImage> canonical_basis_images(const CartanDatum& datum, Int lo, Int hi) {
    std::vector<CanonicalImage> out;
    out.push_back(CanonicalImage{"C_0", 0, {}, 1});
    if (!datum.is_type_a()) {
        lo = 0;
        hi = datum.rank();
    }
    for (Int i = lo; i <= hi; ++i)
        out.push_back(CanonicalImage{"C_nu_" + std::to_string(i), i, {{i, -1}}, 0});
    return out;
}

} // namespace affkl
