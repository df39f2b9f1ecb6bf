#include "affkl/serialize.hpp"

#include <sstream>

namespace affkl {

Json to_json(const IntVec& v) {
    return Json(to_std(v));
}

Json to_json(const Rational& r) {
    if (r.denominator() == 1)
        return Json(r.numerator());
    return Json(to_string(r));
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::object();
    for (const auto& [e, c] : p.terms())
        terms[std::to_string(e)] = c;
    return Json{{"text", p.to_string()}, {"terms", terms}, {"at_one", p.eval_at_one()}};
}

Json to_json(const AffineWeight& w) {
    return Json{{"c", to_json(w.c)}, {"delta", to_json(w.delta)}};
}

Json to_json(const AffineRoot& a) {
    return Json{{"beta", to_json(a.beta)}, {"n", a.n}};
}

Json to_json(const HhatVector& h) {
    return Json{{"x", to_json(h.x)}, {"K", h.k}, {"d", h.d}};
}

Json to_json(const HInftyVector& h) {
    Json eps = Json::object();
    for (const auto& [j, c] : h.eps)
        eps[std::to_string(j)] = c;
    return Json{{"eps", eps}, {"d", h.d}};
}

Json to_json(const AffineWeylElement& w) {
    Json j{{"word", w.reduced_word()}, {"length", w.length()}, {"gamma", to_json(w.gamma())}};
    if (w.datum()->is_type_a())
        j["window"] = w.window();
    return j;
}

Json to_json(const CartanDatum& d) {
    Json cartan = Json::array();
    for (int i = 0; i < d.rank(); ++i)
        cartan.push_back(to_json(IntVec(d.cartan().row(i).transpose())));
    Json roots = Json::array();
    for (const auto& b : d.positive_roots())
        roots.push_back(to_json(b));
    Json adj = Json::array();
    for (int i = 0; i <= d.rank(); ++i)
        adj.push_back(d.neighbours(i));
    return Json{{"type", d.name()},
                {"rank", d.rank()},
                {"cartan_matrix", cartan},
                {"positive_roots", roots},
                {"root_count", 2 * d.positive_roots().size()},
                {"highest_root", to_json(d.highest_root())},
                {"marks", d.marks()},
                {"dual_coxeter", d.dual_coxeter()},
                {"two_rho", to_json(d.two_rho())},
                {"affine_neighbours", adj}};
}

Json to_json(const MultColumn& col) {
    Json j = Json::object();
    for (const auto& [i, m] : col)
        j[std::to_string(i)] = m;
    return j;
}

Json to_json(const HighestWeightSpec& s) {
    Json j{{"type", s.datum->name()},
           {"lambda", to_json(s.lambda)},
           {"i", s.i},
           {"node", s.node},
           {"case", s.case_tag == CaseTag::regular_a ? "regular_a" : "singular_b"},
           {"w", s.w.reduced_word()},
           {"Lambda", to_json(s.Lambda)},
           {"level", s.datum->level(s.Lambda)}};
    if (s.alpha)
        j["alpha"] = to_json(*s.alpha);
    if (s.exploratory)
        j["exploratory"] = true;
    return j;
}

Json to_json(const CharacterTruncation& t) {
    Json rows = Json::array();
    for (const auto& term : t.terms) {
        if (term.coeff == 0)
            continue;
        rows.push_back(Json{{"exponent", to_json(term.weight)},
                            {"coeff", term.coeff},
                            {"u", term.u_word},
                            {"gamma", to_json(term.gamma)}});
    }
    return Json{{"spec", to_json(t.spec)},
                {"route", route_name(t.route)},
                {"radius", t.radius},
                {"domain", t.terms.size()},
                {"incomplete", t.incomplete},
                {"nonzero", rows.size()},
                {"terms", rows}};
}

Json to_json(const CompareReport& r) {
    Json mm = Json::array();
    for (std::size_t k = 0; k < r.mismatches.size() && k < 20; ++k)
        mm.push_back(Json{{"exponent", to_json(r.mismatches[k].weight)},
                          {"left", r.mismatches[k].left},
                          {"right", r.mismatches[k].right}});
    return Json{{"pass", r.pass()},
                {"compared", r.compared},
                {"max_abs_diff", r.max_abs_diff},
                {"mismatch_count", r.mismatches.size()},
                {"mismatches", mm}};
}

std::string to_csv(const CharacterTruncation& t) {
    std::ostringstream os;
    const int r = t.spec.datum->rank();
    for (int i = 0; i <= r; ++i)
        os << "c" << i << ",";
    os << "delta,coeff,u,gamma\n";
    for (const auto& term : t.terms) {
        if (term.coeff == 0)
            continue;
        for (int i = 0; i <= r; ++i)
            os << term.weight.c(i) << ",";
        os << to_string(term.weight.delta) << "," << term.coeff << ",\""
           << join_ints(std::vector<Int>(term.u_word.begin(), term.u_word.end()), " ") << "\",\""
           << join_ints(to_std(term.gamma), " ") << "\"\n";
    }
    return os.str();
}

} // namespace affkl
