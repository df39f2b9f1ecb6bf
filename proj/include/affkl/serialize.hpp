#pragma once

#include <json.hpp>

#include "affkl/characters.hpp"

namespace affkl {

using Json = nlohmann::ordered_json;

Json to_json(const IntVec& v);
Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const AffineWeight& w);
Json to_json(const AffineRoot& a);
Json to_json(const HhatVector& h);
Json to_json(const HInftyVector& h);
Json to_json(const AffineWeylElement& w);
Json to_json(const CartanDatum& d);
Json to_json(const MultColumn& col);
Json to_json(const HighestWeightSpec& s);
// Nonzero coefficients only; the domain size is reported separately.
Json to_json(const CharacterTruncation& t);
Json to_json(const CompareReport& r);

std::string to_csv(const CharacterTruncation& t);

} // namespace affkl
