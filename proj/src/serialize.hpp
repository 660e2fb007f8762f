#pragma once

#include <string>

#include <json.hpp>

#include "eigen.hpp"
#include "novel_alg.hpp"
#include "oracle.hpp"
#include "report.hpp"

namespace cms {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (plain "p" for integers).
Json to_json(const BigRational& q);
Json to_json(const LambdaPoly& p);
/// {"num": [c0, c1, ...], "den": [...]}, coefficients in ascending powers of λ.
Json to_json(const RatFunc& f);
Json to_json(const Weight& n);
/// {"j,k": value} with 1-based indices; zero entries included.
Json to_json(const MuVector& mu);
/// {"N": .., "basis": "M"|"S", "terms": [{"key": [...], "coeff": RatFunc}, ...]} in descending key order.
Json to_json(const SymPoly& p);
Json to_json(const EigenResult& r);
Json to_json(const PFunction& p);
Json to_json(const oracle::SpectrumTable& t);
Json to_json(const VerificationReport& r);

BigRational rational_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
Weight weight_from_json(const Json& j);
MuVector mu_from_json(const Json& j, std::size_t n);
SymPoly sympoly_from_json(const Json& j);

/// Human-readable forms: "m[2,0] + 2*l/(l + 1)*m[1,1]".
std::string to_display(const SymPoly& p, std::string_view var = "l");
std::string to_display(const Weight& n);

}  // namespace cms
