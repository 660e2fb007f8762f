#include "serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace cms {

Json to_json(const BigRational& q) { return to_string(q); }

Json to_json(const LambdaPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Weight& n) { return Json(n); }

Json to_json(const MuVector& mu) {
  Json o = Json::object();
  for (auto [j, k] : index_pairs(mu.size()))
    o[std::to_string(j + 1) + "," + std::to_string(k + 1)] = mu.at(j, k);
  return o;
}

Json to_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back(Json{{"key", key}, {"coeff", to_json(c)}});
  return Json{{"N", p.size()}, {"basis", p.basis() == Basis::M ? "M" : "S"}, {"terms", terms}};
}

Json to_json(const EigenResult& r) {
  return Json{{"n", r.n},
              {"algorithm", to_string(r.algorithm)},
              {"phi", to_json(r.phi)},
              {"energy", to_json(r.energy)},
              {"excitation_energy", to_json(r.excitation_energy)}};
}

Json to_json(const PFunction& p) {
  Json o{{"n", p.n}, {"poly", to_json(p.poly)}};
  if (p.poly.is_zero() && !support_ok(p.n)) o["reason"] = "support condition violated";
  return o;
}

Json to_json(const oracle::SpectrumTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(Json{{"partition", r.key}, {"value", to_json(r.value)}});
  return Json{{"degree", t.degree}, {"N", t.N}, {"lambda", to_json(t.lambda0)}, {"rows", rows}};
}

Json to_json(const VerificationReport& r) {
  Json o{{"identity", r.identity},
         {"samples", r.samples},
         {"max_rel_residual", r.max_rel_residual},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"seed", nullptr}};
  if (r.seed) o["seed"] = *r.seed;
  if (!r.detail.empty()) o["detail"] = r.detail;
  return o;
}

BigRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

namespace {
LambdaPoly lambdapoly_from_json(const Json& j) {
  std::vector<BigRational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return LambdaPoly(std::move(c));
}
}  // namespace

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(lambdapoly_from_json(j.at("num")), lambdapoly_from_json(j.at("den")));
}

Weight weight_from_json(const Json& j) { return j.get<Weight>(); }

MuVector mu_from_json(const Json& j, std::size_t n) {
  MuVector mu(n);
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("MuVector key must be \"j,k\"");
    const std::size_t a = std::stoul(key.substr(0, comma)), b = std::stoul(key.substr(comma + 1));
    if (a < 1 || b < 1) throw std::invalid_argument("MuVector indices are 1-based");
    mu.set(a - 1, b - 1, value.get<int>());
  }
  return mu;
}

SymPoly sympoly_from_json(const Json& j) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "M" && basis != "S") throw std::invalid_argument("basis must be \"M\" or \"S\"");
  SymPoly p(j.at("N").get<std::size_t>(), basis == "M" ? Basis::M : Basis::S);
  for (const auto& t : j.at("terms")) p.add_term(t.at("key").get<PartitionKey>(), ratfunc_from_json(t.at("coeff")));
  return p;
}

std::string to_display(const Weight& n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + "]";
}

std::string to_display(const SymPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  const char* symbol = p.basis() == Basis::M ? "m" : "S";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    std::string coeff = to_string(c, var);
    bool negative = coeff.starts_with('-') && coeff.find_first_of("+-", 1) == std::string::npos;
    if (negative) coeff.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const bool constant = std::all_of(key.begin(), key.end(), [](int v) { return v == 0; });
    const bool compound = coeff.find_first_of("+- ") != std::string::npos;
    if (constant) {
      out += compound && out.size() > 1 ? "(" + coeff + ")" : coeff;
      continue;
    }
    if (coeff != "1") out += (compound ? "(" + coeff + ")" : coeff) + "*";
    out += symbol + to_display(key);
  }
  return out;
}

}  // namespace cms
