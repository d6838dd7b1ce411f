#include "qcms/serialize.hpp"

#include <bit>
#include <sstream>

#include "qcms/error.hpp"

namespace qcms {

nlohmann::json gaussian_to_json(const GaussianRational& c) {
  return {{"re", rational_exact_string(c.re())},
          {"im", rational_exact_string(c.im())}};
}

GaussianRational gaussian_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw Error("coefficient json must carry re and im strings");
  return {rational_parse(j.at("re").get<std::string>()),
          rational_parse(j.at("im").get<std::string>())};
}

std::string gaussian_pair_string(const GaussianRational& c) {
  return rational_exact_string(c.re()) + "," + rational_exact_string(c.im());
}

GaussianRational gaussian_from_pair_string(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw Error("coefficient pair string lacks a comma: \"" + s + "\"");
  return {rational_parse(s.substr(0, comma)), rational_parse(s.substr(comma + 1))};
}

nlohmann::json element_to_json(const AlgebraElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    nlohmann::json odd = nlohmann::json::array();
    std::uint64_t bits = m.odd;
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      odd.push_back(b + 1);
    }
    terms.push_back({{"monomial", {{"exp", m.exp}, {"odd", odd}}},
                     {"coef", gaussian_to_json(c)}});
  }
  return terms;
}

AlgebraElement element_from_json(const nlohmann::json& j, SignaturePtr sig) {
  if (!j.is_array()) throw Error("element json must be a term list");
  AlgebraElement out = AlgebraElement::zero(sig);
  const std::size_t n_even = sig->commuting().size();
  const std::size_t n_odd = sig->anticommuting().size();
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coef"))
      throw Error("element term needs monomial and coef");
    const auto& mj = term.at("monomial");
    Monomial m;
    m.exp = mj.at("exp").get<std::vector<std::uint32_t>>();
    if (m.exp.size() != n_even)
      throw Error("monomial exponent arity mismatch");
    for (const auto& oj : mj.at("odd")) {
      long pos = oj.get<long>();
      if (pos < 1 || pos > static_cast<long>(n_odd))
        throw Error("odd generator index out of range");
      std::uint64_t bit = std::uint64_t(1) << (pos - 1);
      if (m.odd & bit) throw Error("repeated odd generator index");
      m.odd |= bit;
    }
    GaussianRational c = gaussian_from_json(term.at("coef"));
    if (c.is_zero()) throw Error("element json carries a zero term");
    if (!out.coefficient(m).is_zero())
      throw Error("element json repeats a monomial");
    out = out + AlgebraElement::monomial(sig, std::move(m), std::move(c));
  }
  return out;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", r.suite},
          {"genus", r.genus},
          {"checks", checks},
          {"all_pass", r.all_pass()}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (genus " << r.genus << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (r.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : data) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace qcms
