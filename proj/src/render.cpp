#include "heckecenter/render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace hecke {

namespace {

std::string int_text(const Int& v) { return v.str(); }

/// One monomial, sign handled by the caller.
std::string monomial_text(const Int& mag, int deg) {
  if (deg == 0) return int_text(mag);
  std::string xs = deg == 1 ? "x" : "x^" + std::to_string(deg);
  if (mag == 1) return xs;
  return int_text(mag) + "*" + xs;
}

Int json_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (or decimal string)");
}

json int_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(static_cast<long long>(v));
  return json(v.str());  // beyond 64 bits: decimal string
}

}  // namespace

std::string to_text(const XiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << monomial_text(abs(c), i);
  }
  return os.str();
}

std::string to_text(const QHalfLaurent& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending exponents, matching the usual way q-expansions are written
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    const auto& [he, c] = *it;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int mag = abs(c);
    if (he == 0) {
      os << int_text(mag);
      continue;
    }
    std::string qs;
    if (he == 2) qs = "q";
    else if (he % 2 == 0) qs = "q^" + std::to_string(he / 2);
    else qs = "q^(" + std::to_string(he) + "/2)";
    os << (mag == 1 ? qs : int_text(mag) + "*" + qs);
  }
  return os.str();
}

std::string to_text(const Permutation& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) os << " ";
    os << w(i);
  }
  return os.str();
}

std::string word_text(const Permutation& w) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int i : w.reduced_word()) {
    if (!first) os << ", ";
    first = false;
    os << i;
  }
  os << "]";
  return os.str();
}

std::string to_text(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c.part(i);
  }
  os << ")";
  return os.str();
}

std::string to_text(const Multipartition& t) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& blk : t.blocks()) {
    if (!first) os << ",";
    first = false;
    os << to_text(static_cast<const Composition&>(blk));
  }
  os << ")";
  return os.str();
}

std::string to_text(const HeckeElement& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "T[" << to_text(w) << "]";
    if (!(c == XiPoly(1))) os << " * (" << to_text(c) << ")";
  }
  return os.str();
}

std::string to_text(const GroupAlgebraElement& h) {
  if (h.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << to_text(w) << "]";
    if (c != 1) os << " * " << int_text(c);
  }
  return os.str();
}

json to_json(const XiPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(int_json(p.coeff(i)));
  return a;
}

json to_json(const Permutation& w) {
  json a = json::array();
  for (int i = 1; i <= w.degree(); ++i) a.push_back(w(i));
  return a;
}

json to_json(const Composition& c) {
  json a = json::array();
  for (int p : c.parts()) a.push_back(p);
  return a;
}

json to_json(const Multipartition& t) {
  json a = json::array();
  for (const auto& blk : t.blocks()) a.push_back(to_json(static_cast<const Composition&>(blk)));
  return a;
}

json to_json(const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.terms())
    terms.push_back(json{{"perm", to_json(w)}, {"coeff", to_json(c)}});
  return json{{"n", h.degree()}, {"terms", std::move(terms)}};
}

json to_json(const CentralExpansion& e) {
  json coeffs = json::array();
  for (const auto& [lam, c] : e.coeffs)
    coeffs.push_back(json{{"lambda", to_json(lam)}, {"coeff", to_json(c)}});
  return json{{"n", e.n}, {"alpha", to_json(e.alpha)}, {"coeffs", std::move(coeffs)}};
}

XiPoly xipoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(json_int(v));
  return XiPoly(std::move(c));
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
  std::vector<int> img;
  img.reserve(j.size());
  for (const auto& v : j) img.push_back(v.get<int>());
  return Permutation::from_images(std::move(img));
}

HeckeElement hecke_element_from_json(const json& j) {
  HeckeElement h(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    h.add_term(permutation_from_json(t.at("perm")), xipoly_from_json(t.at("coeff")));
  return h;
}

Composition parse_composition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition part: '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad composition part: '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty composition");
  return Composition(std::move(parts));
}

}  // namespace hecke
