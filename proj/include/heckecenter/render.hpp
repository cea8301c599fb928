#pragma once

#include "heckecenter/central.hpp"
#include "heckecenter/combin.hpp"
#include "heckecenter/hecke.hpp"
#include "heckecenter/perm.hpp"
#include "heckecenter/xipoly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace hecke {

using json = nlohmann::json;

// Text renderings are bit-exact across runs: terms in canonical order, "x"
// standing for the indeterminate.

std::string to_text(const XiPoly& p);                  // e.g. "3 + 2*x + x^3"
std::string to_text(const QHalfLaurent& v);            // e.g. "q - 2 + q^-1"
std::string to_text(const Permutation& w);             // e.g. "3 1 2"
std::string word_text(const Permutation& w);           // e.g. "[2, 1]"
std::string to_text(const Composition& c);             // e.g. "(3,2,2,1,1,1)"
std::string to_text(const Multipartition& t);          // e.g. "((2,1),(3,1,1),(2))"
std::string to_text(const HeckeElement& h);            // e.g. "T[1 3 2] * (1 + x^2)"
std::string to_text(const GroupAlgebraElement& h);

json to_json(const XiPoly& p);         // coefficient array [c0, c1, ...]
json to_json(const Permutation& w);    // one-line integer array
json to_json(const Composition& c);
json to_json(const Multipartition& t);
json to_json(const HeckeElement& h);   // {"n":..., "terms":[{"perm":[...],"coeff":[...]},...]}
json to_json(const CentralExpansion& e);

XiPoly xipoly_from_json(const json& j);
Permutation permutation_from_json(const json& j);
HeckeElement hecke_element_from_json(const json& j);

/// Parse "3,2,1" into a composition.
Composition parse_composition(const std::string& s);

}  // namespace hecke
