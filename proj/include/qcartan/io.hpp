#pragma once

#include <string>

#include "qcartan/pairs.hpp"

namespace qcartan {

// "3,2,1" | "linear" (xi_i = n - dist(1,i), i.e. n..1 along chains) |
// "sink-source" (xi in {0,1} by bipartition)
Vec parse_heights(const CartanDatum& dt, const std::string& spec);

// comma-separated 1-based indices: "1,2,3,1,2,3,1,2,3"
Word parse_word(const CartanDatum& dt, const std::string& spec);

struct Window {
  long long lo;
  long long hi;
};
Window parse_window(const std::string& spec);  // "lo,hi"

// torus element literals: "q^1*X[1,1] + q^-1*X[1,7]^-1" (q exponents may be
// halves, "q^-3/2")
TorusElement parse_element(const DynkinQuiver& q, const NForm& nf, const std::string& text);

// tables command payloads
std::string tables_json(const TildeBTable& t, int max_u, bool extended);
std::string tables_csv(const TildeBTable& t, int max_u, bool extended);
// round-trip: parse the delta-JSON back into a table
TildeBTable tables_from_json(const std::string& json_text);

// quiver command payloads
std::string quiver_dot(const DynkinQuiver& q, bool repetition, Window w);
std::string quiver_json(const DynkinQuiver& q, bool repetition, Window w);
std::string quiver_text(const DynkinQuiver& q, bool repetition, Window w);

// pair command payload
std::string pair_json(const CartanDatum& dt, const Word& seq);

std::string root_str(const LatticeVec& root);

}  // namespace qcartan
