#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcartan/io.hpp"

namespace qcartan {

struct SuiteResult {
  std::string suite;
  std::string type;
  bool pass = false;
  std::string detail;  // first counterexample, or summary counts
};

using Rng = std::mt19937_64;

// random orientation + uniform offset
DynkinQuiver random_quiver(const CartanDatum& dt, Rng& rng);
// Q-adapted sequence of the requested length (sources chosen at random)
Word random_adapted_sequence(const DynkinQuiver& q, int len, Rng& rng);
// uniform-ish random compatible reading of (Gamma_Q)_0
std::vector<RepVertex> random_compatible_reading(const DynkinQuiver& q, Rng& rng);
// random Q-adapted reduced word of w_0: sources chosen at random, each index
// capped at its window quota (h + xi_i - xi_{i*})/2
Word random_adapted_w0_word(const DynkinQuiver& q, Rng& rng);

// Per-type verification suites.  Each returns pass/fail with the first
// counterexample in `detail`.
SuiteResult suite_tables(const std::string& type);  // golden tables (7 published types)
SuiteResult suite_closed_formulas(CartanType t);
SuiteResult suite_two_method(CartanType t);                      // series vs eta, degree 4h
SuiteResult suite_quiver_independence(CartanType t, uint64_t seed, int count = 10);
SuiteResult suite_structural(CartanType t, uint64_t seed);       // Cor (i)-(viii), Xi, basic, teta
SuiteResult suite_caln(CartanType t, uint64_t seed, int quivers = 5);
SuiteResult suite_nnkr(CartanType t, uint64_t seed, int quivers = 3);
SuiteResult suite_ya(CartanType t, uint64_t seed, int quivers = 3);
SuiteResult suite_additive(CartanType t, uint64_t seed, int quivers = 5);
SuiteResult suite_bijection(CartanType t, uint64_t seed, int quivers = 3);
SuiteResult suite_b3_worked();
SuiteResult suite_compatible(CartanType t, uint64_t seed, int random_sequences = 100,
                             int max_len = 60);
SuiteResult suite_compatible_word(const CartanDatum& dt, const Word& w);
SuiteResult suite_torus_iso(CartanType t, uint64_t seed, int quivers = 3);
SuiteResult suite_census(CartanType t);
SuiteResult suite_gaup(CartanType t, uint64_t seed, int quivers = 3);
// beta-sequences of random compatible readings enumerate Phi^+ and all land
// in the single class [Q]
SuiteResult suite_readings(CartanType t, uint64_t seed, int count = 100);
// compatibility of random sequences satisfying the subword condition of the
// general conjecture; any counterexample fails the suite and is reported
SuiteResult suite_conjecture(CartanType t, uint64_t seed, int count = 50, int max_len = 24);

// all suites applicable to a type, by name; throws on unknown suite name
std::vector<SuiteResult> run_suite(const std::string& suite, const std::string& type,
                                   uint64_t seed, const std::string& word_spec);
std::vector<std::string> suite_names();

// type lists used by the acceptance criteria
std::vector<CartanType> types_up_to_rank(int max_rank);          // all families
std::vector<CartanType> small_rank_types();                      // rank <= 5 plus F4, G2

}  // namespace qcartan
