#ifndef BELYI_JSON_IO_HPP
#define BELYI_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "belyi/eqsys.hpp"
#include "belyi/model.hpp"
#include "belyi/permutation.hpp"
#include "belyi/solver.hpp"

namespace belyi {

using nlohmann::json;

// permutations as 1-based image arrays
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// triples as {"d":.., "s0":[..], "s1":[..], "sInf":[..]}
json to_json(const PermutationTriple& t);
PermutationTriple triple_from_json(const json& j);

json to_json(const CycleType& c);          // exponential class string
CycleType cycle_type_from_json(const json& j);

json to_json(const Passport& p);

// systems: variables (name, role, nonvanishing) and equations as
// integer-coefficient monomial lists
json to_json(const PolynomialSystem& sys);

// models: field minimal polynomial plus rational coefficient matrices
json to_json(const BelyiMapModel& m);
BelyiMapModel model_from_json(const json& j);

json to_json(const SolveReport& rep);

// tolerant triple parser for CLI input: accepts cycle strings like
// "(1 2),(2 3),(1 3 2)"; a triple whose product fails the identity under the
// left-to-right convention but whose inverses satisfy it (the other printed
// convention) is repaired by inverting all three components.  `repaired` is
// set when that happened.
PermutationTriple parse_triple_cycles(const std::string& s0, const std::string& s1,
                                      const std::string& sInf, int degree, bool* repaired);

// classes string "2^3 1^1 / 3^2 1^1 / 6^1 1^1"
void parse_classes(const std::string& text, CycleType& c0, CycleType& c1, CycleType& cInf);

}  // namespace belyi

#endif
