#pragma once

#include <string>
#include <vector>

#include "adlv/adlv.hpp"
#include "json.hpp"

namespace adlv {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed user input; the CLI maps it to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group specs: {"preset": name, "params": {...}} or an explicit root datum.
RootDatum group_from_json(const Json& j);
Json group_to_json(const RootDatum& d);

// "1,0,-1", "1,0+t1" (torsion after +t), optional surrounding parentheses.
IVec parse_ints(const std::string& s);
// Coordinates in X_*(T)_I; a vector of absolute rank is projected when the ranks differ.
Elem parse_coweight(const Group& g, const std::string& s);
// "s1s3s2", "1" or "" for the identity; "s" alone means s1 in rank one.
Word parse_word(const Group& g, const std::string& s);
// "lambda;word[;levi=1,2]", "basic=lambda" or "kappa=k".
IsoClass parse_b(const Group& g, const std::string& s);
IsoClass isoclass_from_json(const Group& g, const Json& j);

void to_json(Json& j, const Rational& q);
void from_json(const Json& j, Rational& q);
void to_json(Json& j, const Elem& e);
void from_json(const Json& j, Elem& e);

Json to_json(const IsoClass& b);
Json to_json(const BClass& c);
Json to_json(const InvariantReport& r);
Json to_json(const NewtonStratReport& r);
Json to_json(const StratumLabel& l);
Json to_json(const MuMSet& m);
Json to_json(const Assembly& a);
Json to_json(const MinimalI& m);

BClass bclass_from_json(const Json& j);
InvariantReport invariant_report_from_json(const Json& j);
NewtonStratReport stratification_from_json(const Json& j);
StratumLabel stratum_label_from_json(const Json& j);

}  // namespace adlv
