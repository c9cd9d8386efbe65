#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grossen/cmform.hpp"
#include "grossen/survey.hpp"
#include "grossen/valuefield.hpp"

namespace grossen {

using Json = nlohmann::ordered_json;

// Integers are written as decimal strings, rationals as "p/q", ideals as
// [a, b, scale] HNF triples, field elements as [x, y] for x + y omega.
Json to_json(const Int& v);
Json to_json(const Rat& v);
Json to_json(const QuadElem& z);
Json to_json(const QIdeal& I);
Json to_json(const ClassGroup& cg);
Json to_json(const UnitsStructure& S);
Json to_json(const GroupChar& eta);
Json to_json(const ValueAlgebra& A);
Json to_json(const AlgElem& a);
Json to_json(const Complex& z);
Json to_json(const Grossenchar& psi);
Json to_json(const RationalityField& K);
Json to_json(const CMForm& f);
Json to_json(const HeckeReport& r);
Json to_json(const TableRow& row);
Json to_json(const TableEntry& e);
Json to_json(const BoundedSearch& s);
Json to_json(const SurveyResult& s);

QIdeal ideal_from_json(const Json& j);

// Modulus expressions: tokens joined by '*', each optionally raised to ^k.
//   dE          the minimal conductor d_E
//   <n>         n o_E
//   gen:x,y     (x + y omega) o_E
//   hnf:a,b,s   s (aZ + (b + omega)Z)
//   p:<p>[:i]   the i-th prime above p (default 0)
// Throws std::invalid_argument on malformed input or a non-integral result.
QIdeal parse_modulus(const FieldE& E, const std::string& spec);

struct RunConfig {
  std::string command;
  std::string subcommand;
  long delta = 0;
  long ell = 1;
  std::string modulus;
  long order = 0;        // 0: any
  long eta_index = 0;    // position among the enumerated eta
  long bound = 2000;     // coefficient bound B
  long conductor_norm_bound = 10000;
  std::string output;    // empty: stdout
  long precision_bits = 256;
  std::string ideal;     // gross eval argument
};

Json to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

}  // namespace grossen
