#pragma once

// Text in the expression grammar (parseable back), and JSON.

#include <string>

#include "json.hpp"

#include "tg/berezin.hpp"
#include "tg/mixed.hpp"
#include "tg/states.hpp"

namespace tg {

std::string to_string(const Rational& r);
std::string to_string(const CycScalar& x);
std::string to_string(const GeneratorSym& s);
std::string to_string(const DifferentialSym& s);
std::string to_string(const OpSym& s);
std::string to_string(const GWord& w);
std::string to_string(const GElement& e);
std::string to_string(const OpKey& k);
std::string to_string(const OpElement& e);
std::string to_string(const MixedElement& e);
std::string to_string(const StateVec& v);
std::string to_string(const OperatorKet& v);
std::string to_string(const BraVec& v);
std::string to_string(const WeightFunction& w);
std::string to_string(const ExactMatrix& m);
std::string to_string(const ExactVector& v);

nlohmann::json to_json(const CycScalar& x);
nlohmann::json to_json(const GWord& w);
nlohmann::json to_json(const GElement& e);
nlohmann::json to_json(const OpElement& e);
nlohmann::json to_json(const MixedElement& e);
nlohmann::json to_json(const StateVec& v);
nlohmann::json to_json(const OperatorKet& v);
nlohmann::json to_json(const BraVec& v);
nlohmann::json to_json(const WeightFunction& w);
nlohmann::json to_json(const ExactMatrix& m);

// Inverse of to_json(CycScalar).
CycScalar scalar_from_json(const nlohmann::json& j);

}  // namespace tg
