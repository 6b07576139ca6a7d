#pragma once

#include <string>

#include <json.hpp>

#include "scvertex/algebra.hpp"

namespace scv {

enum class Format { Text, Latex, Json };

std::string scalar_text(const Scalar& s);
std::string scalar_latex(const Scalar& s);
nlohmann::json scalar_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

std::string element_text(const Element& e);
std::string element_latex(const Element& e);
nlohmann::json element_json(const Element& e);
Element element_from_json(const AlgebraSpec* alg, const nlohmann::json& j);

std::string lambda_text(const LambdaElement& p);
std::string lambda_latex(const LambdaElement& p);
nlohmann::json lambda_json(const LambdaElement& p);
LambdaElement lambda_from_json(const AlgebraSpec* alg, const nlohmann::json& j);

std::string dgen_text(const AlgebraSpec* alg, const DGen& g);

}  // namespace scv
