#pragma once

#include <set>
#include <variant>

#include "scvertex/brst.hpp"
#include "scvertex/expr.hpp"
#include "scvertex/reduce.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

namespace scv {

using Value = std::variant<Scalar, Element, LambdaElement>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  std::string command;
  bool ok = true;
  std::string text;
  nlohmann::json json;
};

nlohmann::json algebra_to_json(const AlgebraSpec* alg);
std::shared_ptr<AlgebraSpec> algebra_from_json(const nlohmann::json& j);

class Session {
 public:
  std::string format = "text";  // text | latex | json
  std::uint64_t seed = 0x5c7e57;
  int jobs = 1;

  void set_param(const std::string& name, const GaussRat& value);
  void load_algebra_file(const std::string& path);

  std::vector<CommandResult> run_text(const std::string& text);
  std::vector<CommandResult> run_script(const Script& script);
  CommandResult run_statement(const Statement& st);

  Value eval(const ExprPtr& e);
  Element eval_element(const std::string& text);
  const AlgebraSpec* algebra(const std::string& name) const;

  bool any_check_failed() const { return any_failed_; }

  std::string render_value(const Value& v) const;
  nlohmann::json value_json(const Value& v) const;

 private:
  Element as_element(const Value& v, const Span& where) const;
  Scalar as_scalar(const Value& v, const Span& where) const;
  Value apply_overrides(Value v) const;
  const BrstContext& brst_context(const AlgebraSpec* alg);
  const ComponentMap& component_map(const AlgebraSpec* alg);

  std::map<std::string, std::shared_ptr<AlgebraSpec>> algebras_;
  const AlgebraSpec* current_ = nullptr;
  std::map<std::string, Value> lets_;
  std::set<std::string> declared_params_;
  std::map<ParamId, Scalar> overrides_;
  std::map<const AlgebraSpec*, BrstContext> brst_cache_;
  std::map<const AlgebraSpec*, ComponentMap> cmap_cache_;
  bool any_failed_ = false;
};

}  // namespace scv
