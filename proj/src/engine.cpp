#include "scvertex/engine.hpp"

#include <fstream>

#include "scvertex/catalog.hpp"
#include "scvertex/suite.hpp"

namespace scv {

namespace {

bool is_derivation_name(const std::string& n) {
  return n == "d" || n == "D" || n == "D1" || n == "D2";
}

TransOp derivation_op(const std::string& n) {
  if (n == "d") return TransOp{true, 0};
  if (n == "D" || n == "D1") return TransOp{false, 1};
  return TransOp{false, 2};
}

}  // namespace

nlohmann::json algebra_to_json(const AlgebraSpec* alg) {
  nlohmann::json j;
  j["schema"] = "scvertex-algebra/1";
  j["name"] = alg->name();
  j["sector"] = static_cast<int>(alg->sector());
  j["kind"] = alg->kind();
  nlohmann::json gens = nlohmann::json::array();
  for (auto& g : alg->generators())
    gens.push_back({{"name", g.name}, {"parity", g.odd ? "odd" : "even"}});
  j["generators"] = gens;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto& p : alg->pairs())
    pairs.push_back({{"base", p.base},
                     {"parity", p.base_odd ? "odd" : "even"},
                     {"field", alg->gen(p.field).name},
                     {"dual", alg->gen(p.dual).name}});
  j["pairs"] = pairs;
  nlohmann::json brs = nlohmann::json::array();
  for (std::uint32_t a = 0; a < alg->num_generators(); ++a)
    for (std::uint32_t b = 0; b < alg->num_generators(); ++b)
      if (const LambdaElement* v = alg->table_entry(a, b))
        brs.push_back({{"left", alg->gen(a).name},
                       {"right", alg->gen(b).name},
                       {"value", lambda_json(*v)}});
  j["brackets"] = brs;
  return j;
}

std::shared_ptr<AlgebraSpec> algebra_from_json(const nlohmann::json& j) {
  Sector s = static_cast<Sector>(j.at("sector").get<int>());
  auto alg = std::make_shared<AlgebraSpec>(j.value("name", "custom"), s, j.value("kind", "custom"));
  for (auto& g : j.at("generators"))
    alg->add_generator(g.at("name").get<std::string>(), g.at("parity").get<std::string>() == "odd");
  if (j.contains("pairs"))
    for (auto& p : j.at("pairs")) {
      BasisPair bp;
      bp.base = p.at("base").get<std::string>();
      bp.base_odd = p.at("parity").get<std::string>() == "odd";
      bp.field = *alg->rank_of(p.at("field").get<std::string>());
      bp.dual = *alg->rank_of(p.at("dual").get<std::string>());
      bp.shift = param_intern("t_" + bp.base);
      alg->add_pair(bp);
    }
  for (auto& b : j.at("brackets")) {
    auto l = alg->rank_of(b.at("left").get<std::string>());
    auto r = alg->rank_of(b.at("right").get<std::string>());
    if (!l || !r) throw AlgebraError("bracket entry names an unknown generator");
    alg->set_bracket(*l, *r, lambda_from_json(alg.get(), b.at("value")));
  }
  if (j.contains("rewrites"))
    for (auto& rw : j.at("rewrites")) {
      auto g = alg->rank_of(rw.at("gen").get<std::string>());
      if (!g) throw AlgebraError("rewrite entry names an unknown generator");
      alg->add_rewrite(*g, DRewriteRule{rw.at("from").get<int>(),
                                        scalar_from_json(rw.at("factor")), rw.at("to").get<int>()});
    }
  complete_structure_by_skew(alg.get());
  alg->validate();
  return alg;
}

void Session::set_param(const std::string& name, const GaussRat& value) {
  overrides_[param_intern(name)] = Scalar(value);
}

void Session::load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open algebra file: " + path);
  nlohmann::json j;
  in >> j;
  auto alg = algebra_from_json(j);
  current_ = alg.get();
  algebras_[alg->name()] = std::move(alg);
}

const AlgebraSpec* Session::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  return it == algebras_.end() ? nullptr : it->second.get();
}

Element Session::as_element(const Value& v, const Span& where) const {
  if (std::holds_alternative<Element>(v)) return std::get<Element>(v);
  if (std::holds_alternative<Scalar>(v)) {
    if (!current_) throw ParseError("scalar used as a field with no algebra in scope", where.line,
                                    where.col);
    return Element::vacuum(current_).scaled(std::get<Scalar>(v));
  }
  throw ParseError("expected a field-valued expression", where.line, where.col);
}

Scalar Session::as_scalar(const Value& v, const Span& where) const {
  if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v);
  throw ParseError("expected a scalar expression", where.line, where.col);
}

Value Session::apply_overrides(Value v) const {
  if (overrides_.empty()) return v;
  if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v).substitute(overrides_);
  if (std::holds_alternative<Element>(v)) return std::get<Element>(v).substitute_params(overrides_);
  LambdaElement out;
  for (auto& [w, e] : std::get<LambdaElement>(v).terms())
    out.add(w, e.substitute_params(overrides_));
  return out;
}

const BrstContext& Session::brst_context(const AlgebraSpec* alg) {
  auto it = brst_cache_.find(alg);
  if (it == brst_cache_.end()) it = brst_cache_.emplace(alg, make_brst_context(alg)).first;
  return it->second;
}

const ComponentMap& Session::component_map(const AlgebraSpec* alg) {
  auto it = cmap_cache_.find(alg);
  if (it == cmap_cache_.end()) it = cmap_cache_.emplace(alg, make_component_map(alg)).first;
  return it->second;
}

Value Session::eval(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Number:
      return Scalar(GaussRat::rational(e->num, e->den));
    case Expr::Kind::Imaginary:
      return Scalar::imaginary_unit();
    case Expr::Kind::Ident: {
      auto let = lets_.find(e->name);
      if (let != lets_.end()) return let->second;
      if (current_) {
        if (auto rank = current_->rank_of(e->name)) return Element::generator(current_, *rank);
      }
      for (auto& [an, alg] : algebras_)
        if (auto rank = alg->rank_of(e->name)) return Element::generator(alg.get(), *rank);
      if (declared_params_.count(e->name)) return Scalar::param(e->name);
      ParamId pid;
      if (param_lookup(e->name, pid)) return Scalar::param(pid);  // t_a shift parameters
      throw ParseError("unknown identifier '" + e->name + "'", e->span.line, e->span.col);
    }
    case Expr::Kind::Call: {
      if (is_derivation_name(e->name)) {
        if (e->args.size() != 1)
          throw ParseError(e->name + "() takes one argument", e->span.line, e->span.col);
        Element arg = as_element(eval(e->args[0]), e->span);
        if (!arg.algebra()) return arg;
        TransOp op = derivation_op(e->name);
        if (!op.is_del && op.index > odd_var_count(arg.algebra()->sector()))
          throw ParseError("derivation " + e->name + " is not available in this sector",
                           e->span.line, e->span.col);
        return apply_translation(arg, op);
      }
      if (e->name == "subst") {
        Value base = eval(e->args[0]);
        std::map<ParamId, Scalar> sub;
        for (auto& [pname, pexpr] : e->kwargs)
          sub[param_intern(pname)] = as_scalar(eval(pexpr), e->span);
        if (std::holds_alternative<Scalar>(base)) return std::get<Scalar>(base).substitute(sub);
        if (std::holds_alternative<Element>(base))
          return std::get<Element>(base).substitute_params(sub);
        LambdaElement out;
        for (auto& [w, el] : std::get<LambdaElement>(base).terms())
          out.add(w, el.substitute_params(sub));
        return out;
      }
      // catalog builder: NAME(algebra)
      if (e->args.size() == 1 && e->args[0]->kind == Expr::Kind::Ident) {
        const AlgebraSpec* alg = algebra(e->args[0]->name);
        if (alg) {
          if (!catalog_has(alg, e->name))
            throw ParseError("algebra " + alg->name() + " has no catalog vector '" + e->name + "'",
                             e->span.line, e->span.col);
          return build_vector(alg, e->name);
        }
      }
      throw ParseError("unknown function '" + e->name + "'", e->span.line, e->span.col);
    }
    case Expr::Kind::Neg: {
      Value v = eval(e->args[0]);
      if (std::holds_alternative<Scalar>(v)) return -std::get<Scalar>(v);
      if (std::holds_alternative<Element>(v)) return -std::get<Element>(v);
      return -std::get<LambdaElement>(v);
    }
    case Expr::Kind::Sum: {
      // Promote to the widest type present.
      std::vector<Value> parts;
      for (auto& a : e->args) parts.push_back(eval(a));
      bool any_lam = false, any_elem = false;
      for (auto& p : parts) {
        any_lam |= std::holds_alternative<LambdaElement>(p);
        any_elem |= std::holds_alternative<Element>(p);
      }
      if (any_lam) {
        LambdaElement acc;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          LambdaElement term;
          if (std::holds_alternative<LambdaElement>(parts[k]))
            term = std::get<LambdaElement>(parts[k]);
          else
            term.add(MixedWord{}, as_element(parts[k], e->span));
          acc += e->signs[k] < 0 ? -term : term;
        }
        return acc;
      }
      if (any_elem) {
        Element acc;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          Element term = as_element(parts[k], e->span);
          acc += e->signs[k] < 0 ? -term : term;
        }
        return acc;
      }
      Scalar acc;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        Scalar term = as_scalar(parts[k], e->span);
        acc += e->signs[k] < 0 ? -term : term;
      }
      return acc;
    }
    case Expr::Kind::Product: {
      Scalar coeff(1);
      std::optional<Element> elem;
      std::optional<LambdaElement> lam;
      for (auto& a : e->args) {
        Value v = eval(a);
        if (std::holds_alternative<Scalar>(v)) {
          coeff = coeff * std::get<Scalar>(v);
        } else if (std::holds_alternative<Element>(v)) {
          if (elem || lam)
            throw ParseError("use :a b: for products of fields", e->span.line, e->span.col);
          elem = std::get<Element>(v);
        } else {
          if (elem || lam)
            throw ParseError("cannot multiply bracket values", e->span.line, e->span.col);
          lam = std::get<LambdaElement>(v);
        }
      }
      if (lam) return lambda_scaled(*lam, coeff);
      if (elem) return elem->scaled(coeff);
      return coeff;
    }
    case Expr::Kind::NormalOrder: {
      std::vector<Element> factors;
      for (auto& a : e->args) factors.push_back(as_element(eval(a), e->span));
      Element acc = factors.back();
      for (std::size_t k = factors.size() - 1; k-- > 0;) acc = normal_product(factors[k], acc);
      return acc;
    }
    case Expr::Kind::BracketOp: {
      Element a = as_element(eval(e->args[0]), e->span);
      Element b = as_element(eval(e->args[1]), e->span);
      return bracket(a, b);
    }
  }
  throw EvalError("unreachable expression kind");
}

Element Session::eval_element(const std::string& text) {
  return as_element(apply_overrides(eval(parse_expression(text))), Span{});
}

std::string Session::render_value(const Value& v) const {
  if (format == "latex") {
    if (std::holds_alternative<Scalar>(v)) return scalar_latex(std::get<Scalar>(v));
    if (std::holds_alternative<Element>(v)) return element_latex(std::get<Element>(v));
    return lambda_latex(std::get<LambdaElement>(v));
  }
  if (format == "json") return value_json(v).dump();
  if (std::holds_alternative<Scalar>(v)) return scalar_text(std::get<Scalar>(v));
  if (std::holds_alternative<Element>(v)) return element_text(std::get<Element>(v));
  return lambda_text(std::get<LambdaElement>(v));
}

nlohmann::json Session::value_json(const Value& v) const {
  nlohmann::json j;
  if (std::holds_alternative<Scalar>(v)) {
    j["type"] = "scalar";
    j["value"] = scalar_json(std::get<Scalar>(v));
  } else if (std::holds_alternative<Element>(v)) {
    j["type"] = "element";
    const Element& e = std::get<Element>(v);
    j["value"] = element_json(e);
    if (e.algebra()) j["algebra"] = e.algebra()->name();
  } else {
    j["type"] = "lambda";
    j["value"] = lambda_json(std::get<LambdaElement>(v));
  }
  return j;
}

std::vector<CommandResult> Session::run_text(const std::string& text) {
  return run_script(parse_script(text));
}

std::vector<CommandResult> Session::run_script(const Script& script) {
  std::vector<CommandResult> out;
  for (auto& st : script.statements) {
    CommandResult r = run_statement(st);
    if (!r.command.empty()) out.push_back(std::move(r));
  }
  return out;
}

CommandResult Session::run_statement(const Statement& st) {
  CommandResult res;
  switch (st.kind) {
    case Statement::Kind::Algebra: {
      std::shared_ptr<AlgebraSpec> alg;
      if (st.ctor == "susy_cff") alg = make_susy_charged_free_fermion(st.basis);
      else if (st.ctor == "cff") alg = make_charged_free_fermion(st.basis);
      else if (st.ctor == "n2_bc_beta_gamma") alg = make_n2_bc_beta_gamma(st.basis);
      else if (st.ctor == "bc_beta_gamma")
        alg = make_bc_beta_gamma(st.copies.empty() ? std::vector<std::string>{""} : st.copies);
      else if (st.ctor == "load") {
        load_algebra_file(st.path);
        algebras_[st.name] = algebras_.at(current_->name());
        return res;
      }
      current_ = alg.get();
      algebras_[st.name] = std::move(alg);
      return res;
    }
    case Statement::Kind::Param:
      for (auto& p : st.params) declared_params_.insert(p);
      return res;
    case Statement::Kind::Let:
      lets_[st.name] = apply_overrides(eval(st.value));
      return res;
    case Statement::Kind::Command:
      break;
  }

  res.command = st.name;
  std::vector<Value> args;
  for (auto& a : st.args) args.push_back(apply_overrides(eval(a)));
  auto elem_arg = [&](std::size_t k) { return as_element(args.at(k), st.span); };
  nlohmann::json& j = res.json;
  j["command"] = st.name;

  auto finish_check = [&](const CheckResult& cr) {
    res.ok = cr.ok;
    if (!cr.ok) any_failed_ = true;
    j.update(cr.to_json());
    res.text = std::string(cr.ok ? "ok" : "FAILED") + "  c = " + scalar_text(cr.central_charge);
  };

  if (st.name == "bracket") {
    Value v = bracket(elem_arg(0), elem_arg(1));
    res.text = render_value(v);
    j.update(value_json(v));
  } else if (st.name == "normalize" || st.name == "render") {
    res.text = render_value(args.at(0));
    j.update(value_json(args.at(0)));
  } else if (st.name == "weight") {
    WeightReport w = conformal_weight(elem_arg(0), elem_arg(1));
    j["eigenvector"] = w.eigenvector;
    if (w.eigenvector) {
      j["delta"] = scalar_text(w.delta);
      j["primary"] = w.primary;
      j["residual"] = lambda_text(w.residual);
      res.text = "delta = " + scalar_text(w.delta) + (w.primary ? ", primary" : ", not primary");
    } else {
      res.ok = false;
      any_failed_ = true;
      j["witness"] = w.witness;
      res.text = "not an eigenvector";
    }
  } else if (st.name == "charge") {
    Element v = elem_arg(0);
    ChargeReport c = charge_of(brst_context(v.algebra()), v);
    j["eigenvector"] = c.eigenvector;
    if (c.eigenvector) {
      j["charge"] = scalar_text(c.charge);
      res.text = scalar_text(c.charge);
    } else {
      res.ok = false;
      any_failed_ = true;
      j["witness"] = element_text(c.image);
      res.text = "not a charge eigenvector";
    }
  } else if (st.name == "brst" || st.name == "homotopy") {
    Element v = elem_arg(0);
    const BrstContext& ctx = brst_context(v.algebra());
    Element out = st.name == "brst" ? brst_q(ctx, v) : homotopy_h(ctx, v);
    res.text = render_value(out);
    j.update(value_json(out));
  } else if (st.name == "components") {
    Element v = elem_arg(0);
    if (!v.algebra()) throw EvalError("components of the zero element");
    ComponentPair p;
    if (v.algebra()->sector() == Sector::N1) {
      p = components_nk1(v, component_map(v.algebra()));
    } else if (v.algebra()->sector() == Sector::N2) {
      // reduction target cached per algebra through a static-ish map
      static std::map<const AlgebraSpec*, Nk2Reduction> reds;
      auto it = reds.find(v.algebra());
      if (it == reds.end()) it = reds.emplace(v.algebra(), make_nk2_reduction(v.algebra())).first;
      p = components_nk2(v, it->second);
    } else {
      throw EvalError("components needs a SUSY sector");
    }
    j["body"] = element_text(p.body);
    j["slope"] = element_text(p.slope);
    res.text = "body = " + element_text(p.body) + "\nslope = " + element_text(p.slope);
  } else if (st.name == "verify-virasoro") {
    finish_check(check_virasoro(elem_arg(0)));
  } else if (st.name == "verify-n1") {
    finish_check(check_n1_pair(elem_arg(0), elem_arg(1)));
  } else if (st.name == "verify-n2") {
    finish_check(check_n2_component(elem_arg(0), elem_arg(1), elem_arg(2), elem_arg(3)));
  } else if (st.name == "verify-sconf") {
    finish_check(check_susy_superconformal(elem_arg(0), seed));
  } else if (st.name == "verify-nk2") {
    finish_check(check_nk2_superconformal(elem_arg(0)));
  } else if (st.name == "constraints") {
    Element T = elem_arg(0);
    // split T = sum m_i * monomial_i over the listed unknowns
    std::vector<Element> monomials;
    for (auto& uname : st.with_names) {
      std::map<ParamId, Scalar> pick;
      for (auto& other : st.with_names)
        pick[param_intern(other)] = Scalar(other == uname ? 1 : 0);
      monomials.push_back(T.substitute_params(pick));
    }
    ConstraintSystem sys = ansatz_constraints(monomials, st.with_names);
    nlohmann::json eqs = nlohmann::json::array();
    for (auto& eq : sys.equations) {
      nlohmann::json je;
      je["monomial"] = element_text(Element::from_monomial(T.algebra(), eq.mono));
      nlohmann::json w;
      w["lam"] = eq.word.lam;
      w["chi"] = eq.word.chi;
      je["word"] = w;
      je["residual"] = scalar_text(eq.residual);
      eqs.push_back(je);
    }
    j["equations"] = eqs;
    j["unknowns"] = st.with_names;
    j["charge_unknown"] = param_name(sys.charge_unknown);
    res.text = std::to_string(sys.equations.size()) + " equations in " +
               std::to_string(st.with_names.size()) + " unknowns (+" +
               param_name(sys.charge_unknown) + ")";
  } else if (st.name == "suite") {
    if (st.suite != "paper") throw EvalError("unknown suite: " + st.suite);
    auto lines = run_paper_suite(seed, jobs);
    nlohmann::json jl = nlohmann::json::array();
    std::string text;
    bool ok = true;
    for (auto& ln : lines) {
      ok = ok && ln.ok;
      text += (ln.ok ? "PASS  " : "FAIL  ") + ln.name +
              (ln.detail.empty() ? "" : "  [" + ln.detail + "]") + "\n";
      jl.push_back({{"name", ln.name}, {"ok", ln.ok}, {"detail", ln.detail}});
    }
    res.ok = ok;
    if (!ok) any_failed_ = true;
    res.text = text;
    j["results"] = jl;
    j["status"] = ok ? "ok" : "failed";
  } else {
    throw EvalError("unhandled command: " + st.name);
  }
  return res;
}

}  // namespace scv
