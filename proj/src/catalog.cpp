#include "scvertex/catalog.hpp"

#include <algorithm>

namespace scv {

namespace {

LambdaElement const_bracket(const AlgebraSpec* alg, const Scalar& s) {
  LambdaElement v;
  v.add(MixedWord{}, Element::vacuum(alg).scaled(s));
  return v;
}

}  // namespace

// Fill [b_L a] = +-skew([a_L b]) for every pair with only one direction given.
void complete_structure_by_skew(AlgebraSpec* alg) {
  std::size_t n = alg->num_generators();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (alg->table_entry(b, a) || !alg->table_entry(a, b)) continue;
      LambdaElement sub = collapse_words(substitute_skew(*alg->table_entry(a, b), alg->sector()));
      int pa = alg->gen(a).odd ? 1 : 0;
      int pb = alg->gen(b).odd ? 1 : 0;
      int sg = pa * pb + (alg->sector() == Sector::N1 ? 0 : 1);
      alg->set_bracket(b, a, (sg % 2 != 0) ? -sub : sub);
    }
}

namespace {

Element mono(const AlgebraSpec* alg, std::vector<DGen> factors, Scalar c = Scalar(1)) {
  return canonicalize_list(alg, factors, c);
}

std::string suffixed(const std::string& stem, const std::string& copy) {
  return copy.empty() ? stem : stem + "_" + copy;
}

}  // namespace

std::shared_ptr<AlgebraSpec> make_charged_free_fermion(
    const std::vector<std::pair<std::string, bool>>& basis) {
  auto alg = std::make_shared<AlgebraSpec>("F_ch", Sector::N0, "cff");
  for (auto& [base, odd] : basis) {
    // phi_U ~ Pi U and phi^U ~ Pi U*: both fields carry the reversed parity.
    std::uint32_t f = alg->add_generator("phi_" + base, !odd);
    std::uint32_t d = alg->add_generator("phibar_" + base, !odd);
    alg->add_pair(BasisPair{base, odd, f, d, param_intern("t_" + base)});
  }
  for (auto& p : alg->pairs())
    alg->set_bracket(p.field, p.dual, const_bracket(alg.get(), Scalar(1)));
  complete_structure_by_skew(alg.get());
  alg->validate();
  return alg;
}

std::shared_ptr<AlgebraSpec> make_charged_free_fermion(int n_even, int n_odd) {
  std::vector<std::pair<std::string, bool>> basis;
  for (int i = 1; i <= n_even; ++i) basis.emplace_back("e" + std::to_string(i), false);
  for (int i = 1; i <= n_odd; ++i) basis.emplace_back("o" + std::to_string(i), true);
  return make_charged_free_fermion(basis);
}

std::shared_ptr<AlgebraSpec> make_bc_beta_gamma(const std::vector<std::string>& copies) {
  auto alg = std::make_shared<AlgebraSpec>("bc_beta_gamma", Sector::N0, "bc_beta_gamma");
  for (auto& copy : copies) {
    std::uint32_t b = alg->add_generator(suffixed("b", copy), true);
    std::uint32_t c = alg->add_generator(suffixed("c", copy), true);
    std::uint32_t be = alg->add_generator(suffixed("beta", copy), false);
    std::uint32_t ga = alg->add_generator(suffixed("gamma", copy), false);
    alg->set_bracket(b, c, const_bracket(alg.get(), Scalar(1)));
    alg->set_bracket(c, b, const_bracket(alg.get(), Scalar(1)));
    alg->set_bracket(be, ga, const_bracket(alg.get(), Scalar(1)));
    alg->set_bracket(ga, be, const_bracket(alg.get(), Scalar(-1)));
    alg->add_pair(BasisPair{copy, false, b, c, param_intern(suffixed("t", copy.empty() ? "a" : copy))});
  }
  alg->validate();
  return alg;
}

std::shared_ptr<AlgebraSpec> make_susy_charged_free_fermion(
    const std::vector<std::pair<std::string, bool>>& basis) {
  auto alg = std::make_shared<AlgebraSpec>("F_ch_N1", Sector::N1, "susy_cff");
  for (auto& [base, odd] : basis) {
    // phi_U ~ U, phibar_U ~ Pi U*.
    std::uint32_t f = alg->add_generator("phi_" + base, odd);
    std::uint32_t d = alg->add_generator("phibar_" + base, !odd);
    alg->add_pair(BasisPair{base, odd, f, d, param_intern("t_" + base)});
  }
  for (auto& p : alg->pairs())
    alg->set_bracket(p.field, p.dual, const_bracket(alg.get(), Scalar(1)));
  complete_structure_by_skew(alg.get());
  alg->validate();
  return alg;
}

std::shared_ptr<AlgebraSpec> make_n2_bc_beta_gamma(
    const std::vector<std::pair<std::string, bool>>& basis) {
  auto alg = std::make_shared<AlgebraSpec>("bc_beta_gamma_N2", Sector::N2, "n2_bc_beta_gamma");
  for (auto& [base, odd] : basis) {
    std::uint32_t f = alg->add_generator("Phi_" + base, odd);
    std::uint32_t d = alg->add_generator("Phibar_" + base, !odd);
    alg->add_pair(BasisPair{base, odd, f, d, param_intern("t_" + base)});
    alg->add_rewrite(f, DRewriteRule{2, Scalar::imaginary_unit(), 1});
    alg->add_rewrite(d, DRewriteRule{2, Scalar::imaginary_unit(), 1});
  }
  for (auto& p : alg->pairs()) {
    LambdaElement v;
    v.add(word_chi(1), Element::vacuum(alg.get()).scaled(-Scalar::imaginary_unit()));
    v.add(word_chi(2), Element::vacuum(alg.get()));
    alg->set_bracket(p.field, p.dual, v);
  }
  complete_structure_by_skew(alg.get());
  alg->validate();
  return alg;
}

namespace {

Element susy_cff_vector(const AlgebraSpec* alg, const std::string& name) {
  Element out;
  for (auto& p : alg->pairs()) {
    Scalar t = Scalar::param(p.shift);
    DGen f{p.field, 0, 0}, fb{p.dual, 0, 0};
    DGen df{p.field, 1, 0}, dfb{p.dual, 1, 0};
    DGen Df{p.field, 0, 1}, Dfb{p.dual, 0, 1};
    // Coefficients (m1, m2) of del(phi)phibar and phi del(phibar); the odd
    // part of the basis swaps them.
    Scalar m1 = p.base_odd ? t : t + Scalar(1);
    Scalar m2 = p.base_odd ? t + Scalar(1) : t;
    if (name == "T_st") {
      out += p.base_odd ? mono(alg, {f, dfb}) : mono(alg, {df, fb});
      out += mono(alg, {Df, Dfb});
    } else if (name == "T_ghost") {
      out += apply_translation(mono(alg, {f, fb}), TransOp{true, 0}).scaled(t);
    } else if (name == "T_sh") {
      out += mono(alg, {df, fb}, m1) + mono(alg, {f, dfb}, m2) + mono(alg, {Df, Dfb});
    } else if (name == "J_st") {
      out += p.base_odd ? mono(alg, {Dfb, f}) : mono(alg, {Df, fb});
    } else if (name == "J_ghost") {
      if (p.base_odd)
        out += (mono(alg, {Dfb, f}) + mono(alg, {fb, Df})).scaled(t);
      else
        out += (mono(alg, {Df, fb}) + mono(alg, {f, Dfb})).scaled(t);
    } else if (name == "J_sh") {
      if (p.base_odd)
        out += mono(alg, {Dfb, f}, t + Scalar(1)) + mono(alg, {fb, Df}, t);
      else
        out += mono(alg, {Df, fb}, t + Scalar(1)) + mono(alg, {f, Dfb}, t);
    } else if (name == "d") {
      out += mono(alg, {Df, Dfb});
    } else {
      throw AlgebraError("unknown catalog vector for susy_cff: " + name);
    }
  }
  return out;
}

Element bcbg_vector(const AlgebraSpec* alg, const std::string& name) {
  Element out;
  for (auto& p : alg->pairs()) {
    // Block layout per copy: b, c, beta, gamma.
    std::uint32_t rb = p.field, rc = p.dual, rbeta = p.field + 2, rgamma = p.field + 3;
    Scalar t = Scalar::param(p.shift);
    DGen b{rb, 0, 0}, db{rb, 1, 0};
    DGen c{rc, 0, 0}, dc{rc, 1, 0};
    DGen be{rbeta, 0, 0}, dbe{rbeta, 1, 0};
    DGen ga{rgamma, 0, 0}, dga{rgamma, 1, 0};
    Scalar half = Scalar::rational(1, 2);
    if (name == "L_st") {
      out += mono(alg, {c, db}, -half) + mono(alg, {dc, b}, half) + mono(alg, {dga, be});
    } else if (name == "G_st") {
      out += mono(alg, {c, be}) + mono(alg, {dga, b});
    } else if (name == "L_ghost") {
      out += (mono(alg, {c, db}) + mono(alg, {dc, b}) + mono(alg, {ga, dbe}) + mono(alg, {dga, be}))
                 .scaled(t * half);
    } else if (name == "G_ghost") {
      out += (mono(alg, {ga, db}) + mono(alg, {dga, b})).scaled(t);
    } else if (name == "L_sh") {
      out += mono(alg, {c, db}, (t - Scalar(1)) * half) + mono(alg, {dc, b}, (t + Scalar(1)) * half) +
             mono(alg, {ga, dbe}, t * half) + mono(alg, {dga, be}, (t + Scalar(2)) * half);
    } else if (name == "G_sh") {
      out += mono(alg, {ga, db}, t) + mono(alg, {dga, b}, t + Scalar(1)) + mono(alg, {c, be});
    } else if (name == "Gp_sh" || name == "Gp_st") {
      out += mono(alg, {c, be});
    } else if (name == "Gm_sh") {
      out += mono(alg, {dga, b}, t + Scalar(1)) + mono(alg, {ga, db}, t);
    } else if (name == "Gm_st") {
      out += mono(alg, {dga, b});
    } else if (name == "J_st") {
      out += mono(alg, {c, b});
    } else if (name == "J_ghost") {
      out += (mono(alg, {c, b}) + mono(alg, {ga, be})).scaled(t);
    } else if (name == "J_sh") {
      out += mono(alg, {c, b}, t + Scalar(1)) + mono(alg, {ga, be}, t);
    } else {
      throw AlgebraError("unknown catalog vector for bc_beta_gamma: " + name);
    }
  }
  return out;
}

Element cff_vector(const AlgebraSpec* alg, const std::string& name) {
  // Ex 4.1 standard vectors for the osp(1|2) shape: the 1/2 pair sits on the
  // odd root space, the 1 pair on the even one, in that order.
  auto& ps = alg->pairs();
  if (ps.size() != 2 || !ps[0].base_odd || ps[1].base_odd)
    throw AlgebraError("catalog vectors need the osp(1|2) basis shape (odd, even)");
  DGen fh{ps[0].field, 0, 0}, dfh{ps[0].field, 1, 0};
  DGen fhb{ps[0].dual, 0, 0}, dfhb{ps[0].dual, 1, 0};
  DGen dfo{ps[1].field, 1, 0};
  DGen fob{ps[1].dual, 0, 0};
  Scalar half = Scalar::rational(1, 2);
  if (name == "L_st")
    return mono(alg, {fhb, dfh}, -half) + mono(alg, {dfhb, fh}, half) + mono(alg, {dfo, fob});
  if (name == "G_st") return mono(alg, {fhb, fob}) + mono(alg, {dfo, fh});
  throw AlgebraError("unknown catalog vector for cff: " + name);
}

Element n2_vector(const AlgebraSpec* alg, const std::string& name) {
  if (name != "P_sh") throw AlgebraError("unknown catalog vector for n2_bc_beta_gamma: " + name);
  Element out;
  for (auto& p : alg->pairs()) {
    Scalar t = Scalar::param(p.shift);
    DGen f{p.field, 0, 0}, fb{p.dual, 0, 0};
    DGen Df{p.field, 0, 1}, Dfb{p.dual, 0, 1};
    Element part;
    if (p.base_odd)
      part = mono(alg, {Dfb, f}, t + Scalar(1)) + mono(alg, {fb, Df}, t);
    else
      part = mono(alg, {Df, fb}, t + Scalar(1)) + mono(alg, {f, Dfb}, t);
    out += part;
  }
  return out.scaled(-Scalar::imaginary_unit());
}

const std::vector<std::string>& names_for_kind(const std::string& kind) {
  static const std::vector<std::string> susy = {"T_st", "T_ghost", "T_sh", "J_st",
                                                "J_ghost", "J_sh", "d"};
  static const std::vector<std::string> bc = {"L_st", "G_st", "L_ghost", "G_ghost", "L_sh",
                                              "G_sh", "Gp_st", "Gp_sh", "Gm_st", "Gm_sh",
                                              "J_st", "J_ghost", "J_sh"};
  static const std::vector<std::string> cff = {"L_st", "G_st"};
  static const std::vector<std::string> n2 = {"P_sh"};
  static const std::vector<std::string> none;
  if (kind == "susy_cff") return susy;
  if (kind == "bc_beta_gamma") return bc;
  if (kind == "cff") return cff;
  if (kind == "n2_bc_beta_gamma") return n2;
  return none;
}

}  // namespace

Element build_vector(const AlgebraSpec* alg, const std::string& name) {
  const std::string& kind = alg->kind();
  if (kind == "susy_cff") return susy_cff_vector(alg, name);
  if (kind == "bc_beta_gamma") return bcbg_vector(alg, name);
  if (kind == "cff") return cff_vector(alg, name);
  if (kind == "n2_bc_beta_gamma") return n2_vector(alg, name);
  throw AlgebraError("algebra " + alg->name() + " has no vector catalog");
}

std::vector<std::string> catalog_names(const AlgebraSpec* alg) { return names_for_kind(alg->kind()); }

bool catalog_has(const AlgebraSpec* alg, const std::string& name) {
  auto& ns = names_for_kind(alg->kind());
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

std::map<ParamId, Scalar> zero_shift_assignment(const AlgebraSpec* alg) {
  std::map<ParamId, Scalar> m;
  for (auto& p : alg->pairs()) m.emplace(p.shift, Scalar(0));
  return m;
}

}  // namespace scv
