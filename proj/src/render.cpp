#include "scvertex/render.hpp"

#include <sstream>

namespace scv {

namespace {

std::string rat_text(const mpq_class& q) { return q.get_str(); }

bool is_one(const GaussRat& c) { return c.im == 0 && c.re == 1; }
bool is_minus_one(const GaussRat& c) { return c.im == 0 && c.re == -1; }

// Gaussian rational as a product-ready factor: 3/2, i, -i, 2*i, (1+i).
std::string gauss_text(const GaussRat& c) {
  if (c.im == 0) return rat_text(c.re);
  if (c.re == 0) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "-i";
    return rat_text(c.im) + "*i";
  }
  std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : rat_text(c.im) + "*i");
  std::string s = rat_text(c.re);
  if (!im.empty() && im[0] != '-') s += " + " + im;
  else s += " - " + im.substr(1);
  return "(" + s + ")";
}

std::string mono_text(const ParamMono& m) {
  std::string s;
  for (auto& [id, e] : m) {
    if (!s.empty()) s += "*";
    s += param_name(id);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// One scalar term as a factor string (no leading sign handling).
std::string scalar_term_text(const ParamMono& m, const GaussRat& c) {
  std::string ms = mono_text(m);
  if (ms.empty()) return gauss_text(c);
  if (is_one(c)) return ms;
  if (is_minus_one(c)) return "-" + ms;
  return gauss_text(c) + "*" + ms;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
    return;
  }
  if (!term.empty() && term[0] == '-')
    out += " - " + term.substr(1);
  else
    out += " + " + term;
}

std::string latex_name(const std::string& name) {
  auto sub = [](const std::string& stem, const std::string& idx) {
    return idx.empty() ? stem : stem + "_{" + idx + "}";
  };
  auto split = [](const std::string& n, const std::string& prefix) {
    return n.substr(prefix.size());
  };
  if (name.rfind("phibar_", 0) == 0) return "\\phi^{\\bar{" + split(name, "phibar_") + "}}";
  if (name.rfind("phi_", 0) == 0) return "\\phi_{" + split(name, "phi_") + "}";
  if (name.rfind("Phibar_", 0) == 0) return "\\Phi^{\\bar{" + split(name, "Phibar_") + "}}";
  if (name.rfind("Phi_", 0) == 0) return "\\Phi_{" + split(name, "Phi_") + "}";
  if (name.rfind("beta", 0) == 0) return sub("\\beta", name.size() > 5 ? name.substr(5) : "");
  if (name.rfind("gamma", 0) == 0) return sub("\\gamma", name.size() > 6 ? name.substr(6) : "");
  if (name.rfind("t_", 0) == 0) return sub("t", split(name, "t_"));
  std::size_t us = name.find('_');
  if (us != std::string::npos) return sub(name.substr(0, us), name.substr(us + 1));
  return name;
}

std::string gauss_latex(const GaussRat& c) {
  auto frac = [](const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string num = q.get_num().get_str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num = num.substr(1);
    return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + q.get_den().get_str() + "}";
  };
  if (c.im == 0) return frac(c.re);
  if (c.re == 0) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "-i";
    return frac(c.im) + "i";
  }
  std::string s = frac(c.re);
  std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : frac(c.im) + "i");
  if (im[0] != '-') s += "+" + im;
  else s += im;
  return "\\left(" + s + "\\right)";
}

}  // namespace

std::string scalar_text(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : s.terms()) append_term(out, scalar_term_text(m, c));
  return out;
}

std::string scalar_latex(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : s.terms()) {
    std::string ms;
    for (auto& [id, e] : m) {
      ms += latex_name(param_name(id));
      if (e > 1) ms += "^{" + std::to_string(e) + "}";
    }
    std::string term;
    if (ms.empty()) term = gauss_latex(c);
    else if (is_one(c)) term = ms;
    else if (is_minus_one(c)) term = "-" + ms;
    else term = gauss_latex(c) + ms;
    append_term(out, term);
  }
  return out;
}

nlohmann::json scalar_json(const Scalar& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [m, c] : s.terms()) {
    nlohmann::json t;
    t["re"] = rat_text(c.re);
    t["im"] = rat_text(c.im);
    nlohmann::json pows = nlohmann::json::object();
    for (auto& [id, e] : m) pows[param_name(id)] = e;
    t["pows"] = pows;
    arr.push_back(t);
  }
  return arr;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  Scalar out;
  for (auto& t : j) {
    GaussRat c(mpq_class(t.at("re").get<std::string>()), mpq_class(t.at("im").get<std::string>()));
    Scalar term(c);
    if (t.contains("pows"))
      for (auto& [name, e] : t.at("pows").items()) {
        Scalar p = Scalar::param(name);
        for (unsigned k = 0; k < e.get<unsigned>(); ++k) term = term * p;
      }
    out += term;
  }
  return out;
}

std::string dgen_text(const AlgebraSpec* alg, const DGen& g) {
  std::string s = alg->gen(g.rank).name;
  for (int i = 2; i >= 1; --i)
    if (g.dmask & (1u << (i - 1)))
      s = (alg->sector() == Sector::N1 ? std::string("D(") : "D" + std::to_string(i) + "(") + s + ")";
  for (std::uint32_t k = 0; k < g.del; ++k) s = "d(" + s + ")";
  return s;
}

namespace {

std::string monomial_text(const AlgebraSpec* alg, const Monomial& m) {
  if (m.empty()) return "1";
  if (m.size() == 1) return dgen_text(alg, m[0]);
  std::string s = ":";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += " ";
    s += dgen_text(alg, m[i]);
  }
  return s + ":";
}

std::string dgen_latex(const AlgebraSpec* alg, const DGen& g) {
  std::string s = latex_name(alg->gen(g.rank).name);
  for (int i = 2; i >= 1; --i)
    if (g.dmask & (1u << (i - 1)))
      s = (alg->sector() == Sector::N1 ? std::string("D") : "D^{" + std::to_string(i) + "}") + s;
  for (std::uint32_t k = 0; k < g.del; ++k) s = "\\partial " + s;
  return s;
}

std::string coeff_prefix(const Scalar& c, bool* drop) {
  *drop = false;
  if (c.terms().size() == 1) {
    auto& [m, g] = *c.terms().begin();
    if (m.empty() && is_one(g)) {
      *drop = true;
      return "";
    }
    if (m.empty() && is_minus_one(g)) {
      *drop = true;
      return "-";
    }
    return scalar_text(c) + "*";
  }
  return "(" + scalar_text(c) + ")*";
}

}  // namespace

std::string element_text(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : e.terms()) {
    bool drop;
    std::string pre = coeff_prefix(c, &drop);
    std::string body = monomial_text(e.algebra(), m);
    if (m.empty()) {
      append_term(out, drop ? (pre == "-" ? "-1" : "1") : scalar_text(c));
      continue;
    }
    append_term(out, pre + body);
  }
  return out;
}

std::string element_latex(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : e.terms()) {
    std::string body;
    for (std::size_t i = 0; i < m.size(); ++i) body += dgen_latex(e.algebra(), m[i]);
    std::string term;
    if (m.empty()) term = scalar_latex(c);
    else if (c == Scalar(1)) term = body;
    else if (c == Scalar(-1)) term = "-" + body;
    else if (c.terms().size() == 1) term = scalar_latex(c) + body;
    else term = "\\left(" + scalar_latex(c) + "\\right)" + body;
    append_term(out, term);
  }
  return out;
}

nlohmann::json element_json(const Element& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [m, c] : e.terms()) {
    nlohmann::json t;
    t["scalar"] = scalar_json(c);
    nlohmann::json mono = nlohmann::json::array();
    for (auto& g : m) {
      nlohmann::json f;
      f["gen"] = e.algebra()->gen(g.rank).name;
      f["del"] = g.del;
      nlohmann::json ds = nlohmann::json::array();
      for (int i = 1; i <= 2; ++i)
        if (g.dmask & (1u << (i - 1))) ds.push_back(i);
      f["D"] = ds;
      mono.push_back(f);
    }
    t["mono"] = mono;
    arr.push_back(t);
  }
  return arr;
}

Element element_from_json(const AlgebraSpec* alg, const nlohmann::json& j) {
  Element out;
  for (auto& t : j) {
    Scalar c = scalar_from_json(t.at("scalar"));
    std::vector<DGen> factors;
    for (auto& f : t.at("mono")) {
      auto rank = alg->rank_of(f.at("gen").get<std::string>());
      if (!rank) throw AlgebraError("unknown generator in JSON: " + f.at("gen").get<std::string>());
      DGen g{*rank, f.at("del").get<std::uint32_t>(), 0};
      for (auto& i : f.at("D")) g.dmask |= static_cast<std::uint8_t>(1u << (i.get<int>() - 1));
      factors.push_back(g);
    }
    out += canonicalize_list(alg, factors, c);
  }
  return out;
}

namespace {

std::string word_text(const MixedWord& w, Sector s, bool latex) {
  std::string out;
  auto add = [&](const std::string& f) {
    if (!out.empty()) out += latex ? "" : "*";
    out += f;
  };
  auto pow = [&](const std::string& v, std::uint32_t n) {
    if (n == 0) return;
    if (n == 1) add(v);
    else add(latex ? v + "^{" + std::to_string(n) + "}" : v + "^" + std::to_string(n));
  };
  pow(latex ? "\\lambda" : "lam", w.lam);
  for (int i = 1; i <= 2; ++i)
    if (w.chi & (1u << (i - 1)))
      add(latex ? (s == Sector::N1 ? "\\chi" : "\\chi^{" + std::to_string(i) + "}")
                : (s == Sector::N1 ? "chi" : "chi" + std::to_string(i)));
  pow(latex ? "\\gamma" : "gam", w.gam);
  for (int i = 1; i <= 2; ++i)
    if (w.eta & (1u << (i - 1)))
      add(latex ? (s == Sector::N1 ? "\\eta" : "\\eta^{" + std::to_string(i) + "}")
                : (s == Sector::N1 ? "eta" : "eta" + std::to_string(i)));
  pow(latex ? "\\partial" : "del", w.del);
  for (int i = 1; i <= 2; ++i)
    if (w.dd & (1u << (i - 1)))
      add(latex ? (s == Sector::N1 ? "D" : "D^{" + std::to_string(i) + "}")
                : (s == Sector::N1 ? "D" : "D" + std::to_string(i)));
  return out;
}

}  // namespace

std::string lambda_text(const LambdaElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [w, e] : p.terms()) {
    Sector s = e.algebra() ? e.algebra()->sector() : Sector::N0;
    std::string ws = word_text(w, s, false);
    std::string es = element_text(e);
    std::string term;
    if (ws.empty()) {
      term = es;
    } else if (auto vc = e.vacuum_coefficient()) {
      bool drop;
      std::string pre = coeff_prefix(*vc, &drop);
      term = pre + ws;
    } else {
      term = ws + "*(" + es + ")";
    }
    append_term(out, term);
  }
  return out;
}

std::string lambda_latex(const LambdaElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [w, e] : p.terms()) {
    Sector s = e.algebra() ? e.algebra()->sector() : Sector::N0;
    std::string ws = word_text(w, s, true);
    std::string term;
    if (auto vc = e.vacuum_coefficient()) {
      if (*vc == Scalar(1)) term = ws.empty() ? "1" : ws;
      else if (*vc == Scalar(-1)) term = "-" + (ws.empty() ? std::string("1") : ws);
      else if (vc->terms().size() == 1) term = scalar_latex(*vc) + ws;
      else term = "\\left(" + scalar_latex(*vc) + "\\right)" + ws;
    } else {
      term = ws + "\\left(" + element_latex(e) + "\\right)";
    }
    append_term(out, term);
  }
  return out;
}

nlohmann::json lambda_json(const LambdaElement& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [w, e] : p.terms()) {
    nlohmann::json t;
    t["lam"] = w.lam;
    nlohmann::json chis = nlohmann::json::array();
    for (int i = 1; i <= 2; ++i)
      if (w.chi & (1u << (i - 1))) chis.push_back(i);
    t["chi"] = chis;
    if (w.gam) t["gam"] = w.gam;
    if (w.eta) {
      nlohmann::json etas = nlohmann::json::array();
      for (int i = 1; i <= 2; ++i)
        if (w.eta & (1u << (i - 1))) etas.push_back(i);
      t["eta"] = etas;
    }
    t["elem"] = element_json(e);
    arr.push_back(t);
  }
  return arr;
}

LambdaElement lambda_from_json(const AlgebraSpec* alg, const nlohmann::json& j) {
  LambdaElement out;
  for (auto& t : j) {
    MixedWord w;
    w.lam = t.at("lam").get<std::uint32_t>();
    for (auto& i : t.at("chi")) w.chi |= static_cast<std::uint8_t>(1u << (i.get<int>() - 1));
    if (t.contains("gam")) w.gam = t.at("gam").get<std::uint32_t>();
    if (t.contains("eta"))
      for (auto& i : t.at("eta")) w.eta |= static_cast<std::uint8_t>(1u << (i.get<int>() - 1));
    out.add(w, element_from_json(alg, t.at("elem")));
  }
  return out;
}

}  // namespace scv
