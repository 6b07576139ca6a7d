#include "scvertex/algebra.hpp"

#include <bit>

#include "scvertex/bracket.hpp"

namespace scv {

std::uint32_t AlgebraSpec::add_generator(const std::string& gname, bool odd) {
  if (by_name_.count(gname)) throw AlgebraError("duplicate generator name: " + gname);
  std::uint32_t rank = static_cast<std::uint32_t>(gens_.size());
  gens_.push_back(GenInfo{gname, odd});
  by_name_.emplace(gname, rank);
  return rank;
}

void AlgebraSpec::set_bracket(std::uint32_t a, std::uint32_t b, LambdaElement value) {
  table_[{a, b}] = std::move(value);
}

void AlgebraSpec::add_rewrite(std::uint32_t rank, DRewriteRule rule) {
  if (rule.to >= rule.from) throw AlgebraError("rewrite must eliminate the higher derivation");
  rewrites_[rank] = std::move(rule);
}

std::optional<std::uint32_t> AlgebraSpec::rank_of(const std::string& gname) const {
  auto it = by_name_.find(gname);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const LambdaElement* AlgebraSpec::table_entry(std::uint32_t a, std::uint32_t b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Scalar, DGen>> AlgebraSpec::reduce_dgen(std::uint32_t rank,
                                                              std::uint32_t del,
                                                              std::uint8_t dmask,
                                                              const Scalar& c) const {
  auto rit = rewrites_.find(rank);
  if (rit == rewrites_.end() || !(dmask & (1u << (rit->second.from - 1))))
    return {{c, DGen{rank, del, dmask}}};
  const DRewriteRule& rule = rit->second;
  // The innermost operator is the highest-index D; the rule fires only there.
  int highest = std::bit_width(dmask);
  if (highest != rule.from) return {{c, DGen{rank, del, dmask}}};
  MixedWord w;
  w.del = del;
  w.dd = static_cast<std::uint8_t>(dmask & ~(1u << (rule.from - 1)));
  std::vector<std::pair<Scalar, DGen>> out;
  for (auto& [w2, k] : word_mul(w, word_dop(rule.to), sector_)) {
    for (auto& r : reduce_dgen(rank, w2.del, w2.dd, c * rule.factor * Scalar(k)))
      out.push_back(r);
  }
  return out;
}

std::vector<std::pair<Scalar, DGen>> AlgebraSpec::apply_op(const DGen& g, TransOp op) const {
  MixedWord hw;
  hw.del = g.del;
  hw.dd = g.dmask;
  MixedWord opw = op.is_del ? word_del(1) : word_dop(op.index);
  std::vector<std::pair<Scalar, DGen>> out;
  for (auto& [w, k] : word_mul(opw, hw, sector_))
    for (auto& r : reduce_dgen(g.rank, w.del, w.dd, Scalar(k)))
      out.push_back(r);
  return out;
}

void AlgebraSpec::validate() const {
  std::size_t n = gens_.size();
  std::vector<Element> gen_elems;
  for (std::uint32_t r = 0; r < n; ++r) gen_elems.push_back(Element::generator(this, r));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (!check_skew(gen_elems[a], gen_elems[b]))
        throw AlgebraError(name_ + ": structure constants violate skew-symmetry on (" +
                           gens_[a].name + ", " + gens_[b].name + ")");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (!check_jacobi(gen_elems[a], gen_elems[b], gen_elems[c]))
          throw AlgebraError(name_ + ": structure constants violate the Jacobi identity");
  // Rewrite rules must preserve brackets on generators: the sesquilinearity
  // route for [D^from g _L g_b] has to agree with the rewritten argument.
  if (!rewrites_.empty() && sector_ == Sector::N0)
    throw AlgebraError("rewrites need a SUSY sector");
  for (auto& [rank, rule] : rewrites_) {
    Element g = Element::generator(this, rank);
    Element rewritten = apply_translation(g, TransOp{false, rule.from});
    for (std::uint32_t b = 0; b < n; ++b) {
      LambdaElement via_sesqui =
          word_lmul(word_chi(rule.from), bracket(g, gen_elems[b]), sector_);
      if (sector_ == Sector::N2) via_sesqui = -via_sesqui;
      LambdaElement via_rewrite = bracket(rewritten, gen_elems[b]);
      if (via_sesqui != via_rewrite)
        throw AlgebraError(name_ + ": rewrite rule breaks brackets on " + gens_.at(rank).name);
    }
  }
}

std::optional<LambdaElement> AlgebraSpec::cached_bracket(const MonoPair& k) const {
  std::lock_guard lock(cache_mu_);
  auto it = bracket_cache_.find(k);
  if (it == bracket_cache_.end()) return std::nullopt;
  return it->second;
}

void AlgebraSpec::store_bracket(const MonoPair& k, const LambdaElement& v) const {
  std::lock_guard lock(cache_mu_);
  bracket_cache_.emplace(k, v);
}

std::optional<Element> AlgebraSpec::cached_product(const MonoPair& k) const {
  std::lock_guard lock(cache_mu_);
  auto it = product_cache_.find(k);
  if (it == product_cache_.end()) return std::nullopt;
  return it->second;
}

void AlgebraSpec::store_product(const MonoPair& k, const Element& v) const {
  std::lock_guard lock(cache_mu_);
  product_cache_.emplace(k, v);
}

}  // namespace scv
