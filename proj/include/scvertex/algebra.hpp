#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "scvertex/element.hpp"

namespace scv {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SectorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenInfo {
  std::string name;
  bool odd = false;
};

// Generator-level rewrite D^from g = factor * D^to g (the Eq-4.26 style quotient).
struct DRewriteRule {
  int from = 0;
  Scalar factor;
  int to = 0;
};

// A basis element a of U together with the ranks of its field pair and the
// shift parameter t_a attached to the pair.
struct BasisPair {
  std::string base;
  bool base_odd = false;
  std::uint32_t field = 0;  // phi_a
  std::uint32_t dual = 0;   // phibar_a
  ParamId shift = 0;
};

class AlgebraSpec {
 public:
  AlgebraSpec(std::string name, Sector sector, std::string kind = "custom")
      : name_(std::move(name)), sector_(sector), kind_(std::move(kind)) {}
  AlgebraSpec(const AlgebraSpec&) = delete;

  const std::string& name() const { return name_; }
  Sector sector() const { return sector_; }
  const std::string& kind() const { return kind_; }

  std::uint32_t add_generator(const std::string& gname, bool odd);
  void set_bracket(std::uint32_t a, std::uint32_t b, LambdaElement value);
  void add_rewrite(std::uint32_t rank, DRewriteRule rule);
  void add_pair(BasisPair p) { pairs_.push_back(std::move(p)); }

  std::size_t num_generators() const { return gens_.size(); }
  const GenInfo& gen(std::uint32_t rank) const { return gens_.at(rank); }
  std::optional<std::uint32_t> rank_of(const std::string& gname) const;
  const std::vector<BasisPair>& pairs() const { return pairs_; }
  const std::vector<GenInfo>& generators() const { return gens_; }

  const LambdaElement* table_entry(std::uint32_t a, std::uint32_t b) const;

  // Applies D^index (or del) to a derived generator, normalizing the
  // translation word and running quotient rewrites.
  std::vector<std::pair<Scalar, DGen>> apply_op(const DGen& g, TransOp op) const;
  std::vector<std::pair<Scalar, DGen>> reduce_dgen(std::uint32_t rank, std::uint32_t del,
                                                   std::uint8_t dmask, const Scalar& c) const;

  // Construction-time axiom check: generator-level skew-symmetry, Jacobi, and
  // bracket compatibility of the rewrite rules. Throws AlgebraError.
  void validate() const;

  // Caches (bracket / normal product of canonical monomial pairs).
  using MonoPair = std::pair<Monomial, Monomial>;
  std::optional<LambdaElement> cached_bracket(const MonoPair& k) const;
  void store_bracket(const MonoPair& k, const LambdaElement& v) const;
  std::optional<Element> cached_product(const MonoPair& k) const;
  void store_product(const MonoPair& k, const Element& v) const;

 private:
  std::string name_;
  Sector sector_;
  std::string kind_;
  std::vector<GenInfo> gens_;
  std::map<std::string, std::uint32_t> by_name_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, LambdaElement> table_;
  std::map<std::uint32_t, DRewriteRule> rewrites_;
  std::vector<BasisPair> pairs_;

  mutable std::mutex cache_mu_;
  mutable std::map<MonoPair, LambdaElement> bracket_cache_;
  mutable std::map<MonoPair, Element> product_cache_;
};

}  // namespace scv
