#pragma once

#include <memory>

#include "scvertex/bracket.hpp"

namespace scv {

// Non-SUSY charged free fermion algebra F^ch: one (phi_a, phibar_a) pair per
// basis element, both with the parity of a reversed.
std::shared_ptr<AlgebraSpec> make_charged_free_fermion(
    const std::vector<std::pair<std::string, bool>>& basis);
std::shared_ptr<AlgebraSpec> make_charged_free_fermion(int n_even, int n_odd);

// Non-SUSY bc-beta-gamma system, one (b, c, beta, gamma) block per copy name.
std::shared_ptr<AlgebraSpec> make_bc_beta_gamma(const std::vector<std::string>& copies = {""});

// N_K=1 SUSY charged free fermion algebra.
std::shared_ptr<AlgebraSpec> make_susy_charged_free_fermion(
    const std::vector<std::pair<std::string, bool>>& basis);

// N_K=2 SUSY bc-beta-gamma system with the quotient D^2 Phi = i D^1 Phi.
std::shared_ptr<AlgebraSpec> make_n2_bc_beta_gamma(
    const std::vector<std::pair<std::string, bool>>& basis);

// Distinguished vectors of the paper's algebras, by catalog name.
Element build_vector(const AlgebraSpec* alg, const std::string& name);
std::vector<std::string> catalog_names(const AlgebraSpec* alg);
bool catalog_has(const AlgebraSpec* alg, const std::string& name);

// t_a = 0 for every shift parameter of the algebra.
std::map<ParamId, Scalar> zero_shift_assignment(const AlgebraSpec* alg);

// Derive every missing transposed structure constant through skew-symmetry.
void complete_structure_by_skew(AlgebraSpec* alg);

}  // namespace scv
