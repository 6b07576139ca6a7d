#pragma once

#include "scvertex/algebra.hpp"

namespace scv {

enum class Family { Lambda, Gamma, LambdaPlusGamma };

// The Lambda-bracket [a_Lambda b], fully canonical (words in lambda/chi only).
LambdaElement bracket(const Element& a, const Element& b, Family fam = Family::Lambda);

// Bracket with a word-carrying left argument: words are pulled out with the
// Koszul sign against the bracket's intrinsic parity.
LambdaElement vp_bracket_left(const LambdaElement& x, const Element& c, Family fam);
// ... and right argument: words cross the bracket symbol and the left slot.
LambdaElement vp_bracket_right(const Element& a, const LambdaElement& y, Family fam);

// a_(j|mask) v, extracted with the sector's sign convention.
Element mode_action(const Element& a, unsigned j, std::uint8_t chi_mask, const Element& v);

// Quasi-commutativity / quasi-associativity correction integrals.
// qc: the value of the integral of [f Lambda g] from -nabla to 0.
Element qc_integral(const AlgebraSpec* alg, const LambdaElement& br);
// qa: (integral_0^nabla dLambda x)[...] against an already computed bracket.
Element qa_int_term(const AlgebraSpec* alg, const Element& x, const LambdaElement& br);

// Axiom checks (exact).
bool check_skew(const Element& a, const Element& b);
bool check_jacobi(const Element& a, const Element& b, const Element& c);

}  // namespace scv
