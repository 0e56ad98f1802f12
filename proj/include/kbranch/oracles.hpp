#pragma once

// Brute-force and closed-form cross-checks. Nothing here calls the tableau
// enumerator, the LR routines, or the branching rules; the checking side of
// every identity stays on a separate code path.

#include <map>
#include <vector>

#include "kbranch/count.hpp"
#include "kbranch/partition.hpp"

namespace kbranch::oracles {

// Polynomial in n variables: exponent vector -> nonzero coefficient.
struct MonomialPolynomial {
  int variables = 0;
  std::map<std::vector<int>, Count> terms;

  Count coefficient(const std::vector<int>& exponents) const;
};

// s_lambda(x_1, ..., x_n), built by peeling off the last variable:
// s_lambda(x_1..x_n) = sum over mu interlacing lambda of s_mu(x_1..x_{n-1}) x_n^{|lambda|-|mu|}.
MonomialPolynomial schur_polynomial(const Partition& lambda, int n);

// Decomposition of s_mu * s_nu in n variables into Schur polynomials, found by
// repeatedly stripping the lexicographically leading dominant monomial. Terms
// longer than n vanish, so n >= |mu| + |nu| gives the full product.
// Throws ValidationError when n > 12.
std::map<Partition, Count> schur_product(const Partition& mu, const Partition& nu, int n);

// Coefficient of s_lambda in s_mu * s_nu via schur_product; needs n >= l(lambda).
Count lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

// Weyl dimension of the GL_rank irreducible with integer highest weight.
Count gl_dimension(const std::vector<int>& highest_weight);
Count gl_dimension(const Partition& lambda, int rank);
Count gl_dimension(const GeneralizedPartition& lambda, int rank);

// dim U^lambda for O_k, GL_k or Sp_2k (Weyl dimension formulas for types B, C, D,
// with the O_k irreducible obtained from SO_k as usual).
Count classical_dimension(const GroupType& group, const Label& lambda);

enum class HoweSetting { Symmetric, Mixed, Alternating };

struct GradedDimension {
  Count polynomial_side;
  Count schur_side;
};

// Degree-d dimension of C[SM_n], C[M_{p,q}] or C[AM_n] against the sum of
// GL dimensions over its multiplicity-free decomposition. For Symmetric and
// Alternating, p is n and q is ignored.
GradedDimension howe_graded_dimensions(HoweSetting setting, int p, int q, int d);
bool howe_graded_dimension_check(HoweSetting setting, int p, int q, int d);

// #M^lambda_delta by direct chain enumeration: interlacing chains for O and GL,
// double-strip chains decorated with two-letter LR fillings (found by trying
// every 1/2 assignment) for Sp.
Count chain_oracle(const GroupType& group, const Label& lambda, const std::vector<int>& delta);

}  // namespace kbranch::oracles
