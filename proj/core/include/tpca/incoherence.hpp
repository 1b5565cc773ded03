#pragma once

#include <cstddef>

#include "tpca/tensor.hpp"
#include "tpca/tsvd.hpp"

namespace tpca {

/// Smallest incoherence parameters for which each block condition holds
/// with equality, given the skinny t-SVD u_p * s_p * v_p^T of the block:
///
///   mu_u  = (n n3 / r) max_i ||u_p^T * e_i||_F^2
///   mu_v  = (n n3 / r) max_j ||v_p^T * e_j||_F^2
///   mu_uv = (n^2 n3^2 / r) ||u_p * v_p^T||_inf^2
///
/// This mu is unrelated to the threshold decay factor of the IBTSVT loop.
struct IncoherenceReport {
  double mu_u = 0.0;
  double mu_v = 0.0;
  double mu_uv = 0.0;
  double mu = 0.0;  // max of the three
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t n3 = 0;
};

/// Throws ShapeMismatch unless l is n x n x n3, ZeroTensor if l has tubal
/// rank zero at rel_tol.
IncoherenceReport incoherence_report(const Tensor3& l, double rel_tol = kDefaultRankTol);

/// True iff incoherence_report(l, rel_tol).mu <= mu_budget.
bool check_conditions(const Tensor3& l, double mu_budget, double rel_tol = kDefaultRankTol);

}  // namespace tpca
