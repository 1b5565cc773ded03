#include "tpca/incoherence.hpp"

#include <algorithm>
#include <cmath>

#include "tpca/norms.hpp"
#include "tpca/tproduct.hpp"

namespace tpca {
namespace {

// Leading r lateral slices a(:, 0:r, :).
Tensor3 leading_lateral(const Tensor3& a, std::size_t r) {
  Tensor3 out(Shape3{a.n1(), r, a.n3()});
  for (std::size_t k = 0; k < a.n3(); ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < a.n1(); ++i) out(i, j, k) = a(i, j, k);
    }
  }
  return out;
}

double max_basis_leverage(const Tensor3& factor) {
  const std::size_t n = factor.n1();
  const Tensor3 factor_t = conj_transpose(factor);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = norm(tproduct(factor_t, standard_basis(i, n, factor.n3())), NormKind::Fro);
    peak = std::max(peak, f * f);
  }
  return peak;
}

}  // namespace

IncoherenceReport incoherence_report(const Tensor3& l, double rel_tol) {
  if (l.n1() != l.n2()) {
    throw Error(Errc::ShapeMismatch, "incoherence needs an n x n x n3 block, got " + to_string(l.shape()));
  }
  const std::size_t r = tubal_rank(l, rel_tol);
  if (r == 0) throw Error(Errc::ZeroTensor, "block is numerically zero");

  const auto factors = tsvd(l);
  const Tensor3 u = leading_lateral(factors.u, r);
  const Tensor3 v = leading_lateral(factors.v, r);

  IncoherenceReport rep;
  rep.r = r;
  rep.n = l.n1();
  rep.n3 = l.n3();
  const double n = static_cast<double>(rep.n);
  const double n3 = static_cast<double>(rep.n3);
  const double rank = static_cast<double>(r);

  rep.mu_u = n * n3 / rank * max_basis_leverage(u);
  rep.mu_v = n * n3 / rank * max_basis_leverage(v);
  const double joint = norm(tproduct(u, conj_transpose(v)), NormKind::Inf);
  rep.mu_uv = n * n * n3 * n3 * joint * joint / rank;
  rep.mu = std::max({rep.mu_u, rep.mu_v, rep.mu_uv});
  return rep;
}

bool check_conditions(const Tensor3& l, double mu_budget, double rel_tol) {
  return incoherence_report(l, rel_tol).mu <= mu_budget;
}

}  // namespace tpca
