#include "spectral.hpp"

#include <cmath>

#include "tpca/error.hpp"

namespace tpca::detail {
namespace {

unsigned int svd_options(SvdVectors vectors) {
  switch (vectors) {
    case SvdVectors::None: return 0;
    case SvdVectors::Thin: return Eigen::ComputeThinU | Eigen::ComputeThinV;
    case SvdVectors::Full: return Eigen::ComputeFullU | Eigen::ComputeFullV;
  }
  return 0;
}

template <typename Svd>
void check_svd(const Svd& svd) {
  if (svd.info() != Eigen::Success || !svd.singularValues().allFinite()) {
    throw Error(Errc::NumericalFailure, "slice SVD did not converge");
  }
}

}  // namespace

SliceSvd slice_svd(const Eigen::Ref<const ComplexMatrix>& slice, bool real_slice, SvdVectors vectors) {
  const unsigned int options = svd_options(vectors);
  SliceSvd out;
  if (real_slice) {
    const RealMatrix real = slice.real();
    Eigen::JacobiSVD<RealMatrix> svd(real, options);
    check_svd(svd);
    out.sigma = svd.singularValues();
    if (vectors != SvdVectors::None) {
      out.u = svd.matrixU().cast<std::complex<double>>();
      out.v = svd.matrixV().cast<std::complex<double>>();
    }
  } else {
    Eigen::JacobiSVD<ComplexMatrix> svd(slice, options);
    check_svd(svd);
    out.sigma = svd.singularValues();
    if (vectors != SvdVectors::None) {
      out.u = svd.matrixU();
      out.v = svd.matrixV();
    }
  }
  return out;
}

}  // namespace tpca::detail
