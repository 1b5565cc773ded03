#include "tpca/ibtsvt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "tpca/block.hpp"
#include "tpca/norms.hpp"
#include "tpca/tsvd.hpp"

namespace tpca {
namespace {

// Runs fn(p) for p in [0, count) on up to `threads` workers over contiguous
// ranges. Each p is touched by exactly one worker, so per-p results do not
// depend on the thread count.
template <typename Fn>
void for_each_block(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t p = 0; p < count; ++p) fn(p);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      workers.emplace_back([&, t, begin, end] {
        try {
          for (std::size_t p = begin; p < end; ++p) fn(p);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double squared_fro(const Tensor3& a) {
  double sum = 0.0;
  for (double v : a.data()) sum += v * v;
  return sum;
}

}  // namespace

void IbtsvtConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(Errc::InvalidArgument, what); };
  if (tau0 && !(*tau0 > 0.0 && std::isfinite(*tau0))) fail("tau0 must be > 0");
  if (!(tau_scale > 0.0 && std::isfinite(tau_scale))) fail("tau scale must be > 0");
  if (!(mu > 1.0 && std::isfinite(mu))) fail("mu must be > 1");
  if (!(eta0 > 0.0 && std::isfinite(eta0))) fail("eta must be > 0");
  if (!(eps > 0.0 && std::isfinite(eps))) fail("eps must be > 0");
  if (max_iters < 1) fail("max_iters must be >= 1");
  if (block_rows < 1 || block_cols < 1) fail("block sides must be >= 1");
  if (threads < 1) fail("threads must be >= 1");
}

double IbtsvtConfig::resolved_tau0(std::size_t n3) const {
  if (tau0) return *tau0;
  const double n = static_cast<double>(std::max(block_rows, block_cols));
  return tau_scale / std::sqrt(n * static_cast<double>(n3));
}

DecompositionResult ibtsvt(const Tensor3& x, const IbtsvtConfig& cfg) {
  cfg.validate();
  Partition part = partition(x, cfg.block_rows, cfg.block_cols);
  auto& blocks = part.blocks;
  const std::size_t count = blocks.size();

  DecompositionResult result;
  result.tau0 = cfg.resolved_tau0(x.n3());

  auto record_tnn = [&] {
    if (!cfg.track_block_tnn) return;
    std::vector<double> values(count);
    for_each_block(count, cfg.threads, [&](std::size_t p) { values[p] = tnn(blocks[p].data); });
    result.block_tnn.push_back(std::move(values));
  };

  if (norm(x, NormKind::Fro) == 0.0) {
    result.l = zeros_like(x);
    result.s = zeros_like(x);
    result.converged = true;
    result.block_tubal_ranks.assign(count, 0);
    record_tnn();
    return result;
  }

  record_tnn();
  double eta = cfg.eta0;
  std::vector<double> change(count);
  std::vector<double> previous(count);
  for (int k = 1; k <= cfg.max_iters; ++k) {
    eta *= cfg.mu;
    const double tau = result.tau0 / eta;
    for_each_block(count, cfg.threads, [&](std::size_t p) {
      Tensor3 next = svt(blocks[p].data, tau);
      previous[p] = squared_fro(blocks[p].data);
      change[p] = squared_fro(next - blocks[p].data);
      blocks[p].data = std::move(next);
    });
    // Reduce in grid order so the sums are independent of the thread count.
    double diff = 0.0;
    double base = 0.0;
    for (std::size_t p = 0; p < count; ++p) {
      diff += change[p];
      base += previous[p];
    }
    const double rel = base > 0.0 ? std::sqrt(diff) / std::sqrt(base) : 0.0;
    result.thresholds.push_back(tau);
    result.history.push_back(rel);
    result.iterations = k;
    record_tnn();
    if (rel <= cfg.eps) {
      result.converged = true;
      break;
    }
  }

  result.block_tubal_ranks.resize(count);
  for_each_block(count, cfg.threads,
                 [&](std::size_t p) { result.block_tubal_ranks[p] = tubal_rank(blocks[p].data); });
  result.l = concatenate(part.grid, blocks);
  result.s = sparse_residual(x, result.l);
  return result;
}

}  // namespace tpca
