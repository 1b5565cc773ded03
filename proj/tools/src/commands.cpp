#include "tpca_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <regex>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "tpca/ibtsvt.hpp"
#include "tpca/incoherence.hpp"
#include "tpca/io.hpp"
#include "tpca/metrics.hpp"
#include "tpca/norms.hpp"
#include "tpca/synth.hpp"
#include "tpca/tproduct.hpp"
#include "tpca/tsvd.hpp"
#include "tpca_cli/manifest.hpp"

namespace fs = std::filesystem;

namespace tpca::cli {

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::ShapeMismatch:
    case Errc::IndexOutOfRange:
    case Errc::DescriptorMismatch:
      return kExitBadArguments;
    case Errc::IoError:
    case Errc::BadMagic:
    case Errc::BadVersion:
    case Errc::TruncatedPayload:
    case Errc::TrailingBytes:
    case Errc::BadHeader:
    case Errc::InconsistentDims:
    case Errc::EmptySequence:
      return kExitIoFailure;
    case Errc::SymmetryViolation:
    case Errc::NumericalFailure:
    case Errc::ZeroTensor:
      return kExitNumericalFailure;
  }
  return kExitNumericalFailure;
}

namespace {

/// Shortest decimal form that parses back to the same double.
std::string exact(double v) { return fmt::format("{}", v); }

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t n = 0; n < values.size(); ++n) out += (n ? "," : "") + exact(values[n]);
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw Error(Errc::InvalidArgument, "bad number for " + key + ": '" + text + "'");
  return v;
}

std::pair<std::size_t, std::size_t> parse_block(const std::string& text) {
  static const std::regex pattern(R"((\d+)[xX](\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(Errc::InvalidArgument, "block must look like B1xB2, got '" + text + "'");
  }
  const auto b1 = std::stoull(m[1].str());
  const auto b2 = std::stoull(m[2].str());
  if (b1 == 0 || b2 == 0) throw Error(Errc::InvalidArgument, "block sides must be >= 1, got '" + text + "'");
  return {b1, b2};
}

io::Normalize parse_normalize(const std::string& text) {
  if (text == "unit") return io::Normalize::Unit;
  if (text == "none") return io::Normalize::None;
  throw Error(Errc::InvalidArgument, "normalize must be none or unit, got '" + text + "'");
}

io::Render parse_render(const std::string& text) {
  if (text == "clip") return io::Render::Clip;
  if (text == "rescale") return io::Render::Rescale;
  throw Error(Errc::InvalidArgument, "render mode must be clip or rescale, got '" + text + "'");
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

struct LoadedInput {
  Tensor3 tensor;
  bool frames = false;
  std::string sha256;
};

LoadedInput load_input(const fs::path& path, io::Normalize normalize) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw Error(Errc::IoError, "input " + path.string() + " does not exist");
  LoadedInput in;
  if (fs::is_directory(path, ec)) {
    auto seq = io::read_frame_directory(path);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::string digest_input;
    for (const auto& f : files) {
      const auto bytes = io::read_file(f);
      digest_input += f.filename().string() + '\0' + std::string(bytes.begin(), bytes.end());
    }
    in.tensor = io::frames_to_tensor(seq, normalize);
    in.frames = true;
    in.sha256 = sha256_hex(digest_input);
  } else {
    const auto bytes = io::read_file(path);
    in.tensor = io::decode_tensor(bytes);
    in.sha256 = sha256_hex(std::string(bytes.begin(), bytes.end()));
  }
  return in;
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeOptions {
  std::string input;
  std::string out_dir = "tpca_out";
  std::string block = "2x2";
  double tau_scale = 20.0;
  std::optional<double> tau0;
  double mu = 1.8;
  double eta = 1.0;
  double eps = 1e-2;
  int max_iters = 50;
  std::string normalize = "unit";
  std::size_t threads = 1;
  std::string render_low = "clip";
  std::string render_sparse = "rescale";
  std::string replay;
};

void apply_replay(const std::string& manifest, const CLI::App& sub, DecomposeOptions& opts) {
  const Manifest m = Manifest::load(manifest);
  auto take = [&](const char* flag, const char* key, auto&& assign) {
    if (sub.count(flag) > 0) return;
    if (auto v = m.get(key)) assign(*v);
  };
  if (opts.input.empty()) {
    if (auto v = m.get("input")) opts.input = *v;
  }
  take("--block", "block", [&](const std::string& v) { opts.block = v; });
  take("--mu", "mu", [&](const std::string& v) { opts.mu = parse_double("mu", v); });
  take("--eta", "eta", [&](const std::string& v) { opts.eta = parse_double("eta", v); });
  take("--eps", "eps", [&](const std::string& v) { opts.eps = parse_double("eps", v); });
  take("--max-iters", "max_iters",
       [&](const std::string& v) { opts.max_iters = static_cast<int>(parse_double("max_iters", v)); });
  take("--normalize", "normalize", [&](const std::string& v) { opts.normalize = v; });
  take("--threads", "threads",
       [&](const std::string& v) { opts.threads = static_cast<std::size_t>(parse_double("threads", v)); });
  take("--render-low", "render_low", [&](const std::string& v) { opts.render_low = v; });
  take("--render-sparse", "render_sparse", [&](const std::string& v) { opts.render_sparse = v; });
  take("--tau-scale", "tau_scale", [&](const std::string& v) { opts.tau_scale = parse_double("tau_scale", v); });
  // The resolved threshold is recorded exactly; replaying it pins tau0 even
  // if the block side or tube length were to change.
  if (sub.count("--tau") == 0 && sub.count("--tau-scale") == 0) {
    if (auto v = m.get("tau0")) opts.tau0 = parse_double("tau0", *v);
  }
}

int cmd_decompose(DecomposeOptions opts, const CLI::App& sub, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  if (!opts.replay.empty()) apply_replay(opts.replay, sub, opts);
  if (opts.input.empty()) throw Error(Errc::InvalidArgument, "decompose needs an input path (or --replay)");

  IbtsvtConfig cfg;
  std::tie(cfg.block_rows, cfg.block_cols) = parse_block(opts.block);
  cfg.tau_scale = opts.tau_scale;
  cfg.tau0 = opts.tau0;
  cfg.mu = opts.mu;
  cfg.eta0 = opts.eta;
  cfg.eps = opts.eps;
  cfg.max_iters = opts.max_iters;
  cfg.threads = opts.threads;
  cfg.validate();
  const io::Normalize normalize = parse_normalize(opts.normalize);
  const io::Render render_low = parse_render(opts.render_low);
  const io::Render render_sparse = parse_render(opts.render_sparse);

  const LoadedInput in = load_input(opts.input, normalize);
  const DecompositionResult res = ibtsvt(in.tensor, cfg);

  const fs::path dir = opts.out_dir;
  ensure_directory(dir);
  const fs::path low_path = dir / "L.ten3";
  const fs::path sparse_path = dir / "S.ten3";
  io::write_tensor(low_path, res.l);
  io::write_tensor(sparse_path, res.s);
  if (in.frames) {
    io::write_frame_directory(dir / "L", io::tensor_to_frames(res.l, render_low));
    io::write_frame_directory(dir / "S", io::tensor_to_frames(res.s, render_sparse));
  }

  const auto& ranks = res.block_tubal_ranks;
  std::map<std::size_t, std::size_t> histogram;
  for (auto r : ranks) ++histogram[r];
  std::string hist;
  for (const auto& [rank, count] : histogram) hist += fmt::format("{}{}:{}", hist.empty() ? "" : ",", rank, count);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  Manifest m;
  m.set("command", "decompose");
  m.set("input", opts.input);
  m.set("input_kind", in.frames ? "frames" : "tensor");
  m.set("input_sha256", in.sha256);
  m.set("shape", to_string(in.tensor.shape()));
  m.set("block", fmt::format("{}x{}", cfg.block_rows, cfg.block_cols));
  m.set("tau_scale", exact(cfg.tau_scale));
  m.set("tau0", exact(res.tau0));
  m.set("tau0_source", cfg.tau0 ? "explicit" : "tau_scale/sqrt(n*n3)");
  m.set("mu", exact(cfg.mu));
  m.set("eta", exact(cfg.eta0));
  m.set("eps", exact(cfg.eps));
  m.set("max_iters", std::to_string(cfg.max_iters));
  m.set("normalize", std::string(io::to_string(normalize)));
  m.set("normalize_applied", in.frames ? "yes" : "no (tensor input)");
  m.set("threads", std::to_string(cfg.threads));
  m.set("render_low", std::string(io::to_string(render_low)));
  m.set("render_sparse", std::string(io::to_string(render_sparse)));
  m.set("status", res.converged ? "converged" : "NonConvergence");
  m.set("iterations", std::to_string(res.iterations));
  m.set("history", join(res.history));
  m.set("thresholds", join(res.thresholds));
  m.set("block_count", std::to_string(ranks.size()));
  m.set("block_tubal_rank_min", ranks.empty() ? "0" : std::to_string(*std::min_element(ranks.begin(), ranks.end())));
  m.set("block_tubal_rank_max", ranks.empty() ? "0" : std::to_string(*std::max_element(ranks.begin(), ranks.end())));
  m.set("block_tubal_rank_histogram", hist);
  m.set("wall_time_seconds", fmt::format("{:.6f}", seconds));
  m.set("output_low", low_path.string());
  m.set("output_sparse", sparse_path.string());
  if (in.frames) {
    m.set("output_low_frames", (dir / "L").string());
    m.set("output_sparse_frames", (dir / "S").string());
  }
  m.save(dir / "manifest.txt");

  fmt::print(out, "shape: {}\n", to_string(in.tensor.shape()));
  fmt::print(out, "blocks: {}\n", ranks.size());
  fmt::print(out, "tau0: {}\n", exact(res.tau0));
  fmt::print(out, "iterations: {}\n", res.iterations);
  fmt::print(out, "status: {}\n", res.converged ? "converged" : "NonConvergence");
  if (!res.history.empty()) fmt::print(out, "last_relative_change: {:.6e}\n", res.history.back());
  fmt::print(out, "manifest: {}\n", (dir / "manifest.txt").string());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tsvd

struct TsvdOptions {
  std::string input;
  std::string out_dir = "tsvd_out";
  double rel_tol = kDefaultRankTol;
  bool verify = false;
};

int cmd_tsvd(const TsvdOptions& opts, std::ostream& out) {
  const Tensor3 a = io::read_tensor(opts.input);
  const TSVDFactors f = tsvd(a);
  const fs::path dir = opts.out_dir;
  ensure_directory(dir);
  io::write_tensor(dir / "U.ten3", f.u);
  io::write_tensor(dir / "S.ten3", f.s);
  io::write_tensor(dir / "V.ten3", f.v);

  const MultiRank mr = multi_rank(a, opts.rel_tol);
  std::string ranks;
  for (auto r : mr.r) ranks += (ranks.empty() ? "" : " ") + std::to_string(r);
  fmt::print(out, "shape: {}\n", to_string(a.shape()));
  fmt::print(out, "tubal_rank: {}\n", mr.tubal());
  fmt::print(out, "multi_rank: {}\n", ranks);
  fmt::print(out, "tnn: {:.12g}\n", tnn(a));
  if (opts.verify) {
    const Tensor3 back = tproduct(f.u, tproduct(f.s, conj_transpose(f.v)));
    fmt::print(out, "reconstruction_rel_error: {:.3e}\n", relative_error(back, a));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthLowRankOptions {
  synth::LowRankSpec spec;
  std::optional<std::size_t> n2;
  std::string out_dir = "synth_lowrank";
};

struct SynthVideoOptions {
  synth::VideoSpec spec;
  std::string out_dir = "synth_video";
  bool pgm = false;
};

int cmd_synth_lowrank(SynthLowRankOptions opts, std::ostream& out) {
  opts.spec.n2 = opts.n2.value_or(opts.spec.n1);
  const auto sample = synth::lowrank(opts.spec);
  const fs::path dir = opts.out_dir;
  ensure_directory(dir);
  io::write_tensor(dir / "X.ten3", sample.x);
  io::write_tensor(dir / "L0.ten3", sample.l0);
  io::write_tensor(dir / "S0.ten3", sample.s0);
  fmt::print(out, "shape: {}\n", to_string(sample.x.shape()));
  fmt::print(out, "tubal_rank: {}\n", opts.spec.rank);
  fmt::print(out, "wrote: {}\n", dir.string());
  return kExitOk;
}

int cmd_synth_video(const SynthVideoOptions& opts, std::ostream& out) {
  const auto sample = synth::video(opts.spec);
  const fs::path dir = opts.out_dir;
  ensure_directory(dir);
  io::write_tensor(dir / "X.ten3", sample.x);
  io::write_tensor(dir / "L0.ten3", sample.l0);
  io::write_tensor(dir / "S0.ten3", sample.s0);
  io::write_tensor(dir / "mask.ten3", sample.mask);
  if (opts.pgm) io::write_frame_directory(dir / "frames", io::tensor_to_frames(sample.x, io::Render::Rescale));
  fmt::print(out, "shape: {}\n", to_string(sample.x.shape()));
  fmt::print(out, "mask_pixels: {}\n", static_cast<std::size_t>(norm(sample.mask, NormKind::L1)));
  fmt::print(out, "wrote: {}\n", dir.string());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsOptions {
  std::vector<std::string> inputs;
  std::string mask;
  std::optional<double> threshold;
  double threshold_rel = 0.25;
};

int cmd_metrics(const MetricsOptions& opts, std::ostream& out) {
  if (opts.inputs.empty() || opts.inputs.size() > 2) {
    throw Error(Errc::InvalidArgument, "metrics takes one or two tensor files");
  }
  const Tensor3 a = io::read_tensor(opts.inputs[0]);
  for (auto kind : {NormKind::Fro, NormKind::Inf, NormKind::L1, NormKind::L112}) {
    fmt::print(out, "{}: {:.10g}\n", to_string(kind), norm(a, kind));
  }
  if (opts.inputs.size() == 2) {
    const Tensor3 b = io::read_tensor(opts.inputs[1]);
    fmt::print(out, "relative_error: {:.10g}\n", relative_error(a, b));
  }
  if (!opts.mask.empty()) {
    const Tensor3 mask = io::read_tensor(opts.mask);
    const double threshold = opts.threshold.value_or(opts.threshold_rel * norm(a, NormKind::Inf));
    const SupportScores s = support_scores(a, mask, threshold);
    fmt::print(out, "threshold: {:.10g}\n", threshold);
    fmt::print(out, "precision: {:.4f}\n", s.precision);
    fmt::print(out, "recall: {:.4f}\n", s.recall);
    fmt::print(out, "f_measure: {:.4f}\n", s.f_measure);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// incoherence

struct IncoherenceOptions {
  std::string input;
  double rel_tol = kDefaultRankTol;
  std::optional<double> budget;
};

int cmd_incoherence(const IncoherenceOptions& opts, std::ostream& out) {
  const Tensor3 l = io::read_tensor(opts.input);
  const IncoherenceReport rep = incoherence_report(l, opts.rel_tol);
  fmt::print(out, "n: {}\nn3: {}\nr: {}\n", rep.n, rep.n3, rep.r);
  fmt::print(out, "mu_u: {:.4f}\nmu_v: {:.4f}\nmu_uv: {:.4f}\nmu: {:.4f}\n", rep.mu_u, rep.mu_v, rep.mu_uv, rep.mu);
  if (opts.budget) fmt::print(out, "conditions_hold: {}\n", rep.mu <= *opts.budget ? "true" : "false");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor robust PCA by iterative block tensor singular value thresholding", "tpca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tpca 0.1.0");

  std::function<int()> action;

  DecomposeOptions dec;
  auto* dsub = app.add_subcommand("decompose", "Split a tensor or frame directory into low-rank and sparse parts");
  dsub->add_option("input", dec.input, "Tensor file (.ten3) or directory of .pgm frames");
  dsub->add_option("-o,--out", dec.out_dir, "Output directory")->capture_default_str();
  dsub->add_option("--block", dec.block, "Block sides B1xB2")->capture_default_str();
  dsub->add_option("--tau-scale", dec.tau_scale, "c in tau0 = c / sqrt(n n3)")->capture_default_str();
  dsub->add_option("--tau", dec.tau0, "Explicit initial threshold (overrides --tau-scale)");
  dsub->add_option("--mu", dec.mu, "Threshold decay factor")->capture_default_str();
  dsub->add_option("--eta", dec.eta, "Initial eta")->capture_default_str();
  dsub->add_option("--eps", dec.eps, "Relative-change stopping tolerance")->capture_default_str();
  dsub->add_option("--max-iters", dec.max_iters, "Iteration cap")->capture_default_str();
  dsub->add_option("--normalize", dec.normalize, "Frame scaling: none or unit")->capture_default_str();
  dsub->add_option("--threads", dec.threads, "Worker threads for the block step")->capture_default_str();
  dsub->add_option("--render-low", dec.render_low, "Low-rank frame rendering: clip or rescale")->capture_default_str();
  dsub->add_option("--render-sparse", dec.render_sparse, "Sparse frame rendering: clip or rescale")
      ->capture_default_str();
  dsub->add_option("--replay", dec.replay, "Take unset parameters (and the input) from a manifest");
  dsub->callback([&] { action = [&] { return cmd_decompose(dec, *dsub, out); }; });

  TsvdOptions ts;
  auto* tsub = app.add_subcommand("tsvd", "t-SVD factors, ranks and tensor nuclear norm of a tensor file");
  tsub->add_option("input", ts.input, "Tensor file")->required();
  tsub->add_option("-o,--out", ts.out_dir, "Directory for U.ten3, S.ten3, V.ten3")->capture_default_str();
  tsub->add_option("--rel-tol", ts.rel_tol, "Relative rank tolerance")->capture_default_str();
  tsub->add_flag("--verify", ts.verify, "Report the reconstruction error of u*s*v^T");
  tsub->callback([&] { action = [&] { return cmd_tsvd(ts, out); }; });

  auto* ssub = app.add_subcommand("synth", "Generate synthetic test data with ground truth");
  ssub->require_subcommand(1);
  SynthLowRankOptions lr;
  auto* lsub = ssub->add_subcommand("lowrank", "Low-tubal-rank tensor plus sparse spikes");
  lsub->add_option("--n,--n1", lr.spec.n1, "Rows")->capture_default_str();
  lsub->add_option("--n2", lr.n2, "Columns (default: same as --n)");
  lsub->add_option("--n3", lr.spec.n3, "Tube length")->capture_default_str();
  lsub->add_option("--rank", lr.spec.rank, "Tubal rank")->capture_default_str();
  lsub->add_option("--rho", lr.spec.rho, "Fraction of spiked entries")->capture_default_str();
  lsub->add_option("--amplitude", lr.spec.amplitude, "Spike magnitude")->capture_default_str();
  lsub->add_option("--seed", lr.spec.seed, "Random seed")->capture_default_str();
  lsub->add_option("-o,--out", lr.out_dir, "Output directory")->capture_default_str();
  lsub->callback([&] { action = [&] { return cmd_synth_lowrank(lr, out); }; });

  SynthVideoOptions vid;
  auto* vsub = ssub->add_subcommand("video", "Static rank-1 background with a moving bright square");
  vsub->add_option("--rows", vid.spec.rows)->capture_default_str();
  vsub->add_option("--cols", vid.spec.cols)->capture_default_str();
  vsub->add_option("--frames", vid.spec.frames)->capture_default_str();
  vsub->add_option("--square", vid.spec.square, "Side of the moving square")->capture_default_str();
  vsub->add_option("--background", vid.spec.background, "Background peak")->capture_default_str();
  vsub->add_option("--amplitude", vid.spec.amplitude, "Square intensity")->capture_default_str();
  vsub->add_option("--seed", vid.spec.seed, "Random seed")->capture_default_str();
  vsub->add_option("-o,--out", vid.out_dir, "Output directory")->capture_default_str();
  vsub->add_flag("--pgm", vid.pgm, "Also write X as 8-bit .pgm frames");
  vsub->callback([&] { action = [&] { return cmd_synth_video(vid, out); }; });

  MetricsOptions met;
  auto* msub = app.add_subcommand("metrics", "Norms, relative error and support scores");
  msub->add_option("inputs", met.inputs, "Tensor file, optionally followed by a reference")->required();
  msub->add_option("--mask", met.mask, "Ground-truth support mask (tensor file)");
  msub->add_option("--threshold", met.threshold, "Absolute magnitude threshold for the support");
  msub->add_option("--threshold-rel", met.threshold_rel, "Threshold as a fraction of max |input|")
      ->capture_default_str();
  msub->callback([&] { action = [&] { return cmd_metrics(met, out); }; });

  IncoherenceOptions inc;
  auto* isub = app.add_subcommand("incoherence", "Block tensor incoherence parameters of an n x n x n3 tensor");
  isub->add_option("input", inc.input, "Tensor file")->required();
  isub->add_option("--rel-tol", inc.rel_tol, "Relative rank tolerance")->capture_default_str();
  isub->add_option("--budget", inc.budget, "Report whether mu <= budget");
  isub->callback([&] { action = [&] { return cmd_incoherence(inc, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadArguments;
  }

  try {
    return action ? action() : kExitBadArguments;
  } catch (const Error& e) {
    fmt::print(err, "tpca: {}\n", e.what());
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    fmt::print(err, "tpca: IoError: {}\n", e.what());
    return kExitIoFailure;
  } catch (const std::bad_alloc&) {
    fmt::print(err, "tpca: out of memory\n");
    return kExitNumericalFailure;
  }
}

}  // namespace tpca::cli
