// opvframe: generate, analyze, dualize, dilate and erasure-test
// operator-valued frames stored as JSON frame files.
//
// Exit codes: 0 success (analyze: frame; erasure: robust; verify: property
// holds), 1 negative verdict, 2 malformed input or infeasible construction.

#include <charconv>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opvframe/constructions.hpp"
#include "opvframe/duals.hpp"
#include "opvframe/erasure.hpp"
#include "opvframe/errors.hpp"
#include "opvframe/frame.hpp"
#include "opvframe/frame_io.hpp"

namespace {

using namespace opv;

// Shortest round-trip decimal, same as the frame-file encoding.
std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fmt(bool b) { return b ? "true" : "false"; }

std::string fmt_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ' ';
    out += fmt(xs[i]);
  }
  return out;
}

void print_report(const OpvFrame& f, const FrameReport& rep) {
  std::cout << "n: " << f.domain_dim() << '\n'
            << "m: " << f.block_count() << '\n'
            << "l: " << f.codomain_dim() << '\n'
            << "lower_bound: " << fmt(rep.lower_bound) << '\n'
            << "upper_bound: " << fmt(rep.upper_bound) << '\n'
            << "is_bessel: " << fmt(rep.is_bessel) << '\n'
            << "is_frame: " << fmt(rep.is_frame) << '\n'
            << "is_tight: " << fmt(rep.is_tight) << '\n'
            << "is_parseval: " << fmt(rep.is_parseval) << '\n'
            << "is_riesz: " << fmt(rep.is_riesz) << '\n'
            << "is_orthonormal: " << fmt(rep.is_orthonormal) << '\n'
            << "is_equal_norm: " << fmt(rep.is_equal_norm) << '\n'
            << "block_frobenius_norms: " << fmt_list(rep.block_frobenius_norms)
            << '\n'
            << "trace_identity_residual: " << fmt(rep.trace_identity_residual)
            << '\n'
            << "tol: " << fmt(rep.tol) << '\n';
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  std::string out;
  bool has_n = false;
  bool has_sizes = false;
  bool has_seed = false;
};

int run_gen(const GenOptions& opt) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(Errc::ParseError, std::string("gen ") + opt.kind + " " + what);
  };
  OpvFrame frame = [&]() -> OpvFrame {
    if (opt.kind == "example1") {
      need(opt.has_n, "requires --n");
      need(opt.has_sizes, "requires --sizes");
      return roots_of_unity_frame(opt.n, opt.sizes);
    }
    if (opt.kind == "example2") {
      need(opt.has_n, "requires --n");
      need(!opt.has_sizes, "takes no --sizes");
      return coordinate_frame(opt.n);
    }
    if (opt.kind == "example3") {
      need(!opt.has_n && !opt.has_sizes && !opt.has_seed, "takes no flags");
      return cyclic_projection_frame();
    }
    if (opt.kind == "random") {
      need(opt.has_n, "requires --n");
      need(opt.has_sizes, "requires --sizes");
      return random_parseval(opt.n, opt.sizes, opt.seed);
    }
    need(opt.has_n, "requires --n");
    need(opt.has_sizes, "requires --sizes");
    return optimal_one_erasure_frame(opt.n, opt.sizes);
  }();
  write_frame(frame, opt.out);
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"finite operator-valued frame toolkit"};
  app.require_subcommand(1);

  // gen
  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a frame");
  cmd_gen->add_option("kind", gen.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3", "random",
                             "optimal"}));
  cmd_gen->add_option("--n", gen.n, "domain dimension");
  cmd_gen->add_option("--sizes", gen.sizes, "block row counts")
      ->delimiter(',');
  cmd_gen->add_option("--seed", gen.seed, "random seed");
  cmd_gen->add_option("-o,--out", gen.out, "output frame file")->required();

  // analyze
  std::string analyze_file;
  double analyze_tol = kFrameTol;
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "classify a frame");
  cmd_analyze->add_option("file", analyze_file)->required();
  cmd_analyze->add_option("--tol", analyze_tol, "classification tolerance");

  // dilate
  std::string dilate_file, dilate_out;
  CLI::App* cmd_dilate =
      app.add_subcommand("dilate", "complete a Parseval frame to orthonormal");
  cmd_dilate->add_option("file", dilate_file)->required();
  cmd_dilate->add_option("-o,--out", dilate_out)->required();

  // dual
  std::string dual_file, dual_out;
  bool dual_canonical = false;
  double dual_tight_c = 0.0;
  CLI::App* cmd_dual = app.add_subcommand("dual", "compute a dual frame");
  cmd_dual->add_option("file", dual_file)->required();
  CLI::Option* opt_canonical =
      cmd_dual->add_flag("--canonical", dual_canonical, "canonical dual");
  CLI::Option* opt_tight =
      cmd_dual->add_option("--tight", dual_tight_c, "tight dual with scale c");
  opt_canonical->excludes(opt_tight);
  cmd_dual->add_option("-o,--out", dual_out)->required();

  // erasure
  std::string erasure_file;
  std::size_t erasure_k = 0;
  bool erasure_d1 = false;
  double erasure_tol = kFrameTol;
  CLI::App* cmd_erasure =
      app.add_subcommand("erasure", "test robustness to k erasures");
  cmd_erasure->add_option("file", erasure_file)->required();
  cmd_erasure->add_option("--k", erasure_k, "erasure count")->required();
  cmd_erasure->add_flag("--d1", erasure_d1, "also report the d1 measure");
  cmd_erasure->add_option("--tol", erasure_tol);

  // construct
  std::string construct_spectrum, construct_out;
  std::vector<std::size_t> construct_sizes;
  std::vector<double> construct_alphas;
  CLI::App* cmd_construct = app.add_subcommand(
      "construct", "frame with prescribed frame operator and diagonals");
  cmd_construct->add_option("--spectrum", construct_spectrum, "matrix file")
      ->required();
  cmd_construct->add_option("--sizes", construct_sizes)
      ->delimiter(',')
      ->required();
  cmd_construct->add_option("--alphas", construct_alphas)
      ->delimiter(',')
      ->required();
  cmd_construct->add_option("-o,--out", construct_out)->required();

  // verify
  std::string verify_file, verify_expect;
  double verify_tol = kFrameTol;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a frame property");
  cmd_verify->add_option("file", verify_file)->required();
  cmd_verify->add_option("--expect", verify_expect)
      ->required()
      ->check(CLI::IsMember({"parseval", "orthonormal", "equalnorm"}));
  cmd_verify->add_option("--tol", verify_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  gen.has_n = cmd_gen->count("--n") > 0;
  gen.has_sizes = cmd_gen->count("--sizes") > 0;
  gen.has_seed = cmd_gen->count("--seed") > 0;

  if (cmd_gen->parsed()) return run_gen(gen);

  if (cmd_analyze->parsed()) {
    const OpvFrame f = read_frame(analyze_file);
    const FrameReport rep = classify(f, analyze_tol);
    print_report(f, rep);
    return rep.is_frame ? 0 : 1;
  }

  if (cmd_dilate->parsed()) {
    write_frame(dilate(read_frame(dilate_file), kFrameTol), dilate_out);
    return 0;
  }

  if (cmd_dual->parsed()) {
    if (!dual_canonical && opt_tight->count() == 0) {
      fail(Errc::ParseError, "dual needs --canonical or --tight C");
    }
    const OpvFrame f = read_frame(dual_file);
    const DualPair pair = dual_canonical
                              ? canonical_dual(f, kFrameTol)
                              : tight_dual(f, dual_tight_c, kFrameTol);
    write_frame(pair.dual, dual_out);
    std::cout << "residual: " << fmt(pair.residual) << '\n';
    return 0;
  }

  if (cmd_erasure->parsed()) {
    const OpvFrame f = read_frame(erasure_file);
    const RobustnessResult rob = robust_to_k(f, erasure_k, erasure_tol);
    std::cout << "k: " << erasure_k << '\n'
              << "robust: " << fmt(rob.robust) << '\n';
    std::cout << "failing_subsets:";
    for (const auto& sub : rob.failing_subsets) {
      std::cout << " {";
      for (std::size_t i = 0; i < sub.size(); ++i) {
        if (i > 0) std::cout << ',';
        std::cout << sub[i];
      }
      std::cout << '}';
    }
    std::cout << '\n';
    if (erasure_d1) {
      const ErasureReport rep = check_d1_optimal(f, erasure_tol);
      std::cout << "per_block_error_norms: "
                << fmt_list(rep.per_block_error_norms) << '\n'
                << "d1: " << fmt(rep.d1) << '\n'
                << "is_parseval_input: " << fmt(rep.is_parseval_input) << '\n'
                << "is_d1_optimal: " << fmt(rep.is_d1_optimal) << '\n'
                << "tol: " << fmt(rep.tol) << '\n';
    }
    return rob.robust ? 0 : 1;
  }

  if (cmd_construct->parsed()) {
    ConstructionSpec spec;
    spec.spectrum = read_matrix(construct_spectrum);
    spec.n = spec.spectrum->rows();
    spec.block_sizes = construct_sizes;
    spec.alphas = construct_alphas;
    write_frame(construct_with_frame_operator(spec, kFrameTol), construct_out);
    return 0;
  }

  if (cmd_verify->parsed()) {
    const FrameReport rep = classify(read_frame(verify_file), verify_tol);
    bool ok = false;
    if (verify_expect == "parseval") ok = rep.is_parseval;
    if (verify_expect == "orthonormal") ok = rep.is_orthonormal;
    if (verify_expect == "equalnorm") ok = rep.is_equal_norm;
    std::cout << verify_expect << ": " << fmt(ok) << '\n';
    return ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const OpvError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
