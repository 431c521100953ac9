// Command-line front end: exact triangle generation, verification suites,
// exhaustive enumerations, and a recurrence-vs-closed-form benchmark.
//
// Exit codes: 0 success, 1 verification failure or method disagreement,
// 2 invalid arguments.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fct/lattice_paths.hpp"
#include "fct/partitions.hpp"
#include "fct/render.hpp"
#include "fct/sequences.hpp"
#include "fct/triangle.hpp"
#include "fct/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Desk-scale limits for the exhaustive enumerations; beyond these the object
// counts explode and the command refuses instead of hanging.
constexpr int kMaxPartitions = 10;
constexpr int kMaxMatchings = 8;
constexpr int kMaxDoubles = 9;
constexpr int kMaxMatchingDoubles = 7;

// Caps for the verify sweeps.
constexpr int kMaxVerifyTrianglesN = 200;
constexpr int kMaxVerifyTrianglesP = 16;
constexpr int kMaxVerifyPathsN = 12;
constexpr int kMaxVerifyDoublesN = 7;

int enumeration_limit(fct::Family family) {
  switch (family) {
    case fct::Family::kPartitions:
      return kMaxPartitions;
    case fct::Family::kMatchings:
      return kMaxMatchings;
    case fct::Family::kDoublePartitions:
      return kMaxDoubles;
    case fct::Family::kMatchingDoubles:
      return kMaxMatchingDoubles;
  }
  return 0;
}

struct TriangleArgs {
  int p = 2;
  int n_max = 0;
  std::string method = "convolution";
  std::string format = "table";
};

struct VerifyArgs {
  std::string scope = "all";
  int p_max = 10;
  int n_max = -1;  // -1: per-scope default
  std::string data_dir = FCT_DEFAULT_DATA_DIR;
};

struct EnumerateArgs {
  std::string family;
  int n = 0;
  std::string format = "table";
};

struct BenchArgs {
  int p = 2;
  int n_max = 0;
  int repetitions = 1;
  std::string format = "table";
};

fct::Triangle build(fct::Method method, fct::TriangleParams params) {
  switch (method) {
    case fct::Method::kConvolution:
      return fct::triangle_convolution(params);
    case fct::Method::kAlternating:
      return fct::triangle_alternating(params);
    case fct::Method::kClosedForm:
      return fct::triangle_closed_form(params);
  }
  throw std::logic_error("unknown method");
}

int run_triangle(const TriangleArgs& args) {
  const auto method = fct::parse_method(args.method);
  const auto format = fct::parse_output_format(args.format);
  if (!method || !format) {
    std::cerr << "unknown method or format\n";
    return kExitUsage;
  }
  if (args.p < 1 || args.n_max < 0) {
    std::cerr << "triangle requires --p >= 1 and --n-max >= 0\n";
    return kExitUsage;
  }
  std::cout << fct::render_triangle(build(*method, {args.p, args.n_max}), *format);
  return kExitOk;
}

struct NamedCheck {
  std::string name;
  std::function<fct::verify::Failure()> run;
};

int run_checks(const std::vector<NamedCheck>& checks) {
  std::string first_failure;
  for (const auto& check : checks) {
    const auto failure = check.run();
    std::cout << (failure ? "FAIL" : "PASS") << "  " << check.name << '\n';
    if (failure && first_failure.empty()) {
      first_failure = *failure;
    }
  }
  if (!first_failure.empty()) {
    std::cerr << "first counterexample: " << first_failure << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  const bool all = args.scope == "all";
  if (!all && args.scope != "triangles" && args.scope != "paths" &&
      args.scope != "partitions" && args.scope != "sequences") {
    std::cerr << "unknown scope '" << args.scope << "'\n";
    return kExitUsage;
  }
  if (args.p_max < 1 || args.p_max > kMaxVerifyTrianglesP) {
    std::cerr << "--p-max must be in 1.." << kMaxVerifyTrianglesP << '\n';
    return kExitUsage;
  }

  std::vector<NamedCheck> checks;
  using fct::verify::Failure;

  if (all || args.scope == "triangles") {
    const int n_max = args.n_max < 0 ? 30 : args.n_max;
    if (n_max > kMaxVerifyTrianglesN) {
      std::cerr << "triangle sweeps accept --n-max up to "
                << kMaxVerifyTrianglesN << '\n';
      return kExitUsage;
    }
    const int p_max = args.p_max;
    auto tag = [&](const std::string& name) {
      return name + " (p<=" + std::to_string(p_max) +
             ", n<=" + std::to_string(n_max) + ")";
    };
    checks.push_back({tag("triangles/method-equivalence"), [=]() {
                        return fct::verify::method_equivalence(p_max, n_max);
                      }});
    checks.push_back({tag("triangles/row-sums"), [=]() {
                        return fct::verify::row_sums(p_max, n_max);
                      }});
    checks.push_back({"triangles/catalan-recurrence (n<=" +
                          std::to_string(n_max) + ")",
                      [=]() {
                        return fct::verify::catalan_triangle_recurrence(n_max);
                      }});
    checks.push_back({tag("triangles/boundary-nonnegativity"), [=]() {
                        return fct::verify::boundary_and_nonnegativity(p_max,
                                                                       n_max);
                      }});
    checks.push_back({"triangles/binomial-identity (m,h<=12)", []() {
                        return fct::verify::identity_e4(12, 12);
                      }});
  }

  if (all || args.scope == "paths") {
    const int n_max = args.n_max < 0 ? 6 : args.n_max;
    if (n_max > kMaxVerifyPathsN) {
      std::cerr << "path sweeps accept --n-max up to " << kMaxVerifyPathsN
                << '\n';
      return kExitUsage;
    }
    checks.push_back({"paths/constraint-calibration", []() {
                        return fct::verify::lattice_calibration();
                      }});
    checks.push_back({"paths/closed-form-agreement (p in 2..5, n<=" +
                          std::to_string(n_max) + ")",
                      [=]() { return fct::verify::lattice_oracle(n_max); }});
  }

  if (all || args.scope == "partitions") {
    const int doubles_max = args.n_max < 0 ? 5 : args.n_max;
    if (doubles_max > kMaxVerifyDoublesN) {
      std::cerr << "partition sweeps accept --n-max up to "
                << kMaxVerifyDoublesN << " (double partitions)\n";
      return kExitUsage;
    }
    const int partitions_max = std::min(doubles_max + 1, 8);
    const int matchings_max = std::min(doubles_max + 1, 6);
    const int matching_doubles_max = std::min(doubles_max, 5);
    checks.push_back(
        {"partitions/cardinalities (doubles n<=" + std::to_string(doubles_max) +
             ")",
         [=]() {
           return fct::verify::enumeration_cardinalities(
               partitions_max, matchings_max, doubles_max, matching_doubles_max);
         }});
    checks.push_back(
        {"partitions/box-triangle-correspondence", [=]() {
           return fct::verify::box_correspondence(matchings_max, doubles_max,
                                                  matching_doubles_max);
         }});
    checks.push_back({"partitions/f-recurrence (n<=" +
                          std::to_string(doubles_max) + ")",
                      [=]() { return fct::verify::f_recurrence(doubles_max); }});
  }

  if (all || args.scope == "sequences") {
    fct::ReferenceData ref;
    try {
      ref = fct::load_reference_data(args.data_dir);
    } catch (const std::exception& e) {
      std::cerr << "cannot load reference data: " << e.what() << '\n';
      return kExitUsage;
    }
    for (int p = 1; p <= 10; ++p) {
      checks.push_back({"sequences/signed-sums p=" + std::to_string(p),
                        [ref, p]() -> fct::verify::Failure {
                          const auto check = fct::check_signed_sums(ref, p);
                          if (!check.ok) {
                            return check.detail;
                          }
                          return std::nullopt;
                        }});
    }
    checks.push_back({"sequences/p5-triangle-table",
                      [ref]() -> fct::verify::Failure {
                        const auto check = fct::check_p5_table(ref);
                        if (!check.ok) {
                          return check.detail;
                        }
                        return std::nullopt;
                      }});
  }

  return run_checks(checks);
}

int run_enumerate(const EnumerateArgs& args) {
  const auto family = fct::parse_family(args.family);
  const auto format = fct::parse_output_format(args.format);
  if (!family || !format) {
    std::cerr << "unknown family or format\n";
    return kExitUsage;
  }
  if (args.n < 0) {
    std::cerr << "--n must be >= 0\n";
    return kExitUsage;
  }
  const int limit = enumeration_limit(*family);
  if (args.n > limit) {
    std::cerr << "enumerate refuses --n " << args.n << " for family '"
              << fct::to_string(*family) << "'; the documented limit is n <= "
              << limit << '\n';
    return kExitUsage;
  }
  std::cout << fct::render_enumeration(fct::build_enumeration(*family, args.n),
                                       *format);
  return kExitOk;
}

double median_seconds(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

int run_bench(const BenchArgs& args) {
  const auto format = fct::parse_output_format(args.format);
  if (!format || *format == fct::OutputFormat::kJson) {
    std::cerr << "bench supports --format table or csv\n";
    return kExitUsage;
  }
  if (args.p < 1 || args.n_max < 0 || args.repetitions < 1) {
    std::cerr << "bench requires --p >= 1, --n-max >= 0, --repetitions >= 1\n";
    return kExitUsage;
  }
  const fct::TriangleParams params{args.p, args.n_max};

  // Refuse to time methods that disagree.
  {
    const auto conv = fct::triangle_convolution(params);
    if (!fct::same_cells(conv, fct::triangle_alternating(params)) ||
        !fct::same_cells(conv, fct::triangle_closed_form(params))) {
      std::cerr << "methods disagree on p=" << args.p
                << ", n_max=" << args.n_max << "; refusing to benchmark\n";
      return kExitCheckFailed;
    }
  }

  struct Entry {
    const char* name;
    fct::Triangle (*build)(fct::TriangleParams);
  };
  const Entry entries[] = {
      {"convolution", fct::triangle_convolution},
      {"alternating", fct::triangle_alternating},
      {"closed-form", fct::triangle_closed_form},
  };

  if (*format == fct::OutputFormat::kCsv) {
    std::cout << "method,p,n_max,repetitions,median_seconds\n";
  }
  for (const Entry& entry : entries) {
    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(args.repetitions));
    for (int r = 0; r < args.repetitions; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto t = entry.build(params);
      const auto stop = std::chrono::steady_clock::now();
      (void)t;
      samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    const double median = median_seconds(std::move(samples));
    if (*format == fct::OutputFormat::kCsv) {
      std::cout << entry.name << ',' << args.p << ',' << args.n_max << ','
                << args.repetitions << ',' << median << '\n';
    } else {
      std::cout << entry.name << "  p=" << args.p << "  n_max=" << args.n_max
                << "  repetitions=" << args.repetitions << "  median_seconds="
                << median << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fuss-Catalan triangle toolkit"};
  app.require_subcommand(1);

  TriangleArgs triangle_args;
  auto* triangle = app.add_subcommand("triangle", "Generate a triangle");
  triangle->add_option("--p", triangle_args.p, "Order p (>= 1)")->required();
  triangle->add_option("--n-max", triangle_args.n_max, "Largest row (>= 0)")
      ->required();
  triangle->add_option("--method", triangle_args.method,
                       "convolution | alternating | closed-form");
  triangle->add_option("--format", triangle_args.format, "table | csv | json");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--scope", verify_args.scope,
                     "all | triangles | paths | partitions | sequences");
  verify->add_option("--p-max", verify_args.p_max, "Largest order (triangles)");
  verify->add_option("--n-max", verify_args.n_max,
                     "Sweep bound (per-scope default when omitted)");
  verify->add_option("--data-dir", verify_args.data_dir,
                     "Directory holding the reference data files");

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List one family");
  enumerate
      ->add_option("--family", enumerate_args.family,
                   "matchings | partitions | double-partitions | "
                   "matching-doubles")
      ->required();
  enumerate->add_option("--n", enumerate_args.n, "Size parameter")->required();
  enumerate->add_option("--format", enumerate_args.format,
                        "table | csv | json");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the three constructions");
  bench->add_option("--p", bench_args.p, "Order p (>= 1)")->required();
  bench->add_option("--n-max", bench_args.n_max, "Largest row (>= 0)")
      ->required();
  bench->add_option("--repetitions", bench_args.repetitions,
                    "Samples per method (median reported)");
  bench->add_option("--format", bench_args.format, "table | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (triangle->parsed()) {
      return run_triangle(triangle_args);
    }
    if (verify->parsed()) {
      return run_verify(verify_args);
    }
    if (enumerate->parsed()) {
      return run_enumerate(enumerate_args);
    }
    if (bench->parsed()) {
      return run_bench(bench_args);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
