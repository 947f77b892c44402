// cutplane: evaluate, trace, grid and conformance-check the branch-cut functions.
//
//   cutplane eval arccot 1+0i
//   cutplane trace arcsin re-upper --range 1.5:3 --n 4
//   cutplane grid Y --range -0.5:0.5:-0.5:0.5 --n 3 --out y.csv
//   cutplane check --tol 1e-9 --seed 42 --out report.jsonl
//
// Exit codes: 0 ok, 1 conformance failures, 2 singular input, 64 usage, 74 I/O.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutplane/conformance.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failures = 1;
constexpr int exit_singular = 2;
constexpr int exit_usage = 64;
constexpr int exit_io = 74;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cutplane::FunctionId require_function(const std::string& s) {
  const auto f = cutplane::parse_function(s);
  if (!f) throw UsageError("unknown function '" + s + "'");
  return *f;
}

std::vector<double> parse_range(const std::string& s, std::size_t min_parts, std::size_t max_parts) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) {
    double v = 0;
    if (!cutplane::detail::parse_real(part, v) || !std::isfinite(v)) throw UsageError("bad --range '" + s + "'");
    out.push_back(v);
  }
  if (out.size() < min_parts || out.size() > max_parts) throw UsageError("bad --range '" + s + "'");
  return out;
}

// Writes to --out when given, otherwise stdout.
template <class Fn>
int with_output(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return std::cout ? exit_ok : exit_io;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "cutplane: cannot open '" << path << "' for writing\n";
    return exit_io;
  }
  write(file);
  file.flush();
  if (!file) {
    std::cerr << "cutplane: write to '" << path << "' failed\n";
    return exit_io;
  }
  return exit_ok;
}

// CLI11 reads "-2+0i" or "-1:2" as an unknown short option; a leading
// "-" followed by a digit, '.', 'i' or ':' is always a value here.
std::vector<std::string> protect_negative_values(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.size() >= 2 && a[0] == '-' && a[1] != '-' &&
        (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.' || a[1] == 'i' || a[1] == ':'))
      a = " " + a;
    args.push_back(std::move(a));
  }
  return args;  // CLI11 wants reverse order
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal branches of inverse trigonometric and hyperbolic functions on cut planes"};
  app.require_subcommand(1);

  std::string fn_opt, fn_pos, z_text, axis_text, range_text, out_path, n_text;
  double tol = 1e-9;
  int samples = 1000;
  std::uint64_t seed = 42;

  auto* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  eval->add_option("function", fn_pos, "Function name");
  eval->add_option("z", z_text, "Complex literal a+bi, zero signs kept (1.5-0i, +0+2i)");
  eval->add_option("--fn", fn_opt, "Function name");

  auto* tr = app.add_subcommand("trace", "CSV trace along one side of an axis");
  tr->add_option("function", fn_pos, "Function name");
  tr->add_option("axis", axis_text, "re-upper, re-lower, im-left or im-right (re = re-upper, im = im-right)")
      ->required();
  tr->add_option("--fn", fn_opt, "Function name");
  tr->add_option("--range", range_text, "t0:t1")->default_val("-4:4");
  tr->add_option("--n", n_text, "Sample count")->default_val("64");
  tr->add_option("--out", out_path, "Output file (default stdout)");

  auto* gr = app.add_subcommand("grid", "CSV grid x,y,re,im,status, y-major");
  gr->add_option("function", fn_pos, "Function name");
  gr->add_option("--fn", fn_opt, "Function name");
  gr->add_option("--range", range_text, "x0:x1:y0:y1 (or x0:x1 for a square grid)")->default_val("-2:2:-2:2");
  gr->add_option("--n", n_text, "Samples per axis, N or NX:NY")->default_val("65");
  gr->add_option("--out", out_path, "Output file (default stdout)");

  auto* ck = app.add_subcommand("check", "Seeded conformance run against the reference oracle");
  ck->add_option("--tol", tol, "Tolerance")->default_val(1e-9);
  ck->add_option("--n", samples, "Samples per function")->default_val(1000);
  ck->add_option("--seed", seed, "RNG seed")->default_val(42);
  ck->add_option("--out", out_path, "Report file, JSON lines (default stdout)");

  try {
    app.parse(protect_negative_values(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  z_text = trim(z_text);
  range_text = trim(range_text);

  using namespace cutplane;
  try {
    auto pick_function = [&] {
      if (!fn_opt.empty() && !fn_pos.empty()) throw UsageError("give the function once, positionally or with --fn");
      const std::string& s = fn_opt.empty() ? fn_pos : fn_opt;
      if (s.empty()) throw UsageError("missing function name");
      return require_function(s);
    };

    if (*eval) {
      // "eval --fn arcsin 0.5" puts the literal in the first positional
      if (!fn_opt.empty() && z_text.empty()) std::swap(z_text, fn_pos);
      const FunctionId f = pick_function();
      if (z_text.empty()) throw UsageError("missing complex literal");
      const Complex z = parse_complex(z_text);
      try {
        std::cout << format_complex(evaluate(f, z)) << '\n';
      } catch (const error& e) {
        std::cout << to_string(e.kind()) << '\n';
        std::cerr << "cutplane: " << e.what() << '\n';
        return exit_singular;
      }
      return exit_ok;
    }

    if (*tr) {
      if (!fn_opt.empty() && axis_text.empty()) std::swap(axis_text, fn_pos);
      const FunctionId f = pick_function();
      const auto axis = parse_trace_axis(axis_text);
      if (!axis) throw UsageError("unknown axis '" + axis_text + "'");
      const auto r = parse_range(range_text, 2, 2);
      double n = 0;
      if (!detail::parse_real(n_text, n) || n < 1 || n != std::floor(n) || n > 1e7)
        throw UsageError("bad --n '" + n_text + "'");
      const auto rows = trace(f, *axis, r[0], r[1], static_cast<int>(n));
      return with_output(out_path, [&](std::ostream& os) { write_trace_csv(os, rows); });
    }

    if (*gr) {
      GridSpec spec;
      spec.function = pick_function();
      const auto r = parse_range(range_text, 2, 4);
      if (r.size() == 3) throw UsageError("bad --range '" + range_text + "'");
      spec.x0 = r[0];
      spec.x1 = r[1];
      spec.y0 = r.size() == 4 ? r[2] : r[0];
      spec.y1 = r.size() == 4 ? r[3] : r[1];
      const auto counts = parse_range(n_text, 1, 2);
      for (double c : counts)
        if (c != std::floor(c) || c > 1e5) throw UsageError("bad --n '" + n_text + "'");
      spec.nx = static_cast<int>(counts[0]);
      spec.ny = static_cast<int>(counts.size() == 2 ? counts[1] : counts[0]);
      try {
        spec.validate();
      } catch (const error& e) {
        throw UsageError(e.what());
      }
      const auto cells = grid(spec);
      return with_output(out_path, [&](std::ostream& os) { write_grid_csv(os, cells); });
    }

    if (*ck) {
      if (!(tol > 0)) throw UsageError("--tol must be positive");
      if (samples < 1) throw UsageError("--n must be positive");
      const auto t0 = std::chrono::steady_clock::now();
      const auto rep = run_check({tol, samples, seed});
      const int io = with_output(out_path, [&](std::ostream& os) { write_report(os, rep); });
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << "cutplane check: " << rep.records.size() << " records, " << rep.failures() << " failures, "
                << secs << " s\n";
      if (io != exit_ok) return io;
      return rep.failures() == 0 ? exit_ok : exit_failures;
    }
  } catch (const UsageError& e) {
    std::cerr << "cutplane: " << e.what() << '\n';
    return exit_usage;
  } catch (const error& e) {
    std::cerr << "cutplane: " << e.what() << '\n';
    return e.kind() == errc::parse || e.kind() == errc::precondition ? exit_usage : exit_singular;
  }
  return exit_usage;
}
