#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thetapairs/curve.hpp"
#include "thetapairs/error.hpp"
#include "thetapairs/generator.hpp"
#include "thetapairs/serialize.hpp"

namespace tp = thetapairs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFailure = 1;

struct ConfigFlags {
  std::string k;
  std::string l;
  std::string cos;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--k", flags.k, "Square-free positive integer k")->required();
  cmd->add_option("--l", flags.l, "Square-free positive integer l, coprime to k")->required();
  cmd->add_option("--cos", flags.cos, "cos(theta) as an exact fraction s/r, e.g. 1/2")->required();
}

// "s/r" without reduction, so that 2/4 is reported as NotReduced.
tp::Angle parse_angle(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return tp::make_angle(tp::parse_integer(text), 1);
  return tp::make_angle(tp::parse_integer(text.substr(0, slash)),
                        tp::parse_integer(text.substr(slash + 1)));
}

tp::CurveConfig parse_config(const ConfigFlags& flags) {
  return tp::make_config(tp::parse_integer(flags.k), tp::parse_integer(flags.l),
                         parse_angle(flags.cos));
}

unsigned worker_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("THETA_PAIRS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) threads = std::min<unsigned long>(threads, static_cast<unsigned long>(cap));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring THETA_PAIRS_THREADS=" << env << "\n";
    }
  }
  return threads;
}

int cmd_generate(const tp::CurveConfig& cfg, std::size_t count, long max_multiplier,
                 bool distinct) {
  tp::GenerateOptions options;
  options.count = count;
  options.max_multiplier = max_multiplier;
  options.distinct = distinct;
  options.threads = worker_threads();
  const tp::GenerateResult result =
      tp::run_generation(cfg, options, [](const tp::PairCertificate& cert) {
        std::cout << tp::certificate_line(cert) << '\n' << std::flush;
      });
  const tp::GenerateStats& s = result.stats;
  std::cerr << "seed " << result.seed.label << "; " << result.certificates.size()
            << " certificate(s) from " << s.candidates << " candidate(s); rejected: "
            << s.exceptional << " exceptional, " << s.not_positive << " non-positive, "
            << s.parity_rejected << " parity, " << s.factor_budget << " factorization budget, "
            << s.duplicates << " duplicate\n";
  if (result.exhausted) {
    std::cerr << "BudgetExhausted: fewer than " << count << " certificate(s) with multiplier <= "
              << max_multiplier << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_verify(std::istream& in) {
  std::string line;
  std::size_t number = 0, passed = 0, failed = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      --number;
      continue;
    }
    std::vector<std::string> reasons;
    try {
      const tp::PairCertificate cert = tp::certificate_from_json(nlohmann::ordered_json::parse(line));
      const tp::VerifyResult r = tp::verify_certificate(cert);
      reasons = r.reasons;
    } catch (const nlohmann::json::exception&) {
      reasons = {"ParseError"};
    } catch (const tp::Error& e) {
      reasons = {e.code() == tp::ErrorCode::ParseError ? "ParseError" : "ConfigInvalid"};
    }
    if (reasons.empty()) {
      ++passed;
      std::cout << "line " << number << ": PASS\n";
    } else {
      ++failed;
      std::cout << "line " << number << ": FAIL";
      for (std::size_t i = 0; i < reasons.size(); ++i) std::cout << (i ? ", " : " ") << reasons[i];
      std::cout << '\n';
    }
  }
  std::cerr << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for pairs of theta-congruent numbers in a fixed ratio k : l."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  1  verify: at least one certificate failed\n"
      "  2  usage error or invalid configuration\n"
      "  3  generate: fewer certificates than requested within --max-multiplier\n"
      "Environment:\n"
      "  THETA_PAIRS_THREADS  upper bound on worker threads used by generate");

  ConfigFlags info_flags, points_flags, gen_flags;
  auto* info = app.add_subcommand("curve-info", "Print the Weierstrass model and invariants as JSON");
  add_config_flags(info, info_flags);
  auto* points = app.add_subcommand("points", "Print the special-point correspondence as JSON");
  add_config_flags(points, points_flags);
  auto* gen = app.add_subcommand("generate", "Stream pair certificates as JSON lines");
  add_config_flags(gen, gen_flags);
  std::size_t count = 1;
  long max_multiplier = 60;
  bool distinct = false;
  gen->add_option("--count", count, "Number of certificates to emit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--max-multiplier", max_multiplier, "Largest n in +-[n]Q to try")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_flag("--distinct", distinct, "Skip pairs (N_x, N_y) already emitted");
  app.add_subcommand("verify", "Check JSON-line certificates from stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) {
      std::cout << tp::curve_info_json(parse_config(info_flags)).dump(2) << '\n';
      return kExitOk;
    }
    if (*points) {
      std::cout << tp::points_json(parse_config(points_flags)).dump(2) << '\n';
      return kExitOk;
    }
    if (*gen) return cmd_generate(parse_config(gen_flags), count, max_multiplier, distinct);
    return cmd_verify(std::cin);
  } catch (const tp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
