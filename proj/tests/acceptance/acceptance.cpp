// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "thetapairs/curve.hpp"
#include "thetapairs/error.hpp"
#include "thetapairs/factor.hpp"
#include "thetapairs/filter.hpp"
#include "thetapairs/group.hpp"
#include "thetapairs/maps.hpp"
#include "thetapairs/triangle.hpp"

namespace tp = thetapairs;
using oracle::Rat;
using oracle::rat;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool ok() const { return !failed_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const std::string& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
  std::string note;

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

tp::CurveConfig cfg(long k, long l, long s, long r) {
  return tp::make_config(k, l, tp::make_angle(s, r));
}

tp::ECPoint image(const tp::CurveConfig& c, const std::string& name) {
  for (const tp::NinePoint& p : tp::nine_points(c)) {
    if (p.name == name) return p.ec;
  }
  throw std::logic_error(name);
}

std::string str(const Rat& q) { return q.get_str(); }

void criterion_1(Checker& ck) {
  const tp::CurveConfig c = cfg(1, 2, 1, 2);
  ck.expect(c.a == rat(-169, 12), "a = " + str(c.a));
  ck.expect(c.b == rat(610, 27), "b = " + str(c.b));

  const tp::HolmPoint p0 = tp::tangent_point_p0(c);
  ck.expect(p0.x == rat(-1, 3) && p0.y == rat(-2, 3), "P0");
  const Rat beta = rat(1, 2);
  const Rat lhs = 2 * p0.x * (p0.x + beta - 1) * (p0.x + beta + 1);
  const Rat rhs = 1 * p0.y * (p0.y + beta - 1) * (p0.y + beta + 1);
  ck.expect(lhs == rat(35, 54) && rhs == rat(35, 54), "P0 sides = 35/54");

  const tp::ECPoint q3 = tp::to_jacobian(c, {rat(1, 2), rat(1, 2)});
  ck.expect(q3 == tp::ECPoint(rat(-23, 6), rat(-9, 2)), "P3 image");
  ck.expect(q3.Y() * q3.Y() == q3.X() * q3.X() * q3.X() + c.a * q3.X() + c.b, "P3 image on E");

  const auto [ax, ay] = tp::areas(c, p0);
  ck.expect(ax == rat(35, 216) && ay == rat(35, 108), "areas at P0");
  const tp::SquarefreeDecomposition nx = tp::squarefree_part(ax), ny = tp::squarefree_part(ay);
  ck.expect(nx.squarefree_part == 210 && ny.squarefree_part == 105, "square-free parts");
  ck.expect(oracle::squarefree_part(ax) == 210 && oracle::squarefree_part(ay) == 105,
            "trial-division oracle");

  const tp::ThetaTriangle t = tp::triangle_from_x(c, p0.x);
  ck.expect(t.side_a == rat(35, 36) && t.side_b == rat(2, 3) && t.side_c == rat(31, 36),
            "triangle sides");
  const tp::ThetaTriangle s = tp::scale_triangle(t, 36);
  ck.expect(s.side_a == 35 && s.side_b == 24 && s.side_c == 31, "scaled sides");
  ck.expect(35 * 35 + 24 * 24 - 35 * 24 == 31 * 31, "law of cosines");
  ck.expect(s.normalized_area == 210, "normalized area 210");
}

void criterion_2(Checker& ck) {
  for (const oracle::Config& o : oracle::random_configs(120, 2024)) {
    const tp::CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const auto [a, b] = oracle::jacobian_coefficients(o.k, o.l, c.beta());
    const std::string id = std::to_string(o.k) + "," + std::to_string(o.l) + "," +
                           std::to_string(o.s) + "/" + std::to_string(o.r);
    ck.expect(c.a == a && c.b == b, "coefficients " + id);
    const Rat disc = tp::discriminant(c);
    ck.expect(disc == oracle::weierstrass_discriminant(c.a, c.b), "discriminant " + id);
    ck.expect(disc != 0, "nonsingular " + id);
    ck.expect(tp::j_invariant(c) == -110592 * c.a * c.a * c.a / disc, "j " + id);
  }
  ck.note = "120 configs";
}

void criterion_3(Checker& ck) {
  for (const oracle::Config& o : oracle::random_configs(120, 2024)) {
    const tp::CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const std::string id = std::to_string(o.k) + "," + std::to_string(o.l) + "," +
                           std::to_string(o.s) + "/" + std::to_string(o.r);
    const std::vector<tp::NinePoint> rows = tp::nine_points(c);
    ck.expect(rows.size() == 9, "nine rows " + id);
    for (const tp::NinePoint& p : rows) {
      ck.expect(tp::ec_contains(c, p.ec), p.name + " on E " + id);
      ck.expect(tp::to_jacobian(c, p.holm) == p.ec, p.name + " forward map " + id);
    }
    ck.expect(rows[0].ec.X() == rows[8].ec.X() && rows[0].ec.Y() == -rows[8].ec.Y(),
              "P1 = -P9 " + id);
    const Rat beta = c.beta(), m = beta * beta - 1;
    const Rat X = Rat(o.k * o.l) * (3 + beta * beta) / 3;
    const Rat expected = Rat(o.k * o.k * (o.k - o.l) * (o.k - o.l) * o.l * o.l) * m * m;
    ck.expect(X * X * X + c.a * X + c.b == expected, "f(kl(3+b^2)/3) " + id);
  }
  ck.note = "120 configs x 9 points";
}

void criterion_4(Checker& ck) {
  std::size_t min_points = SIZE_MAX;
  for (const oracle::Config& o : oracle::random_configs(10, 404)) {
    const tp::CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const tp::ECPoint g = image(c, "P3"), h = image(c, "P2");
    std::size_t points = 0;
    for (int i = -6; i <= 6; ++i) {
      const tp::ECPoint gi = tp::scalar_mul(c, i, g);
      for (int j = -6; j <= 6; ++j) {
        const tp::ECPoint q = tp::add(c, gi, tp::scalar_mul(c, j, h));
        tp::HolmPoint p;
        try {
          p = tp::from_jacobian(c, q);
        } catch (const tp::Error& e) {
          ck.expect(e.code() == tp::ErrorCode::ExceptionalPoint, "unexpected error");
          continue;
        }
        ck.expect(tp::holm_contains(c, p), "inverse image on H");
        const tp::ECPoint back = tp::to_jacobian(c, p);
        ck.expect(back == q, "to(from(Q)) = Q");
        ck.expect(tp::from_jacobian(c, back) == p, "from(to(P)) = P");
        ++points;
      }
    }
    min_points = std::min(min_points, points);
  }
  ck.expect(min_points >= 100, "at least 100 points per config");
  ck.note = "10 configs, >= " + std::to_string(min_points) + " points each";
}

void criterion_5(Checker& ck) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> small(-7, 7);
  for (const oracle::Config& o : oracle::random_configs(10, 505)) {
    const tp::CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const tp::ECPoint g = image(c, "P3"), h = image(c, "P4");
    auto on = [&](const tp::ECPoint& p) {
      ck.expect(tp::ec_contains(c, p), "intermediate on E");
      return p;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const tp::ECPoint p = on(tp::add(c, on(tp::scalar_mul(c, small(rng), g)),
                                       on(tp::scalar_mul(c, small(rng), h))));
      const tp::ECPoint q = on(tp::scalar_mul(c, small(rng), g));
      const tp::ECPoint r = on(tp::scalar_mul(c, small(rng), h));
      ck.expect(on(tp::add(c, p, q)) == on(tp::add(c, q, p)), "commutativity");
      ck.expect(on(tp::add(c, on(tp::add(c, p, q)), r)) == on(tp::add(c, p, on(tp::add(c, q, r)))),
                "associativity");
      const long m = small(rng), n = small(rng);
      ck.expect(on(tp::scalar_mul(c, m + n, p)) ==
                    on(tp::add(c, on(tp::scalar_mul(c, m, p)), on(tp::scalar_mul(c, n, p)))),
                "[m+n]P = [m]P + [n]P");
    }
  }
  ck.note = "10 configs x 10 trials";
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string command = std::string(THETA_PAIRS_CLI) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buffer[65536];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// Certificates emitted for the right-angle configs, kept for criterion 7.
std::vector<nlohmann::json> right_angle_certificates;

bool independently_squarefree(const nlohmann::json& n, const nlohmann::json& primes) {
  oracle::Int product = 1, previous = 0;
  for (const auto& p : primes) {
    const oracle::Int prime(p.get<std::string>());
    if (prime <= previous || mpz_probab_prime_p(prime.get_mpz_t(), 40) == 0) return false;
    product *= prime;
    previous = prime;
  }
  return product == oracle::Int(n.get<std::string>());
}

void criterion_6(Checker& ck) {
  const long kl[][2] = {{1, 2}, {2, 3}, {3, 5}, {5, 6}};
  const char* angles[] = {"0/1", "1/2", "-1/2", "3/5"};
  int succeeded = 0;
  std::string failed_configs;
  for (const auto& [k, l] : kl) {
    for (const char* cos : angles) {
      const std::string flags =
          "--k " + std::to_string(k) + " --l " + std::to_string(l) + " --cos " + cos;
      const CliRun gen = run_cli("generate " + flags + " --count 2 --max-multiplier 60 2>/dev/null");
      const std::vector<std::string> lines = split_lines(gen.out);
      bool ok = gen.exit_code == 0 && lines.size() >= 2;
      ck.expect(gen.exit_code == 0 || gen.exit_code == 3, "generate exit code for " + flags);

      const std::string path = std::string(THETA_PAIRS_TMP) + "/acceptance_pairs.jsonl";
      std::ofstream(path) << gen.out;
      const CliRun verify = run_cli("verify < " + path + " 2>/dev/null");
      ck.expect(verify.exit_code == 0, "verify " + flags);
      ok = ok && verify.exit_code == 0;

      for (const std::string& line : lines) {
        const auto cert = nlohmann::json::parse(line);
        const oracle::Int nx(cert["N_x"].get<std::string>()), ny(cert["N_y"].get<std::string>());
        const bool ratio = l * nx == k * ny;
        const bool squarefree = independently_squarefree(cert["N_x"], cert["N_x_primes"]) &&
                                independently_squarefree(cert["N_y"], cert["N_y_primes"]);
        ck.expect(ratio, "l N_x = k N_y for " + flags);
        ck.expect(squarefree, "square-free for " + flags);
        ok = ok && ratio && squarefree;
        if (std::string(cos) == "0/1") right_angle_certificates.push_back(cert);
      }
      if (ok) {
        ++succeeded;
      } else {
        failed_configs += " (" + flags + ")";
      }
    }
  }
  ck.expect(succeeded >= 12, "only " + std::to_string(succeeded) + "/16 configs succeeded");
  ck.note = std::to_string(succeeded) + "/16 configs" +
            (failed_configs.empty() ? "" : "; exhausted:" + failed_configs);
}

void criterion_7(Checker& ck) {
  ck.expect(!right_angle_certificates.empty(), "no right-angle certificates from criterion 6");
  for (const auto& cert : right_angle_certificates) {
    const oracle::Int k(cert["config"]["k"].get<std::string>());
    const oracle::Int l(cert["config"]["l"].get<std::string>());
    for (const char* key : {"triangle_x", "triangle_y"}) {
      Rat a(cert[key]["a"].get<std::string>()), b(cert[key]["b"].get<std::string>()),
          c(cert[key]["c"].get<std::string>()), area(cert[key]["normalized_area"].get<std::string>());
      a.canonicalize();
      b.canonicalize();
      c.canonicalize();
      area.canonicalize();
      ck.expect(c * c == a * a + b * b, "right triangle");
      ck.expect(area == a * b / 2, "ordinary area");
    }
    ck.expect(l * oracle::Int(cert["N_x"].get<std::string>()) ==
                  k * oracle::Int(cert["N_y"].get<std::string>()),
              "ratio k : l");
  }
  ck.note = std::to_string(right_angle_certificates.size()) + " certificates";
}

void criterion_8(Checker& ck) {
  const tp::CurveConfig c = cfg(1, 2, 1, 2);
  const tp::HolmPoint p0 = tp::tangent_point_p0(c);
  const tp::FilterReport r = tp::evaluate_filters(c, p0);
  ck.expect(r.positive, "P0 positive");
  ck.expect(!r.parity_ok, "P0 parity_ok = false");
  const auto [ax, ay] = tp::areas(c, p0);
  const tp::BigInt nx = tp::squarefree_part(ax).squarefree_part;
  const tp::BigInt ny = tp::squarefree_part(ay).squarefree_part;
  ck.expect(c.l * nx != c.k * ny, "l N_x != k N_y");
  const Rat ratio = Rat(c.l * nx) / Rat(c.k * ny);
  ck.expect(ratio == 4, "ratio = 4");
  ck.expect(oracle::is_rational_square(ratio), "ratio is a square");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Checker&)> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "worked-config golden values", criterion_1, 1},
      {2, "invariant identities", criterion_2, 10},
      {3, "nine-point table", criterion_3, 30},
      {4, "map roundtrip", criterion_4, 60},
      {5, "group law", criterion_5, 60},
      {6, "pipeline acceptance", criterion_6, 30 * 60},
      {7, "right-angle reduction", criterion_7, 1},
      {8, "filter necessity", criterion_8, 1},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Checker ck;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ck.expect(seconds <= c.budget_seconds, "runtime over budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "criterion " << c.number << ": " << (ck.ok() ? "PASS" : "FAIL") << " - "
              << c.title << " (" << ck.checks() << " checks, " << timing
              << (ck.note.empty() ? "" : ", " + ck.note) << ")";
    if (!ck.ok()) std::cout << " :: " << ck.summary();
    std::cout << std::endl;
    failed += ck.ok() ? 0 : 1;
  }
  return failed;
}
