// Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigmalucas/arith.hpp"
#include "sigmalucas/cli.hpp"
#include "sigmalucas/lucas.hpp"
#include "sigmalucas/pell.hpp"
#include "sigmalucas/sigma3.hpp"
#include "sigmalucas/solver.hpp"

using namespace sigmalucas;
using solver::EquationInstance;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_s) out.fail("time limit exceeded");
  if (!out.ok) ++failures;
  std::printf("%s  %d  %-40s %8.3f s (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string str(const Int& n) { return to_string(n); }

// (x, y) with y <= y_max and x^2 - D y^2 = rhs, x, y >= 0, by direct search.
std::vector<std::pair<Int, Int>> pell_brute(long D, int rhs, long y_max) {
  std::vector<std::pair<Int, Int>> out;
  for (long y = 0; y <= y_max; ++y) {
    const Int x2 = Int(D) * y * y + rhs;
    if (x2 < 0) continue;
    if (is_square(x2)) out.emplace_back(isqrt(x2), Int(y));
  }
  return out;
}

std::vector<std::pair<Int, Int>> pell_solver(const pell::PellShape& shape, int rhs, long y_max) {
  // Grow the request until the last solution passes y_max.
  for (std::size_t count = 8;; count *= 2) {
    const auto sols = pell::solve_pm4(shape, rhs, count);
    if (sols.size() < count || sols.back().y > y_max) {
      std::vector<std::pair<Int, Int>> out;
      for (const auto& s : sols)
        if (s.y <= y_max) out.emplace_back(s.x, s.y);
      return out;
    }
  }
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto full = args;
  full.insert(full.begin(), "--quiet");
  const int code = cli::run(full, out, err);
  return std::to_string(code) + "\n" + out.str();
}

}  // namespace

int main() {
  criterion(1, "identity suite", 5, [](Outcome& o) {
    const auto summary = cli::run_identity_sweep(cli::IdentitySweep{});
    if (summary.checked == 0) o.fail("nothing checked");
    if (!summary.failures.empty())
      o.fail(std::to_string(summary.failures.size()) + " failures, first: " + summary.failures.front().description);
    o.detail = o.ok ? std::to_string(summary.checked) + " instances" : o.detail;
  });

  criterion(2, "Pell completeness", 10, [](Outcome& o) {
    constexpr long y_max = 10'000;
    std::size_t cases = 0;
    for (long P = 1; P <= 6; ++P) {
      std::vector<std::pair<pell::PellShape, int>> shapes{{pell::PellShape::plus4(P), 4}, {pell::PellShape::plus4(P), -4}};
      if (P >= 3) shapes.emplace_back(pell::PellShape::minus4(P), 4);
      for (const auto& [shape, rhs] : shapes) {
        ++cases;
        if (pell_brute(to_i64(shape.D), rhs, y_max) != pell_solver(shape, rhs, y_max))
          o.fail("D=" + str(shape.D) + " rhs=" + std::to_string(rhs));
      }
    }
    if (o.ok) o.detail = std::to_string(cases) + " (D, rhs) cases";
  });

  criterion(3, "equation (3, 0)", 1, [](Outcome& o) {
    const EquationInstance e{3, 0};
    const auto brute = solver::brute_force(e, 27);
    if (brute.solutions != std::vector<Int>{10}) o.fail("brute force");
    std::set<Int> values;
    for (const auto& pattern : solver::recognize_patterns(e, 16, 8)) {
      for (const auto& s : solver::family_solutions(pattern, 6).solutions) values.insert(s.n);
    }
    if (values != std::set<Int>{10, 65, 20737}) o.fail("family values");
    for (const auto& n : values) {
      if (arith::sigma_k(n, 2) - n * n != 3 * n) o.fail("sigma_2 check for " + str(n));
    }
  });

  criterion(4, "equation (2, 5) twin primes", 5, [](Outcome& o) {
    const EquationInstance e{2, 5};
    constexpr long k_limit = 20;
    std::set<Int> family;
    for (const auto& pattern : solver::recognize_patterns(e, 16, 8)) {
      for (const auto& s : solver::family_solutions(pattern, k_limit).solutions) family.insert(s.n);
    }
    // Twin-prime products whose larger factor is a reachable sequence index.
    std::set<Int> twins;
    for (std::uint64_t p = 2; p + 2 <= k_limit + 1; ++p) {
      if (oracle::is_prime(p) && oracle::is_prime(p + 2)) twins.insert(from_u64(p * (p + 2)));
    }
    if (family != twins) o.fail("family differs from twin-prime products");
    for (const auto& n : family) {
      if (!solver::satisfies(e, n) || arith::sigma_k(n, 2) - n * n != 2 * n + 5) o.fail("sigma_2 check for " + str(n));
    }
    std::set<Int> semi;
    for (const auto& pair : solver::semiprime_search(e, 1000)) semi.insert(pair.product());
    for (const auto& n : family) {
      if (!semi.count(n)) o.fail("semiprime search misses " + str(n));
    }
    for (const auto& pair : solver::semiprime_search(e, 1000)) {
      if (pair.q - pair.p != 2) o.fail("non-twin semiprime solution " + str(pair.product()));
    }
    if (o.ok) o.detail = std::to_string(family.size()) + " family values, " + std::to_string(semi.size()) + " twin pairs to 10^3";
  });

  criterion(5, "semiprime equivalence", 30, [](Outcome& o) {
    std::vector<long> primes;
    for (long p = 2; p <= 200; ++p)
      if (oracle::is_prime(p)) primes.push_back(p);
    std::uint64_t checked = 0;
    for (long p : primes) {
      for (long q : primes) {
        if (p == q) continue;
        const arith::Factorization f{{{Int(std::min(p, q)), 1}, {Int(std::max(p, q)), 1}}};
        const long n = p * q;
        const long lhs = to_i64(arith::sigma_k(f, 2)) - n * n;
        for (long A = -50; A <= 50; ++A) {
          for (long B = -50; B <= 50; ++B) {
            const bool sigma_form = lhs == A * n + B;
            const bool quadratic_form = p * p + q * q + 1 - B == A * p * q;
            ++checked;
            if (sigma_form != quadratic_form)
              o.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) + " A=" + std::to_string(A) +
                     " B=" + std::to_string(B));
          }
        }
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " (p, q, A, B)";
  });

  criterion(6, "oracle cross-check to 10^7", 120, [](Outcome& o) {
    constexpr std::uint64_t limit = 10'000'000;
    constexpr long P_max = 3, m_max = 3;
    std::vector<EquationInstance> instances;
    for (auto id : solver::kAllTheorems) {
      for (long P = 0; P <= P_max; ++P) {
        for (long m = solver::uses_m(id) ? 1 : 0; m <= (solver::uses_m(id) ? m_max : 0); ++m) {
          const solver::TheoremPattern pattern{id, P, m};
          if (!pattern.side_conditions_hold()) continue;
          const auto e = pattern.equation();
          if (e.is_excluded()) continue;
          if (std::find(instances.begin(), instances.end(), e) == instances.end()) instances.push_back(e);
        }
      }
    }
    const auto brute = solver::scan_range(instances, limit);
    std::size_t compared = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& e = instances[i];
      std::set<Int> brute_pq;
      for (std::uint64_t n : brute[i]) {
        const auto f = oracle::factor(n);
        if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) brute_pq.insert(from_u64(n));
      }
      std::set<Int> found;
      for (const auto& pattern : solver::recognize_patterns(e, P_max, m_max)) {
        for (const auto& s : solver::family_solutions(pattern, 64).solutions) found.insert(s.n);
      }
      for (const auto& pair : solver::semiprime_search(e, limit / 2)) found.insert(pair.product());
      const std::string tag = "(" + str(e.A) + ", " + str(e.B) + ")";
      for (const auto& n : brute_pq) {
        if (!found.count(n)) o.fail(tag + " misses brute-force " + str(n));
      }
      for (const auto& n : found) {
        if (n <= limit && !brute_pq.count(n)) o.fail(tag + " reports " + str(n) + " not found by brute force");
      }
      compared += brute_pq.size();
    }
    if (o.ok) o.detail = std::to_string(instances.size()) + " equations, " + std::to_string(compared) + " semiprime solutions";
  });

  criterion(7, "sigma_3 suite", 60, [](Outcome& o) {
    for (const auto& hit : sigma3::scan_pq_alpha(1'000'000, true)) {
      if (!hit.even_perfect || !arith::is_even_perfect(from_u64(hit.n))) o.fail(std::to_string(hit.n) + " not even perfect");
    }
    std::vector<std::uint64_t> conj;
    for (const auto& hit : sigma3::conjecture_scan(10'000)) conj.push_back(hit.n);
    if (conj != std::vector<std::uint64_t>{6, 496, 8128}) o.fail("conjecture scan to 10^4");
    if (sigma3::divides_sigma3(28)) o.fail("28 divides sigma_3(28)");
    std::size_t perfect = 0;
    for (std::uint64_t n = 2; n <= 100'000; n += 2) {
      if (!arith::is_even_perfect(from_u64(n))) continue;
      ++perfect;
      if (n != 28 && !sigma3::divides_sigma3(from_u64(n))) o.fail(std::to_string(n) + " does not divide sigma_3");
    }
    if (perfect != 4) o.fail("expected 4 even perfect numbers below 10^5");
  });

  criterion(8, "sigma_2 sweep and parallel determinism", 60, [](Outcome& o) {
    constexpr std::uint64_t hi = 10'000'001;
    const std::size_t block = arith::default_block_size();
    std::vector<std::uint64_t> buf(block);
    std::uint64_t checksum = 0;
    for (std::uint64_t lo = 1; lo < hi; lo += block) {
      const std::uint64_t end = std::min<std::uint64_t>(hi, lo + block);
      std::span<std::uint64_t> out(buf.data(), end - lo);
      arith::sigma2_segment_into(lo, end, out);
      for (std::uint64_t v : out) checksum += v;
      for (std::uint64_t n : {lo, end - 1}) {
        if (out[n - lo] != oracle::sigma2_pairs(n)) o.fail("sigma_2(" + std::to_string(n) + ")");
      }
    }
    // sum_{n<=N} sigma_2(n) = sum_d d^2 floor(N/d), compared mod 2^64
    std::uint64_t expect = 0;
    for (std::uint64_t d = 1; d < hi; ++d) expect += d * d * ((hi - 1) / d);
    if (checksum != expect) o.fail("sweep checksum");

    const std::vector<std::string> solve{"solve", "--a", "6", "--b", "-3", "--brute-cap", "2000000", "--q-limit",
                                         "200000"};
    auto w1 = solve, w4 = solve;
    w1.insert(w1.end(), {"--workers", "1"});
    w4.insert(w4.end(), {"--workers", "4", "--block-size", "65536"});
    if (run_cli(w1) != run_cli(w4)) o.fail("solve report differs across workers");
    if (run_cli({"sigma3", "--bound", "300000", "--workers", "1"}) != run_cli({"sigma3", "--bound", "300000", "--workers", "4"}))
      o.fail("sigma3 report differs across workers");
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
