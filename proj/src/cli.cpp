#include "sigmalucas/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "sigmalucas/arith.hpp"
#include "sigmalucas/lucas.hpp"
#include "sigmalucas/pell.hpp"
#include "sigmalucas/report_format.hpp"
#include "sigmalucas/sigma3.hpp"
#include "sigmalucas/solver.hpp"

namespace sigmalucas::cli {

namespace {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Int parse_int(const std::string& text, const char* flag) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw ValidationError(std::string(flag) + ": not an integer: '" + text + "'");
  }
}

std::string seed_text(const lucas::RecurrenceSeed& s) {
  return "A0=" + to_string(s.A0) + " A1=" + to_string(s.A1) + " u=" + to_string(s.u) + " v=" + to_string(s.v);
}

void record(IdentitySummary& summary, const lucas::IdentitySides& sides, const std::string& what) {
  ++summary.checked;
  if (!sides.holds()) summary.failures.push_back({what, to_string(sides.lhs), to_string(sides.rhs)});
}

Format parse_format(const std::string& text) { return text == "tsv" ? Format::tsv : Format::json; }

class Timer {
 public:
  Timer(std::ostream& err, bool quiet, std::string label)
      : err_(err), quiet_(quiet), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (quiet_) return;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    err_ << "[" << label_ << "] " << elapsed.count() << " s\n";
  }

 private:
  std::ostream& err_;
  bool quiet_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

IdentitySummary run_identity_sweep(const IdentitySweep& sweep) {
  IdentitySummary summary;
  if (sweep.catalan) {
    for (long u = -sweep.coef_max; u <= sweep.coef_max; ++u) {
      for (long v = -sweep.coef_max; v <= sweep.coef_max; ++v) {
        for (long a0 = -sweep.seed_max; a0 <= sweep.seed_max; ++a0) {
          for (long a1 = -sweep.seed_max; a1 <= sweep.seed_max; ++a1) {
            const lucas::RecurrenceSeed seed{a0, a1, u, v};
            for (long n = 1; n <= sweep.n_max; ++n) {
              for (long r = 1; r <= n; ++r) {
                record(summary, lucas::check_catalan(seed, n, r),
                       "catalan " + seed_text(seed) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
              }
            }
          }
        }
      }
    }
  }
  if (sweep.parity) {
    using lucas::ParityVariant;
    for (const auto [variant, v, label] : {std::tuple{ParityVariant::even_v1, 1L, "even_v1"},
                                           std::tuple{ParityVariant::odd_v1, 1L, "odd_v1"},
                                           std::tuple{ParityVariant::v_minus1, -1L, "v_minus1"}}) {
      const long n_first = variant == ParityVariant::even_v1 ? 0 : 1;
      for (long u = -sweep.parity_u_max; u <= sweep.parity_u_max; ++u) {
        for (long a0 = -sweep.seed_max; a0 <= sweep.seed_max; ++a0) {
          for (long a1 = -sweep.seed_max; a1 <= sweep.seed_max; ++a1) {
            const lucas::RecurrenceSeed seed{a0, a1, u, v};
            for (long n = n_first; n <= sweep.parity_n_max; ++n) {
              record(summary, lucas::check_parity_identity(variant, seed, n),
                     std::string(label) + " " + seed_text(seed) + " n=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  if (sweep.lucas_relations) {
    for (int relation = 1; relation <= 6; ++relation) {
      const bool two_index = relation >= 3;
      for (long P = -sweep.P_max; P <= sweep.P_max; ++P) {
        for (long Q : {1L, -1L}) {
          const lucas::LucasParams params{P, Q};
          for (long k = -sweep.index_max; k <= sweep.index_max; ++k) {
            const long l_lo = two_index ? -sweep.index_max : 0;
            const long l_hi = two_index ? sweep.index_max : 0;
            for (long l = l_lo; l <= l_hi; ++l) {
              record(summary, lucas::check_lucas_relation(relation, params, k, l),
                     "relation " + std::to_string(relation) + " P=" + std::to_string(P) + " Q=" + std::to_string(Q) +
                         " k=" + std::to_string(k) + " l=" + std::to_string(l));
            }
          }
        }
      }
    }
  }
  return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for sigma_2(n) - n^2 = A n + B with Lucas-sequence families"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress timing diagnostics");

  std::string format_text = "json";
  const auto add_format = [&format_text](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  };

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve sigma_2(n) - n^2 = A n + B");
  std::string a_text, b_text;
  solver::SolveConfig config;
  solve_cmd->add_option("--a", a_text, "A")->required();
  solve_cmd->add_option("--b", b_text, "B")->required();
  solve_cmd->add_option("--brute-cap", config.brute_cap, "Upper limit of the sporadic scan")
      ->check(CLI::Range(std::uint64_t{1}, arith::kSigma2Limit));
  solve_cmd->add_option("--q-limit", config.q_limit, "Largest prime q in the semiprime search")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  solve_cmd->add_option("--p-limit,--P-limit", config.P_limit, "Largest |P| for pattern recognition")
      ->check(CLI::Range(1L, 1L << 20));
  solve_cmd->add_option("--m-limit", config.m_limit, "Largest m for pattern recognition")
      ->check(CLI::Range(1L, 1L << 16));
  solve_cmd->add_option("--k-limit", config.k_limit, "Largest family index k")->check(CLI::Range(1L, 1L << 16));
  solve_cmd->add_option("--workers", config.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  solve_cmd->add_option("--block-size", config.block_size, "Sieve block size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
  add_format(solve_cmd);

  // lucas
  auto* lucas_cmd = app.add_subcommand("lucas", "Evaluate U_k(P,Q) or V_k(P,Q)");
  std::string p_text, q_text, kind = "u";
  long index = 0;
  std::optional<std::string> lucas_format;
  lucas_cmd->add_option("--p", p_text, "P")->required();
  lucas_cmd->add_option("--q", q_text, "Q")->required();
  lucas_cmd->add_option("--kind", kind, "u or v")->check(CLI::IsMember({"u", "v"}));
  lucas_cmd->add_option("--k", index, "Index")->required();
  lucas_cmd->add_option("--format", lucas_format, "plain (default) or json")->check(CLI::IsMember({"plain", "json"}));

  // pell
  auto* pell_cmd = app.add_subcommand("pell", "Solutions of x^2 - D y^2 = +-4");
  std::string d_text;
  int rhs = 4;
  std::size_t count = 1;
  pell_cmd->add_option("--d", d_text, "D")->required();
  pell_cmd->add_option("--rhs", rhs, "+4 or -4")->check(CLI::IsMember({4, -4}));
  pell_cmd->add_option("--count", count, "Number of solutions")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  add_format(pell_cmd);

  // verify-identities
  auto* verify_cmd = app.add_subcommand("verify-identities", "Check the recurrence identities");
  IdentitySweep sweep;
  std::string lemma = "all";
  std::optional<int> relation;
  std::string pp_text = "1", qq_text = "-1";
  std::optional<long> single_k;
  long single_l = 0;
  verify_cmd
      ->add_option("--lemma", lemma, "all, catalan (alias 21), parity, or relations (alias 26)")
      ->check(CLI::IsMember({"all", "catalan", "21", "parity", "relations", "26"}));
  verify_cmd->add_option("--relation", relation, "Single Lucas relation id 1..6")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--pp", pp_text, "P for a single relation instance");
  verify_cmd->add_option("--qq", qq_text, "Q for a single relation instance");
  verify_cmd->add_option("--k", single_k, "k for a single relation instance");
  verify_cmd->add_option("--l", single_l, "l for a single relation instance");
  verify_cmd->add_option("--coef-max", sweep.coef_max, "|u|, |v| bound for the Catalan-type sweep");
  verify_cmd->add_option("--seed-max", sweep.seed_max, "|A0|, |A1| bound");
  verify_cmd->add_option("--n-max", sweep.n_max, "n bound for the Catalan-type sweep");
  verify_cmd->add_option("--parity-u-max", sweep.parity_u_max, "|u| bound for the parity identities");
  verify_cmd->add_option("--parity-n-max", sweep.parity_n_max, "n bound for the parity identities");
  verify_cmd->add_option("--p-max", sweep.P_max, "|P| bound for the Lucas relations");
  verify_cmd->add_option("--index-max", sweep.index_max, "|k|, |l| bound for the Lucas relations");
  add_format(verify_cmd);

  // sigma3
  auto* sigma3_cmd = app.add_subcommand("sigma3", "Search n = p q^alpha (or omega(n) = 2) with n | sigma_3(n)");
  std::uint64_t bound = 10'000;
  std::string mode = "theorem";
  bool unrestricted = false;
  unsigned sigma3_workers = 1;
  sigma3_cmd->add_option("--bound", bound, "Upper bound on n")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 36));
  sigma3_cmd->add_option("--mode", mode, "theorem or conjecture")->check(CLI::IsMember({"theorem", "conjecture"}));
  sigma3_cmd->add_flag("--unrestricted", unrestricted, "Theorem mode: also allow q = 1 mod 3");
  sigma3_cmd->add_option("--workers", sigma3_workers, "Worker threads")->check(CLI::Range(1U, 256U));
  add_format(sigma3_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const Format format = parse_format(format_text);
  try {
    if (solve_cmd->parsed()) {
      const solver::EquationInstance e{parse_int(a_text, "--a"), parse_int(b_text, "--b")};
      Timer timer(err, quiet, "solve");
      const auto report = solver::solve(e, config);
      if (format == Format::json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        write_tsv(out, report);
      }
      return kExitOk;
    }

    if (lucas_cmd->parsed()) {
      const lucas::LucasParams params{parse_int(p_text, "--p"), parse_int(q_text, "--q")};
      const Int value = kind == "u" ? lucas::lucas_u(params, index) : lucas::lucas_v(params, index);
      if (lucas_format.value_or("plain") == "json") {
        const Json j{{"P", to_string(params.P)}, {"Q", to_string(params.Q)}, {"kind", kind}, {"k", index},
                     {"value", to_string(value)}};
        out << j.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    if (pell_cmd->parsed()) {
      const auto shape = pell::classify(parse_int(d_text, "--d"));
      const auto solutions = pell::solve_pm4(shape, rhs, count);
      if (format == Format::json) {
        out << to_json(shape, rhs, solutions).dump(2) << '\n';
      } else {
        write_tsv(out, solutions);
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      IdentitySummary summary;
      if (relation) {
        const lucas::LucasParams params{parse_int(pp_text, "--pp"), parse_int(qq_text, "--qq")};
        if (!single_k) throw ValidationError("--relation needs --k");
        const auto sides = lucas::check_lucas_relation(*relation, params, *single_k, single_l);
        record(summary, sides,
               "relation " + std::to_string(*relation) + " P=" + to_string(params.P) + " Q=" + to_string(params.Q) +
                   " k=" + std::to_string(*single_k) + " l=" + std::to_string(single_l));
        if (format == Format::json) {
          const Json j{{"relation", *relation}, {"lhs", to_string(sides.lhs)}, {"rhs", to_string(sides.rhs)},
                       {"holds", sides.holds()}};
          out << j.dump(2) << '\n';
        } else {
          out << "relation\t" << *relation << '\t' << sides.lhs << '\t' << sides.rhs << '\n';
        }
      } else {
        sweep.catalan = lemma == "all" || lemma == "catalan" || lemma == "21";
        sweep.parity = lemma == "all" || lemma == "parity";
        sweep.lucas_relations = lemma == "all" || lemma == "relations" || lemma == "26";
        Timer timer(err, quiet, "verify-identities");
        summary = run_identity_sweep(sweep);
        if (format == Format::json) {
          Json failures = Json::array();
          for (const auto& f : summary.failures) {
            failures.push_back({{"instance", f.description}, {"lhs", f.lhs}, {"rhs", f.rhs}});
          }
          const Json j{{"checked", summary.checked}, {"failures", failures}};
          out << j.dump(2) << '\n';
        } else {
          out << "checked\t" << summary.checked << '\n';
          for (const auto& f : summary.failures) out << "failure\t" << f.description << '\t' << f.lhs << '\t' << f.rhs << '\n';
        }
      }
      return summary.failures.empty() ? kExitOk : kExitIdentityFailure;
    }

    if (sigma3_cmd->parsed()) {
      Timer timer(err, quiet, "sigma3");
      std::size_t counterexamples = 0;
      if (mode == "theorem") {
        const auto hits = sigma3::scan_pq_alpha(bound, !unrestricted, sigma3_workers);
        if (format == Format::json) {
          out << to_json(hits, bound, !unrestricted).dump(2) << '\n';
        } else {
          for (const auto& h : hits) {
            out << h.n << '\t' << h.p << '\t' << h.q << '\t' << h.alpha << '\t'
                << (h.even_perfect ? "perfect" : "not_perfect") << '\n';
          }
        }
        counterexamples = static_cast<std::size_t>(
            std::count_if(hits.begin(), hits.end(), [](const auto& h) { return !h.even_perfect; }));
      } else {
        const auto hits = sigma3::conjecture_scan(bound);
        if (format == Format::json) {
          out << to_json(hits, bound).dump(2) << '\n';
        } else {
          for (const auto& h : hits) out << h.n << '\t' << (h.even_perfect ? "perfect" : "not_perfect") << '\n';
        }
        counterexamples = static_cast<std::size_t>(
            std::count_if(hits.begin(), hits.end(), [](const auto& h) { return !h.even_perfect; }));
      }
      if (counterexamples > 0) {
        err << "WARNING: " << counterexamples << " hit(s) are not even perfect numbers\n";
      }
      return kExitOk;
    }
  } catch (const solver::InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::logic_error& e) {
    err << "internal invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitValidation;
}

}  // namespace sigmalucas::cli
