#include "sigmalucas/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "sigmalucas/lucas.hpp"

namespace sigmalucas::solver {

namespace {

// sigma_2(n) - n^2 == A n + B for a sieve value, with a native fast path.
class Target {
 public:
  explicit Target(const EquationInstance& e) : A_(e.A), B_(e.B) {
    narrow_ = fits_i64(e.A) && fits_i64(e.B);
    if (narrow_) {
      a_ = to_i64(e.A);
      b_ = to_i64(e.B);
    }
  }

  bool matches(std::uint64_t n, std::uint64_t sigma2) const {
    const std::uint64_t excess = sigma2 - n * n;  // sigma_2(n) >= n^2
    if (narrow_) return static_cast<i128>(excess) == static_cast<i128>(a_) * static_cast<i128>(n) + b_;
    return from_u64(excess) == A_ * from_u64(n) + B_;
  }

 private:
  Int A_;
  Int B_;
  bool narrow_ = false;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

unsigned effective_workers(unsigned requested) { return std::max(1U, requested); }

template <typename Fn>
void run_workers(unsigned workers, Fn&& body) {
  if (workers <= 1) {
    body(0U);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
}

Int abs_term(bool use_v, const lucas::LucasParams& params, long index) {
  return abs(use_v ? lucas::lucas_v(params, index) : lucas::lucas_u(params, index));
}

// Integer square root of a value below 2^120.
std::uint64_t isqrt_u128(u128 v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

struct FamilyShape {
  bool use_v = false;
  int Q = -1;
};

FamilyShape family_shape(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1_c1:
    case TheoremId::T1_1_c2:
    case TheoremId::T3:
    case TheoremId::T4:
      return {false, -1};
    case TheoremId::T1_1_c3:
      return {false, 1};
    case TheoremId::T1_2_c1:
    case TheoremId::T1_2_c2:
    case TheoremId::T5:
    case TheoremId::T6:
      return {true, -1};
    case TheoremId::T1_2_c3:
      return {true, 1};
  }
  return {};
}

// Index pairs of the two factors for one value of k.
void family_indices(const TheoremPattern& t, long k, std::vector<std::pair<long, long>>& out) {
  const long m = t.m;
  switch (t.id) {
    case TheoremId::T1_1_c1:
    case TheoremId::T1_2_c2:
      out.emplace_back(2 * k - 1, 2 * k + 1);
      break;
    case TheoremId::T1_1_c2:
    case TheoremId::T1_2_c1:
      out.emplace_back(2 * k, 2 * k + 2);
      break;
    case TheoremId::T1_1_c3:
    case TheoremId::T1_2_c3:
      out.emplace_back(k - 1, k + 1);
      break;
    case TheoremId::T3:
    case TheoremId::T5:
      out.emplace_back(2 * k + 1, 2 * k + 2 * m + 1);
      if (k < m && m != 2 * k + 1) out.emplace_back(2 * k + 1, 2 * m - 2 * k - 1);
      break;
    case TheoremId::T4:
    case TheoremId::T6:
      out.emplace_back(2 * k, 2 * k + 2 * m);
      if (k < m && m != 2 * k) out.emplace_back(2 * k, 2 * m - 2 * k);
      break;
  }
}

std::size_t theorem_rank(TheoremId id) { return static_cast<std::size_t>(id); }

bool pattern_less(const TheoremPattern& a, const TheoremPattern& b) {
  return std::tuple(theorem_rank(a.id), a.P, a.m) < std::tuple(theorem_rank(b.id), b.P, b.m);
}

}  // namespace

Int EquationInstance::sporadic_bound() const {
  const Int s = abs(A) + abs(B);
  return s * s * s;
}

bool EquationInstance::is_excluded() const { return B == 1 && (A == 0 || A == 1); }

ExcludedEquation::ExcludedEquation(const EquationInstance& e)
    : std::invalid_argument("(A, B) = (" + to_string(e.A) + ", " + to_string(e.B) +
                            ") is excluded: the semiprime reduction requires (A, B) != (0, 1), (1, 1)") {}

bool satisfies(const EquationInstance& e, const arith::Factorization& n) {
  const Int value = n.value();
  return arith::sigma_k(n, 2) - value * value == e.A * value + e.B;
}

bool satisfies(const EquationInstance& e, const Int& n) { return satisfies(e, arith::factorize(n)); }

std::vector<std::vector<std::uint64_t>> scan_range(std::span<const EquationInstance> instances,
                                                   std::uint64_t limit, const ScanOptions& options) {
  if (limit > arith::kSigma2Limit) {
    throw std::invalid_argument("scan limit " + std::to_string(limit) + " exceeds " +
                                std::to_string(arith::kSigma2Limit));
  }
  std::vector<Target> targets;
  targets.reserve(instances.size());
  for (const auto& e : instances) targets.emplace_back(e);

  const std::uint64_t block = std::max<std::uint64_t>(1, options.block_size);
  const std::uint64_t block_count = limit == 0 ? 0 : (limit + block - 1) / block;

  // hits[block][instance]
  std::vector<std::vector<std::vector<std::uint64_t>>> hits(block_count,
                                                            std::vector<std::vector<std::uint64_t>>(targets.size()));
  std::atomic<std::uint64_t> next{0};
  run_workers(effective_workers(options.workers), [&](unsigned) {
    std::vector<std::uint64_t> buffer;
    for (std::uint64_t b = next++; b < block_count; b = next++) {
      const std::uint64_t lo = 1 + b * block;
      const std::uint64_t hi = std::min(limit + 1, lo + block);
      buffer.resize(hi - lo);
      arith::sigma2_segment_into(lo, hi, buffer);
      for (std::size_t t = 0; t < targets.size(); ++t) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          if (targets[t].matches(n, buffer[n - lo])) hits[b][t].push_back(n);
        }
      }
    }
  });

  std::vector<std::vector<std::uint64_t>> merged(targets.size());
  for (const auto& per_block : hits) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      merged[t].insert(merged[t].end(), per_block[t].begin(), per_block[t].end());
    }
  }
  return merged;
}

BruteForceResult brute_force(const EquationInstance& e, std::uint64_t cap, const ScanOptions& options) {
  if (cap < 1) throw std::invalid_argument("brute_force: cap must be >= 1");
  const Int bound = e.sporadic_bound();
  const Int cap_int = from_u64(cap);
  Int target = cap_int < bound ? cap_int : bound;
  if (target < 1) target = 1;

  BruteForceResult result;
  result.scanned_to = target;
  result.complete = cap_int >= bound;
  const auto hits = scan_range(std::span(&e, 1), to_u64(target), options);
  for (std::uint64_t n : hits.front()) result.solutions.push_back(from_u64(n));
  return result;
}

std::vector<PrimePair> semiprime_search(const EquationInstance& e, std::uint64_t q_limit, unsigned workers) {
  const auto primes = arith::primes_up_to(q_limit);
  const unsigned pool = effective_workers(workers);

  const bool narrow = q_limit < (std::uint64_t{1} << 32) && fits_i64(e.A) && fits_i64(e.B) &&
                      abs(e.A) < (Int(1) << 28) && abs(e.B) < (Int(1) << 60);

  std::vector<std::vector<PrimePair>> found(pool);
  run_workers(pool, [&](unsigned w) {
    auto& local = found[w];
    for (std::size_t i = w; i < primes.size(); i += pool) {
      const std::uint64_t q = primes[i];
      // p^2 - A q p + (q^2 + 1 - B) = 0; disc = (A q)^2 - 4 (q^2 + 1 - B).
      std::vector<Int> roots;
      if (narrow) {
        const i128 aq = static_cast<i128>(to_i64(e.A)) * q;
        const i128 disc = aq * aq - 4 * (static_cast<i128>(q) * q + 1 - to_i64(e.B));
        if (disc < 0) continue;
        const std::uint64_t s = isqrt_u128(static_cast<u128>(disc));
        if (static_cast<i128>(s) * s != disc) continue;
        for (const i128 twice : {aq + s, aq - static_cast<i128>(s)}) {
          if (twice <= 0 || twice % 2 != 0) continue;
          const i128 p = twice / 2;
          if (p < static_cast<i128>(q)) roots.push_back(from_u64(static_cast<std::uint64_t>(p)));
        }
      } else {
        const Int qi = from_u64(q);
        const Int aq = e.A * qi;
        const Int disc = aq * aq - 4 * (qi * qi + 1 - e.B);
        if (sgn(disc) < 0 || !is_square(disc)) continue;
        const Int s = isqrt(disc);
        for (const Int twice : {Int(aq + s), Int(aq - s)}) {
          if (sgn(twice) <= 0 || mpz_odd_p(twice.get_mpz_t()) != 0) continue;
          const Int p = twice / 2;
          if (p < qi) roots.push_back(p);
        }
      }
      if (roots.size() == 2 && roots[0] == roots[1]) roots.pop_back();
      for (const auto& p : roots) {
        if (!arith::is_prime(p)) continue;
        const arith::Factorization f{{{p, 1}, {from_u64(q), 1}}};
        if (!satisfies(e, f)) {
          throw InvariantViolation("semiprime root " + to_string(p) + " * " + std::to_string(q) +
                                   " fails sigma_2 re-verification");
        }
        local.push_back({p, from_u64(q)});
      }
    }
  });

  std::vector<PrimePair> pairs;
  for (auto& local : found) pairs.insert(pairs.end(), local.begin(), local.end());
  std::sort(pairs.begin(), pairs.end(),
            [](const PrimePair& a, const PrimePair& b) { return std::tie(a.q, a.p) < std::tie(b.q, b.p); });
  return pairs;
}

std::string_view name(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1_c1: return "T1_1_c1";
    case TheoremId::T1_1_c2: return "T1_1_c2";
    case TheoremId::T1_1_c3: return "T1_1_c3";
    case TheoremId::T1_2_c1: return "T1_2_c1";
    case TheoremId::T1_2_c2: return "T1_2_c2";
    case TheoremId::T1_2_c3: return "T1_2_c3";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view text) {
  for (TheoremId id : kAllTheorems) {
    if (name(id) == text) return id;
  }
  return std::nullopt;
}

bool uses_m(TheoremId id) {
  return id == TheoremId::T3 || id == TheoremId::T4 || id == TheoremId::T5 || id == TheoremId::T6;
}

EquationInstance TheoremPattern::equation() const {
  const Int p = from_i64(P);
  const Int p2 = p * p;
  const Int p4 = p2 * p2;
  switch (id) {
    case TheoremId::T1_1_c1: return {p2 + 2, -p2 + 1};
    case TheoremId::T1_1_c2: return {p2 + 2, p2 + 1};
    case TheoremId::T1_1_c3: return {p2 - 2, p2 + 1};
    case TheoremId::T1_2_c1: return {p2 + 2, -p4 - 4 * p2 + 1};
    case TheoremId::T1_2_c2: return {p2 + 2, p4 + 4 * p2 + 1};
    case TheoremId::T1_2_c3: return {p2 - 2, -p4 + 4 * p2 + 1};
    default: break;
  }
  const auto [U, V] = lucas::lucas_uv({p, -1}, 2 * m);
  switch (id) {
    case TheoremId::T3: return {V, -U * U + 1};
    case TheoremId::T4: return {V, U * U + 1};
    case TheoremId::T5: return {V, V * V - 3};
    default: return {V, -V * V + 5};
  }
}

bool TheoremPattern::side_conditions_hold() const {
  const Int p2 = from_i64(P) * P;
  switch (id) {
    case TheoremId::T1_2_c1:
    case TheoremId::T1_2_c2:
    case TheoremId::T5:
    case TheoremId::T6:
      return arith::is_squarefree(p2 + 4);
    case TheoremId::T1_2_c3: {
      const Int d = abs(p2 - 4);
      return sgn(d) != 0 && arith::is_squarefree(d);
    }
    default:
      return true;
  }
}

std::string describe(const TheoremPattern& pattern) {
  std::string text(name(pattern.id));
  text += " P=" + std::to_string(pattern.P);
  if (uses_m(pattern.id)) text += " m=" + std::to_string(pattern.m);
  return text;
}

std::vector<TheoremPattern> recognize_patterns(const EquationInstance& e, long P_limit, long m_limit) {
  std::vector<TheoremPattern> found;
  for (TheoremId id : kAllTheorems) {
    for (long P = 0; P <= P_limit; ++P) {
      const long m_first = uses_m(id) ? 1 : 0;
      const long m_last = uses_m(id) ? m_limit : 0;
      for (long m = m_first; m <= m_last; ++m) {
        const TheoremPattern t{id, P, m};
        if (t.equation() == e && t.side_conditions_hold()) found.push_back(t);
      }
    }
  }
  return found;
}

FamilyResult family_solutions(const TheoremPattern& pattern, long k_limit) {
  FamilyResult result;
  const FamilyShape shape = family_shape(pattern.id);
  const lucas::LucasParams params{from_i64(pattern.P), Int(shape.Q)};

  bool bounded = true;
  for (long i = 0; i <= 12 && bounded; ++i) bounded = abs_term(shape.use_v, params, i) <= 2;
  if (bounded) {
    result.diagnostic = describe(pattern) + ": degenerate family, " + (shape.use_v ? "V" : "U") +
                        "(" + std::to_string(pattern.P) + "," + std::to_string(shape.Q) +
                        ") stays within {0, +-1, +-2}";
    return result;
  }

  const EquationInstance e = pattern.equation();
  std::map<Int, FamilySolution> by_n;
  std::vector<std::pair<long, long>> pairs;
  for (long k = 0; k <= k_limit; ++k) {
    pairs.clear();
    family_indices(pattern, k, pairs);
    for (const auto& [i, j] : pairs) {
      Int a = abs_term(shape.use_v, params, i);
      Int b = abs_term(shape.use_v, params, j);
      if (a == b || a < 2 || b < 2) continue;
      const auto pa = arith::primality(a);
      if (pa == arith::Primality::composite) continue;
      const auto pb = arith::primality(b);
      if (pb == arith::Primality::composite) continue;

      std::vector<long> indices{i, j};
      if (b < a) {
        std::swap(a, b);
        std::swap(indices[0], indices[1]);
      }
      const Int n = a * b;
      if (by_n.contains(n)) continue;
      if (!satisfies(e, arith::Factorization{{{a, 1}, {b, 1}}})) {
        result.rejected.push_back(n);
        continue;
      }
      const bool probable = pa == arith::Primality::probable_prime || pb == arith::Primality::probable_prime;
      by_n.emplace(n, FamilySolution{n, a, b, pattern, std::move(indices), probable});
    }
  }
  for (auto& [n, s] : by_n) result.solutions.push_back(std::move(s));
  return result;
}

SolutionReport solve(const EquationInstance& e, const SolveConfig& config) {
  if (e.is_excluded()) throw ExcludedEquation(e);

  SolutionReport report;
  report.instance = e;
  report.config = config;

  const ScanOptions scan{config.workers, config.block_size};
  auto brute = brute_force(e, config.brute_cap, scan);
  report.sporadic = std::move(brute.solutions);
  report.sporadic_scanned_to = brute.scanned_to;
  report.sporadic_complete = brute.complete;

  report.semiprime = semiprime_search(e, config.q_limit, config.workers);
  report.patterns = recognize_patterns(e, config.P_limit, config.m_limit);

  for (const auto& pattern : report.patterns) {
    auto family = family_solutions(pattern, config.k_limit);
    if (!family.rejected.empty()) {
      throw InvariantViolation(describe(pattern) + ": family member " + to_string(family.rejected.front()) +
                               " fails sigma_2 re-verification");
    }
    if (family.diagnostic) report.diagnostics.push_back(*family.diagnostic);
    for (auto& s : family.solutions) report.families.push_back(std::move(s));
  }
  std::stable_sort(report.families.begin(), report.families.end(),
                   [](const FamilySolution& a, const FamilySolution& b) {
                     if (a.n != b.n) return a.n < b.n;
                     return pattern_less(a.pattern, b.pattern);
                   });

  const Int q_limit = from_u64(config.q_limit);
  for (const auto& s : report.families) {
    if (s.q > q_limit) continue;
    const bool listed = std::any_of(report.semiprime.begin(), report.semiprime.end(),
                                    [&s](const PrimePair& pq) { return pq.p == s.p && pq.q == s.q; });
    if (!listed) {
      throw InvariantViolation("family solution " + to_string(s.n) + " (" + describe(s.pattern) +
                               ") missing from the semiprime search");
    }
  }
  for (const auto& s : report.families) {
    if (s.probable) {
      report.diagnostics.push_back("n=" + to_string(s.n) + " (" + describe(s.pattern) +
                                   "): factors beyond 2^64 are probable primes");
    }
  }
  return report;
}

}  // namespace sigmalucas::solver
