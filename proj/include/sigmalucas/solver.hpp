#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalucas/arith.hpp"
#include "sigmalucas/integer.hpp"

// End-to-end solver for sigma_2(n) - n^2 = A n + B.
//
// Outside the sporadic range n <= (|A|+|B|)^3 every solution is n = p q with
// distinct primes satisfying p^2 + q^2 + 1 - B = A p q. The solver combines a
// brute-force sigma_2 scan of the sporadic range, a direct search of that
// quadratic over primes q, and the Lucas-sequence families attached to the
// (A, B) shapes A = P^2 +- 2 and A = V_{2m}(P, -1).
namespace sigmalucas::solver {

/// (A, B) pair of an equation instance.
struct EquationInstance {
  Int A;
  Int B;

  /// (|A| + |B|)^3.
  Int sporadic_bound() const;
  /// (0, 1) and (1, 1), where the semiprime reduction does not apply.
  bool is_excluded() const;

  friend bool operator==(const EquationInstance&, const EquationInstance&) = default;
};

/// Thrown by solve() for an excluded (A, B).
class ExcludedEquation : public std::invalid_argument {
 public:
  explicit ExcludedEquation(const EquationInstance& e);
};

/// A solver-internal consistency check failed (a theorem family member not
/// satisfying the equation, or a family solution missing from the direct search).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// sigma_2(n) - n^2 == A n + B, with sigma_2 computed by factoring n.
bool satisfies(const EquationInstance& e, const Int& n);
/// Same test with sigma_2 taken from a known factorization of n.
bool satisfies(const EquationInstance& e, const arith::Factorization& n);

struct BruteForceResult {
  std::vector<Int> solutions;
  Int scanned_to;
  bool complete = false;
};

struct ScanOptions {
  unsigned workers = 1;
  std::size_t block_size = arith::default_block_size();
};

/// Scans 1..min(cap, max(1, sporadic_bound)); complete iff the bound was reached.
BruteForceResult brute_force(const EquationInstance& e, std::uint64_t cap, const ScanOptions& options = {});

/// For each instance, every n in [1, limit] solving it (ascending). One sieve
/// pass is shared by all instances; blocks are distributed over workers and
/// merged in order.
std::vector<std::vector<std::uint64_t>> scan_range(std::span<const EquationInstance> instances,
                                                   std::uint64_t limit, const ScanOptions& options = {});

/// Unordered prime pair, p < q.
struct PrimePair {
  Int p;
  Int q;

  Int product() const { return p * q; }
  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

/// All pairs p < q <= q_limit of distinct primes with p^2 + q^2 + 1 - B = A p q,
/// sorted by (q, p); each re-verified via sigma_2.
std::vector<PrimePair> semiprime_search(const EquationInstance& e, std::uint64_t q_limit, unsigned workers = 1);

enum class TheoremId { T1_1_c1, T1_1_c2, T1_1_c3, T1_2_c1, T1_2_c2, T1_2_c3, T3, T4, T5, T6 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1_1_c1, TheoremId::T1_1_c2, TheoremId::T1_1_c3,
                                             TheoremId::T1_2_c1, TheoremId::T1_2_c2, TheoremId::T1_2_c3,
                                             TheoremId::T3,      TheoremId::T4,      TheoremId::T5,
                                             TheoremId::T6};

std::string_view name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view text);
/// T3..T6 are parameterized by m as well as P.
bool uses_m(TheoremId id);

struct TheoremPattern {
  TheoremId id = TheoremId::T1_1_c1;
  long P = 0;
  long m = 0;  // 0 unless uses_m(id)

  /// The (A, B) this pattern describes.
  EquationInstance equation() const;
  /// Square-free hypotheses on P^2 + 4 or P^2 - 4 where the theorem has one.
  bool side_conditions_hold() const;

  friend bool operator==(const TheoremPattern&, const TheoremPattern&) = default;
};

std::string describe(const TheoremPattern& pattern);

/// Patterns with 0 <= P <= P_limit and 1 <= m <= m_limit whose (A, B) equals
/// the instance and whose side conditions hold. Ordered by theorem, then P, then m.
std::vector<TheoremPattern> recognize_patterns(const EquationInstance& e, long P_limit, long m_limit);

struct FamilySolution {
  Int n;
  Int p;  // p < q
  Int q;
  TheoremPattern pattern;
  std::vector<long> indices;  // sequence indices of the two factors
  bool probable = false;      // a factor is beyond the deterministic primality range
};

struct FamilyResult {
  std::vector<FamilySolution> solutions;  // ascending n
  std::optional<std::string> diagnostic;  // set for degenerate patterns
  std::vector<Int> rejected;              // prime pairs that failed sigma_2 re-verification
};

/// Family members for indices 0 <= k <= k_limit (case-2 families of T3..T6
/// for 0 <= k < m, skipping the p = q index).
FamilyResult family_solutions(const TheoremPattern& pattern, long k_limit);

struct SolveConfig {
  std::uint64_t brute_cap = 10'000'000;
  std::uint64_t q_limit = 1'000'000;
  long P_limit = 16;
  long m_limit = 8;
  long k_limit = 64;
  unsigned workers = 1;
  std::size_t block_size = arith::default_block_size();
};

struct SolutionReport {
  EquationInstance instance;
  SolveConfig config;
  std::vector<Int> sporadic;
  Int sporadic_scanned_to;
  bool sporadic_complete = false;
  std::vector<PrimePair> semiprime;
  std::vector<TheoremPattern> patterns;
  std::vector<FamilySolution> families;  // sorted by (n, pattern order)
  std::vector<std::string> diagnostics;
};

/// Runs every stage; throws ExcludedEquation for (0,1)/(1,1) and
/// InvariantViolation when a cross-check fails.
SolutionReport solve(const EquationInstance& e, const SolveConfig& config = {});

}  // namespace sigmalucas::solver
