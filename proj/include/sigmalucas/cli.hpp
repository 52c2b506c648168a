#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

// Command-line front end. `run` parses arguments, dispatches to the library
// and writes data to `out` and diagnostics to `err`.
namespace sigmalucas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInvariant = 3;

/// Parameter ranges for the identity sweep. A range with min > max is empty.
struct IdentitySweep {
  bool catalan = true;
  bool parity = true;
  bool lucas_relations = true;
  long coef_max = 3;      // u, v in [-coef_max, coef_max] for the Catalan-type identity
  long seed_max = 2;      // A0, A1 in [-seed_max, seed_max]
  long n_max = 20;        // 1 <= r <= n <= n_max
  long parity_u_max = 4;  // |u| <= parity_u_max
  long parity_n_max = 15;
  long P_max = 5;         // P in [-P_max, P_max], Q in {1, -1}
  long index_max = 10;    // k, l in [-index_max, index_max]
};

struct IdentityFailure {
  std::string description;
  std::string lhs;
  std::string rhs;
};

struct IdentitySummary {
  std::uint64_t checked = 0;
  std::vector<IdentityFailure> failures;
};

IdentitySummary run_identity_sweep(const IdentitySweep& sweep);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmalucas::cli
