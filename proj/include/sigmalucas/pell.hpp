#pragma once

#include <cstddef>
#include <vector>

#include "sigmalucas/integer.hpp"

// x^2 - D y^2 = +-4 for D = P^2 + 4 and D = P^2 - 4, solved through Lucas sequences.
namespace sigmalucas::pell {

enum class PellForm { plus4, minus4, unsupported };

/// Discriminant with its recognized shape; P >= 0 is meaningful unless unsupported.
struct PellShape {
  Int D;
  PellForm form = PellForm::unsupported;
  long P = 0;

  static PellShape plus4(long P);   // D = P^2 + 4
  static PellShape minus4(long P);  // D = P^2 - 4, P >= 3
};

struct PellSolution {
  Int x;
  Int y;
  long k = 0;  // index of the generating Lucas pair
};

/// Throws std::invalid_argument for D < 2 or D a perfect square.
PellShape classify(const Int& D);

/// First `count` non-negative solutions in increasing y:
///   plus4, +4  -> (V_{2k}, U_{2k})(P, -1)
///   plus4, -4  -> (V_{2k+1}, U_{2k+1})(P, -1)
///   minus4, +4 -> (V_k, U_k)(P, 1)
/// Throws std::invalid_argument for an unsupported shape, rhs not +-4,
/// or rhs = -4 with a minus4 shape.
std::vector<PellSolution> solve_pm4(const PellShape& shape, int rhs, std::size_t count);

bool is_solution(const Int& D, int rhs, const Int& x, const Int& y);

}  // namespace sigmalucas::pell
