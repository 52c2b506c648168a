#include "sigmalucas/pell.hpp"

#include <stdexcept>
#include <string>

#include "sigmalucas/lucas.hpp"

namespace sigmalucas::pell {

PellShape PellShape::plus4(long P) {
  if (P < 0) P = -P;
  if (P == 0) throw std::invalid_argument("P = 0 gives D = 4, a perfect square");
  return {from_i64(P) * P + 4, PellForm::plus4, P};
}

PellShape PellShape::minus4(long P) {
  if (P < 0) P = -P;
  if (P < 3) throw std::invalid_argument("P^2 - 4 must be a positive non-square; need |P| >= 3");
  return {from_i64(P) * P - 4, PellForm::minus4, P};
}

PellShape classify(const Int& D) {
  if (D < 2) throw std::invalid_argument("classify: D must be >= 2, got " + to_string(D));
  if (is_square(D)) throw std::invalid_argument("classify: D = " + to_string(D) + " is a perfect square");

  const Int below = isqrt(D - 4);
  if (below * below + 4 == D) return {D, PellForm::plus4, to_i64(below)};
  const Int above = isqrt(D + 4);
  if (above * above - 4 == D) return {D, PellForm::minus4, to_i64(above)};
  return {D, PellForm::unsupported, 0};
}

std::vector<PellSolution> solve_pm4(const PellShape& shape, int rhs, std::size_t count) {
  if (rhs != 4 && rhs != -4) throw std::invalid_argument("rhs must be +4 or -4");
  if (shape.form == PellForm::unsupported) {
    throw std::invalid_argument("D = " + to_string(shape.D) + " is neither P^2+4 nor P^2-4");
  }
  if (shape.form == PellForm::minus4 && rhs == -4) {
    throw std::invalid_argument("x^2 - (P^2-4) y^2 = -4 is not covered for D = " + to_string(shape.D));
  }

  const lucas::LucasParams params{from_i64(shape.P), shape.form == PellForm::plus4 ? Int(-1) : Int(1)};
  std::vector<PellSolution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long k = static_cast<long>(i);
    long index = k;
    if (shape.form == PellForm::plus4) index = rhs == 4 ? 2 * k : 2 * k + 1;
    auto [U, V] = lucas::lucas_uv(params, index);
    PellSolution s{abs(V), abs(U), k};
    if (!is_solution(shape.D, rhs, s.x, s.y)) {
      throw std::logic_error("Lucas pair at index " + std::to_string(index) + " fails x^2 - D y^2 = " +
                             std::to_string(rhs));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_solution(const Int& D, int rhs, const Int& x, const Int& y) {
  return x * x - D * y * y == rhs;
}

}  // namespace sigmalucas::pell
