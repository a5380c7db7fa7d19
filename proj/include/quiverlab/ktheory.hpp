#ifndef QUIVERLAB_KTHEORY_HPP
#define QUIVERLAB_KTHEORY_HPP

#include <string>
#include <vector>

#include "quiverlab/matrix.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
/// nonnegative and dividing the next.  The identities are re-checked at
/// construction time; a violation throws.
struct SNFResult {
  IntMatrix U, D, V;

  SNFResult(IntMatrix u, IntMatrix d, IntMatrix v, const IntMatrix& a);

  std::size_t rank() const;
  std::vector<mpz_class> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^freeRank + Z/t_1 + ... with each
/// torsion order > 1 and t_i | t_{i+1}.
struct K0Group {
  std::size_t freeRank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const K0Group&) const = default;
  std::string to_string() const;
};

K0Group k0_group(const Quiver& q);

struct ShiftEquivalenceWitness {
  IntMatrix A, B, R, S;
  unsigned long lag = 1;
};

/// Empty result means the witness is valid.
std::vector<std::string> verify_shift_equivalence(
    const ShiftEquivalenceWitness& w);

ShiftEquivalenceWitness lift_shift_equivalence(
    const ShiftEquivalenceWitness& w);

}  // namespace quiverlab

#endif
