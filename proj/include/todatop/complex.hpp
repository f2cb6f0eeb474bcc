// Chain complexes built from the incidence numbers, Smith normal form over
// the integers, and (co)homology with Z, Q and Z/2 coefficients.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "todatop/lie.hpp"

namespace todatop {

enum class Coeff { Z, Q, Z2 };
Coeff coeff_from_string(const std::string& s);
std::string coeff_string(Coeff c);

// free_rank copies of the base ring plus finite cyclic factors in ascending
// divisibility order (each entry > 1).
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;
  bool operator==(const AbelianGroup&) const = default;
};
std::string group_string(const AbelianGroup& g);  // "Z^2+Z2+Z4", "0", ...

// C_k has one generator per subset J with |J| = l - k (so k = dimension of
// the stratum), basis ordered by ascending Jmask.  boundary[k] maps C_k to
// C_{k-1}; boundary[0] is empty.
struct ChainComplexZ {
  int rank = 0;
  std::vector<std::vector<uint32_t>> basis;
  std::vector<std::vector<std::vector<long long>>> boundary;
};

// The closure complex of the compactified variety.  Verifies d о d = 0 and
// aborts with the offending pair of strata if not.
ChainComplexZ build_complex(const RootDatum& d);

// Variant keeping the edge set but forcing every nonzero entry to
// (-1)^{nu(J,k)} * 2, the complex of the underlying real flag quotient.
ChainComplexZ schubert_complex(const RootDatum& d);

std::vector<AbelianGroup> homology(const ChainComplexZ& cx, Coeff c);
std::vector<AbelianGroup> cohomology(const ChainComplexZ& cx, Coeff c);

// Rational Betti numbers of the unweighted local-graph complex (type A only);
// index k = l - |J| as above.
std::vector<long long> local_betti_Q(const RootDatum& d);

// D = U * A * V with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SNFResult {
  std::vector<std::vector<mpz_class>> U, D, V;
};
SNFResult smith_normal_form(std::vector<std::vector<mpz_class>> A);
std::vector<mpz_class> snf_diagonal(const SNFResult& r);

std::string homology_json(const std::vector<AbelianGroup>& groups);
std::string homology_csv(const RootDatum& d, Coeff c, const std::vector<AbelianGroup>& groups);

}  // namespace todatop
