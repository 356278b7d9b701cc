#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace clb {

// dense row-major integer matrix
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;
  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// rank over GF(p), p prime (fits in 32 bits)
int rank_mod_p(IntMat m, std::uint32_t p);
// rank over the rationals; fraction-free elimination, exact
int rank_rational(const IntMat& m);
// Smith normal form diagonal: rank and the invariant factor chain d_1 | d_2 |
// ...; entries equal to 1 are kept, torsion is the set of factors > 1
struct SmithResult {
  int rank = 0;
  std::vector<mpz_class> invariant_factors;
};
SmithResult smith_normal_form(const IntMat& m);

std::vector<unsigned> prime_factors(mpz_class v);

}  // namespace clb
