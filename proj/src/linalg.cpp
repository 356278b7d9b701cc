#include "clutter/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace clb {

int rank_mod_p(IntMat m, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be below 2^31");
  const std::uint64_t P = p;
  auto norm = [&](long long x) -> std::uint64_t {
    long long r = x % static_cast<long long>(P);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
  };
  std::vector<std::uint64_t> a(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = norm(m.a[i]);
  auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * m.cols + j]; };
  // modular inverse by Fermat (p prime)
  auto pw = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    std::uint64_t inv = pw(at(rank, col), P - 2);
    for (int i = rank + 1; i < m.rows; ++i) {
      std::uint64_t f = at(i, col) * inv % P;
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j)
        at(i, j) = (at(i, j) + (P - f) * at(rank, j)) % P;
    }
    ++rank;
  }
  return rank;
}

namespace {

// Bareiss fraction-free elimination over int64; returns -1 when an entry
// leaves the safe range (caller falls back to big integers)
int rank_bareiss_i64(IntMat m) {
  const long long kLimit = 1LL << 62;
  auto at = [&](int i, int j) -> long long& { return m.a[static_cast<std::size_t>(i) * m.cols + j]; };
  long long prev = 1;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j) {
        __int128 num = static_cast<__int128>(at(rank, col)) * at(i, j) -
                       static_cast<__int128>(at(i, col)) * at(rank, j);
        __int128 q = num / prev;  // exact by the Bareiss identity
        if (q > kLimit || q < -kLimit) return -1;
        at(i, j) = static_cast<long long>(q);
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    if (prev > kLimit || prev < -kLimit) return -1;
    ++rank;
  }
  return rank;
}

int rank_bareiss_mpz(const IntMat& m) {
  std::vector<mpz_class> a;
  a.reserve(m.a.size());
  for (long long v : m.a) a.emplace_back(static_cast<long>(v));
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * m.cols + j]; };
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j)
        at(i, j) = (at(rank, col) * at(i, j) - at(i, col) * at(rank, j)) / prev;
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_rational(const IntMat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int r = rank_bareiss_i64(m);
  return r >= 0 ? r : rank_bareiss_mpz(m);
}

SmithResult smith_normal_form(const IntMat& m) {
  std::vector<mpz_class> a;
  a.reserve(m.a.size());
  for (long long v : m.a) a.emplace_back(static_cast<long>(v));
  int rows = m.rows, cols = m.cols;
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };

  std::vector<mpz_class> diag;
  int top = 0;
  while (top < rows && top < cols) {
    // pick the nonzero entry of smallest magnitude in the remaining block
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = top; i < rows; ++i)
      for (int j = top; j < cols; ++j)
        if (at(i, j) != 0) {
          mpz_class mag = abs(at(i, j));
          if (pi < 0 || mag < best) { best = mag; pi = i; pj = j; }
        }
    if (pi < 0) break;  // block is zero
    for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(top, j));
    for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, top));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = top + 1; i < rows; ++i) {
        if (at(i, top) == 0) continue;
        mpz_class q = at(i, top) / at(top, top);
        for (int j = top; j < cols; ++j) at(i, j) -= q * at(top, j);
        if (at(i, top) != 0) {
          for (int j = 0; j < cols; ++j) std::swap(at(i, j), at(top, j));
          clean = false;
        }
      }
      if (!clean) continue;
      for (int j = top + 1; j < cols; ++j) {
        if (at(top, j) == 0) continue;
        mpz_class q = at(top, j) / at(top, top);
        for (int i = top; i < rows; ++i) at(i, j) -= q * at(i, top);
        if (at(top, j) != 0) {
          for (int i = 0; i < rows; ++i) std::swap(at(i, j), at(i, top));
          clean = false;
        }
      }
    }
    diag.push_back(abs(at(top, top)));
    ++top;
  }
  // enforce the divisibility chain d_1 | d_2 | ...
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] != 0) {
        mpz_class g = gcd(diag[i], diag[i + 1]);
        mpz_class l = diag[i] / g * diag[i + 1];
        diag[i] = g;
        diag[i + 1] = l;
        changed = true;
      }
    }
  }
  SmithResult res;
  res.rank = static_cast<int>(diag.size());
  res.invariant_factors = std::move(diag);
  return res;
}

std::vector<unsigned> prime_factors(mpz_class v) {
  std::vector<unsigned> out;
  v = abs(v);
  for (unsigned p = 2; mpz_class(p) * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) {
    if (!v.fits_uint_p()) throw std::runtime_error("torsion factor too large to report");
    out.push_back(static_cast<unsigned>(v.get_ui()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clb
