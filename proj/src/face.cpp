#include "clutter/face.hpp"

#include <stdexcept>

namespace clb {

Face Face::of(std::initializer_list<int> verts) {
  Face f;
  for (int v : verts) {
    if (v < 1 || v > 64) throw std::invalid_argument("vertex out of range 1..64");
    f = f.with(v);
  }
  return f;
}

Face Face::from_vertices(const std::vector<int>& verts, int n) {
  Face f;
  for (int v : verts) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
    if (f.contains(v)) throw std::invalid_argument("repeated vertex " + std::to_string(v));
    f = f.with(v);
  }
  return f;
}

Face Face::full(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("n out of range 0..64");
  return n == 0 ? Face() : Face(~std::uint64_t{0} >> (64 - n));
}

int Face::max_vertex() const {
  return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Face::str() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

bool lex_less(Face a, Face b) {
  auto va = a.vertices(), vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

static void k_subsets_rec(const std::vector<int>& verts, std::size_t start, int k, Face cur,
                          std::vector<Face>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(k) <= verts.size(); ++i)
    k_subsets_rec(verts, i + 1, k - 1, cur.with(verts[i]), out);
}

std::vector<Face> k_subsets(Face ground, int k) {
  std::vector<Face> out;
  if (k < 0 || k > ground.size()) return out;
  k_subsets_rec(ground.vertices(), 0, k, Face(), out);
  return out;
}

std::vector<Face> all_subsets(Face ground) {
  std::vector<Face> out;
  out.reserve(std::size_t{1} << ground.size());
  std::uint64_t g = ground.bits(), sub = 0;
  while (true) {
    out.push_back(Face(sub));
    if (sub == g) break;
    sub = (sub - g) & g;  // next subset in increasing order
  }
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace clb
