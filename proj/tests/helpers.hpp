#pragma once

#include <cstdint>
#include <vector>

#include "weilkit/algebra.hpp"

namespace weilkit::testing {

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform, unlike the standard distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  Rational small_rational() {
    int num = below(9) - 4;              // -4..4
    int den = 1 + below(3);              // 1..3
    return Rational(num, den);
  }

 private:
  uint64_t state_;
};

// Random element supported on the monomial window of one degree.
inline GradedElement random_homogeneous(Rng& rng, const TablePtr& table, int degree,
                                        int max_terms = 3) {
  auto basis = degree_window_basis(*table, degree);
  GradedElement x(table);
  if (basis.empty()) return x;
  for (int k = 0; k < max_terms; ++k) {
    const Monomial& m = basis[static_cast<size_t>(rng.below(static_cast<int>(basis.size())))];
    x += GradedElement::monomial(table, m, rng.small_rational());
  }
  return x;
}

}  // namespace weilkit::testing
