#pragma once

// Test-only oracles, independent of the library implementation paths they
// cross-check.

#include <cstdint>
#include <optional>
#include <vector>

#include "symu/algebra.hpp"
#include "symu/group.hpp"
#include "symu/ring.hpp"

namespace oracles {

// Reference convolution: plain triple loop over all coefficient pairs,
// no support lists, no bit packing.
inline symu::AlgebraElement naive_mul(const symu::AlgebraElement& a,
                                      const symu::AlgebraElement& b) {
  const symu::Group& g = a.group();
  const symu::Ring& r = a.ring();
  symu::AlgebraElement out(g, r);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      int t = g.mul(x, y);
      out.set_coeff(t, r.add(out.coeff(t), r.mul(a.coeff(x), b.coeff(y))));
    }
  return out;
}

// Exhaustive two-sided inverse search over every coefficient vector of KG.
// Only callable when size(K)^|G| is small.
inline std::optional<symu::AlgebraElement> exhaustive_inverse(const symu::AlgebraElement& a) {
  const symu::Group& g = a.group();
  const symu::Ring& r = a.ring();
  long long total = 1;
  for (int i = 0; i < g.order; ++i) total *= r.size();
  symu::AlgebraElement one = symu::AlgebraElement::one(g, r);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    symu::AlgebraElement b(g, r);
    for (int i = 0; i < g.order; ++i) {
      b.set_coeff(i, static_cast<uint8_t>(c % r.size()));
      c /= r.size();
    }
    if (a * b == one && b * a == one) return b;
  }
  return std::nullopt;
}

// Center computed with a fresh scan, bypassing center_subgroup.
inline std::vector<int> naive_center(const symu::Group& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool ok = true;
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] != g.table[b][a]) {
        ok = false;
        break;
      }
    if (ok) z.push_back(a);
  }
  return z;
}

// |S| counted directly from the inversion permutation.
inline int s_size_by_count(const symu::Group& g) {
  int involutions = 0, pairs = 0;
  for (int x = 0; x < g.order; ++x) {
    if (g.inv(x) == x)
      ++involutions;  // includes the identity
    else if (x < g.inv(x))
      ++pairs;
  }
  return involutions + pairs;
}

inline symu::AlgebraElement random_element(const symu::Group& g, const symu::Ring& r,
                                           std::uint64_t& state) {
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  symu::AlgebraElement a(g, r);
  for (int i = 0; i < g.order; ++i)
    a.set_coeff(i, static_cast<uint8_t>(next() % r.size()));
  return a;
}

}  // namespace oracles
