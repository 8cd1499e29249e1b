#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symu {

/// Finite coefficient field of prime characteristic: GF(p) or GF(p^2),
/// driven entirely by precomputed operation tables. GF(4) is
/// GF(2)[w]/(w^2+w+1); other quadratic extensions pick the
/// lexicographically first irreducible x^2+bx+c.
///
/// Elements are uint8_t indices: GF(p) stores residues directly, GF(p^2)
/// stores a + b*w as a + b*p. 0 and 1 are always the additive and
/// multiplicative identities.
class Ring {
 public:
  /// Cached instance for a field of q elements (q = p or p^2, p prime).
  static const Ring& gf(int q);
  /// Accepts "2", "4", "3", "9", or the explicit forms "2^2", "3^2".
  static const Ring& parse(const std::string& spec);

  int characteristic() const { return p_; }
  int size() const { return q_; }
  const std::string& name() const { return name_; }
  bool operator==(const Ring& other) const { return this == &other; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  /// Multiplicative inverse; throws std::invalid_argument on 0.
  uint8_t inv(uint8_t a) const;

  static constexpr uint8_t zero = 0;
  static constexpr uint8_t one = 1;

 private:
  Ring(int p, int degree);
  void validate() const;

  int p_;
  int q_;
  std::string name_;
  std::vector<uint8_t> add_;
  std::vector<uint8_t> mul_;
  std::vector<uint8_t> neg_;
  std::vector<uint8_t> inv_;
};

}  // namespace symu
