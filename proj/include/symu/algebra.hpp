#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symu/group.hpp"
#include "symu/ring.hpp"

namespace symu {

/// Element of the group algebra KG: a dense coefficient vector indexed by
/// group elements. Over GF(2) coefficients live in a packed bitset and
/// multiplication runs as row-shuffle XOR accumulation through the Cayley
/// table; other rings use byte arrays with table arithmetic.
///
/// Values are immutable in practice: every operation returns a fresh
/// element, so sharing across threads is safe. Elements hold references to
/// their group and ring; both must outlive the element (reports carrying
/// witness elements included).
class AlgebraElement {
 public:
  AlgebraElement(const Group& g, const Ring& r);  // zero element

  static AlgebraElement zero(const Group& g, const Ring& r) { return {g, r}; }
  static AlgebraElement one(const Group& g, const Ring& r);
  /// The basis element g (coefficient 1 at g).
  static AlgebraElement embed(const Group& g, const Ring& r, int element);
  static AlgebraElement from_coeffs(const Group& g, const Ring& r,
                                    const std::vector<uint8_t>& coeffs);

  const Group& group() const { return *group_; }
  const Ring& ring() const { return *ring_; }

  uint8_t coeff(int g) const;
  void set_coeff(int g, uint8_t v);
  std::vector<int> support() const;
  bool is_zero() const;

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement scaled(uint8_t c) const;
  bool operator==(const AlgebraElement& rhs) const;
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

  /// Linear extension of g -> g^-1 (the star anti-automorphism).
  AlgebraElement star() const;
  /// Sum of coefficients; a ring homomorphism onto K.
  uint8_t augmentation() const;
  bool is_symmetric() const { return star() == *this; }

  /// Unit test via the local-ring criterion: valid when |G| is a power of
  /// the coefficient characteristic, in which case a is a unit iff
  /// augmentation(a) != 0. Throws std::invalid_argument otherwise.
  bool is_unit() const;
  /// Inverse by the geometric series on the nilpotent part; requires
  /// is_unit(). The series must terminate within |G| steps.
  AlgebraElement inverse() const;

  /// Formal-sum rendering using generator words, e.g. "1 + x + x*y^2".
  std::string to_string() const;

 private:
  void ensure_compatible(const AlgebraElement& rhs) const;
  bool gf2() const { return ring_->size() == 2; }

  const Group* group_;
  const Ring* ring_;
  std::vector<uint64_t> bits_;   // GF(2) storage
  std::vector<uint8_t> bytes_;   // storage for all other rings
};

/// ab == ba.
bool commute(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace symu
