#include "symu/algebra.hpp"

#include <bit>
#include <stdexcept>

namespace symu {

namespace {

int word_count(int order) { return (order + 63) / 64; }

}  // namespace

AlgebraElement::AlgebraElement(const Group& g, const Ring& r) : group_(&g), ring_(&r) {
  if (gf2())
    bits_.assign(word_count(g.order), 0);
  else
    bytes_.assign(g.order, 0);
}

AlgebraElement AlgebraElement::one(const Group& g, const Ring& r) {
  return embed(g, r, Group::identity);
}

AlgebraElement AlgebraElement::embed(const Group& g, const Ring& r, int element) {
  if (!g.valid_index(element)) throw std::invalid_argument("embed: element out of range");
  AlgebraElement a(g, r);
  a.set_coeff(element, Ring::one);
  return a;
}

AlgebraElement AlgebraElement::from_coeffs(const Group& g, const Ring& r,
                                           const std::vector<uint8_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) != g.order)
    throw std::invalid_argument("from_coeffs: length must equal group order");
  AlgebraElement a(g, r);
  for (int i = 0; i < g.order; ++i) {
    if (coeffs[i] >= r.size()) throw std::invalid_argument("from_coeffs: coefficient out of range");
    a.set_coeff(i, coeffs[i]);
  }
  return a;
}

uint8_t AlgebraElement::coeff(int g) const {
  if (gf2()) return (bits_[g >> 6] >> (g & 63)) & 1;
  return bytes_[g];
}

void AlgebraElement::set_coeff(int g, uint8_t v) {
  if (!group_->valid_index(g)) throw std::invalid_argument("set_coeff: index out of range");
  if (gf2()) {
    uint64_t mask = 1ull << (g & 63);
    if (v & 1)
      bits_[g >> 6] |= mask;
    else
      bits_[g >> 6] &= ~mask;
  } else {
    bytes_[g] = v;
  }
}

std::vector<int> AlgebraElement::support() const {
  std::vector<int> s;
  if (gf2()) {
    for (size_t w = 0; w < bits_.size(); ++w) {
      uint64_t word = bits_[w];
      while (word) {
        int b = std::countr_zero(word);
        s.push_back(static_cast<int>(w * 64 + b));
        word &= word - 1;
      }
    }
  } else {
    for (int i = 0; i < group_->order; ++i)
      if (bytes_[i]) s.push_back(i);
  }
  return s;
}

bool AlgebraElement::is_zero() const {
  if (gf2()) {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }
  for (uint8_t b : bytes_)
    if (b) return false;
  return true;
}

void AlgebraElement::ensure_compatible(const AlgebraElement& rhs) const {
  if (group_ != rhs.group_ || ring_ != rhs.ring_)
    throw std::invalid_argument("algebra operands live in different group algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  ensure_compatible(rhs);
  AlgebraElement out(*group_, *ring_);
  if (gf2()) {
    for (size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] ^ rhs.bits_[w];
  } else {
    for (int i = 0; i < group_->order; ++i)
      out.bytes_[i] = ring_->add(bytes_[i], rhs.bytes_[i]);
  }
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  ensure_compatible(rhs);
  AlgebraElement out(*group_, *ring_);
  if (gf2()) {
    for (size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = bits_[w] ^ rhs.bits_[w];
  } else {
    for (int i = 0; i < group_->order; ++i)
      out.bytes_[i] = ring_->sub(bytes_[i], rhs.bytes_[i]);
  }
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  ensure_compatible(rhs);
  AlgebraElement out(*group_, *ring_);
  const Group& g = *group_;
  if (gf2()) {
    // row-shuffle XOR accumulation: each g in supp(a) contributes the
    // b-coefficients scattered along row g of the Cayley table
    std::vector<int> sb = rhs.support();
    for (size_t w = 0; w < bits_.size(); ++w) {
      uint64_t word = bits_[w];
      while (word) {
        int a = static_cast<int>(w * 64 + std::countr_zero(word));
        word &= word - 1;
        const std::vector<int>& row = g.table[a];
        for (int h : sb) {
          int t = row[h];
          out.bits_[t >> 6] ^= 1ull << (t & 63);
        }
      }
    }
  } else {
    std::vector<int> sa = support();
    std::vector<int> sb = rhs.support();
    for (int a : sa) {
      const uint8_t ca = bytes_[a];
      const std::vector<int>& row = g.table[a];
      for (int h : sb) {
        int t = row[h];
        out.bytes_[t] = ring_->add(out.bytes_[t], ring_->mul(ca, rhs.bytes_[h]));
      }
    }
  }
  return out;
}

AlgebraElement AlgebraElement::scaled(uint8_t c) const {
  AlgebraElement out(*group_, *ring_);
  if (gf2()) {
    if (c & 1) out.bits_ = bits_;
  } else {
    for (int i = 0; i < group_->order; ++i) out.bytes_[i] = ring_->mul(bytes_[i], c);
  }
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
  if (group_ != rhs.group_ || ring_ != rhs.ring_) return false;
  return gf2() ? bits_ == rhs.bits_ : bytes_ == rhs.bytes_;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(*group_, *ring_);
  for (int i = 0; i < group_->order; ++i) {
    uint8_t c = coeff(i);
    if (c) out.set_coeff(group_->inv(i), c);
  }
  return out;
}

uint8_t AlgebraElement::augmentation() const {
  if (gf2()) {
    uint64_t parity = 0;
    for (uint64_t w : bits_) parity ^= w;
    return static_cast<uint8_t>(std::popcount(parity) & 1);
  }
  uint8_t s = 0;
  for (uint8_t b : bytes_) s = ring_->add(s, b);
  return s;
}

bool AlgebraElement::is_unit() const {
  int n = group_->order;
  int p = ring_->characteristic();
  while (n % p == 0) n /= p;
  if (n != 1)
    throw std::invalid_argument(
        "is_unit: local-ring criterion needs |G| a power of the characteristic");
  return augmentation() != 0;
}

AlgebraElement AlgebraElement::inverse() const {
  if (!is_unit()) throw std::invalid_argument("inverse: element is not a unit");
  uint8_t c = augmentation();
  uint8_t u = ring_->inv(c);
  // n = 1 - u*a has augmentation 0, hence is nilpotent; a^-1 = u * sum n^k
  AlgebraElement one_el = one(*group_, *ring_);
  AlgebraElement n = one_el - scaled(u);
  AlgebraElement sum = one_el;
  AlgebraElement power = n;
  int steps = 0;
  while (!power.is_zero()) {
    sum = sum + power;
    power = power * n;
    if (++steps > group_->order)
      throw std::runtime_error("inverse: series failed to terminate within |G| steps");
  }
  return sum.scaled(u);
}

std::string AlgebraElement::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> names = element_names(*group_);
  std::string s;
  for (int i = 0; i < group_->order; ++i) {
    uint8_t c = coeff(i);
    if (!c) continue;
    if (!s.empty()) s += " + ";
    if (c != Ring::one) {
      // quadratic-extension coefficients render as a+b*w
      int p = ring_->characteristic();
      std::string cs;
      if (ring_->size() == p) {
        cs = std::to_string(c);
      } else {
        int a0 = c % p;
        int a1 = c / p;
        if (a1 == 0) cs = std::to_string(a0);
        else {
          cs = a1 == 1 ? "w" : std::to_string(a1) + "w";
          if (a0) cs = std::to_string(a0) + "+" + cs;
          cs = "(" + cs + ")";
        }
      }
      s += cs;
      if (i != Group::identity) s += "*";
    }
    if (i != Group::identity)
      s += names[i];
    else if (c == Ring::one)
      s += "1";
  }
  return s;
}

bool commute(const AlgebraElement& a, const AlgebraElement& b) { return a * b == b * a; }

}  // namespace symu
