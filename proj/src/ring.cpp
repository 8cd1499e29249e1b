#include "symu/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace symu {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Ring::Ring(int p, int degree) : p_(p), q_(degree == 1 ? p : p * p) {
  if (!is_prime(p)) throw std::invalid_argument("ring characteristic must be prime");
  if (degree != 1 && degree != 2) throw std::invalid_argument("only GF(p) and GF(p^2)");
  if (q_ > 255) throw std::invalid_argument("field too large");
  name_ = "GF(" + std::to_string(q_) + ")";

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  if (degree == 1) {
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<uint8_t>((a + b) % p_);
        mul_[a * q_ + b] = static_cast<uint8_t>((a * b) % p_);
      }
  } else {
    // find the lexicographically first irreducible x^2 + Bx + C over GF(p);
    // for p = 2 this is w^2 + w + 1
    int B = -1, C = -1;
    for (int b = 0; b < p_ && B < 0; ++b)
      for (int c = 0; c < p_ && B < 0; ++c) {
        bool has_root = false;
        for (int t = 0; t < p_ && !has_root; ++t) has_root = (t * t + b * t + c) % p_ == 0;
        if (!has_root) {
          B = b;
          C = c;
        }
      }
    if (B < 0) throw std::runtime_error("no irreducible quadratic found");
    auto enc = [&](int a0, int a1) { return a0 + a1 * p_; };
    for (int a0 = 0; a0 < p_; ++a0)
      for (int a1 = 0; a1 < p_; ++a1)
        for (int b0 = 0; b0 < p_; ++b0)
          for (int b1 = 0; b1 < p_; ++b1) {
            int s0 = (a0 + b0) % p_;
            int s1 = (a1 + b1) % p_;
            add_[enc(a0, a1) * q_ + enc(b0, b1)] = static_cast<uint8_t>(enc(s0, s1));
            // (a0 + a1 w)(b0 + b1 w) with w^2 = -(B w + C)
            int c0 = a0 * b0;
            int c1 = a0 * b1 + a1 * b0;
            int c2 = a1 * b1;
            int m0 = ((c0 - c2 * C) % p_ + p_) % p_;
            int m1 = ((c1 - c2 * B) % p_ + p_) % p_;
            mul_[enc(a0, a1) * q_ + enc(b0, b1)] = static_cast<uint8_t>(enc(m0, m1));
          }
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      if (add_[a * q_ + b] == 0) {
        neg_[a] = static_cast<uint8_t>(b);
        break;
      }
  for (int a = 1; a < q_; ++a) {
    inv_[a] = 0;
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }
  }
  validate();
}

void Ring::validate() const {
  for (int a = 0; a < q_; ++a) {
    if (mul(1, a) != a || mul(a, 1) != a || add(0, a) != a)
      throw std::runtime_error("ring identity broken");
    if (a != 0 && inv_[a] == 0) throw std::runtime_error("noninvertible nonzero element");
    // characteristic: p * 1 = 0, k * 1 != 0 for 0 < k < p
    uint8_t acc = 0;
    for (int k = 1; k <= p_; ++k) {
      acc = add(acc, 1);
      if (k < p_ && acc == 0) throw std::runtime_error("characteristic too small");
    }
    if (acc != 0) throw std::runtime_error("declared characteristic wrong");
    for (int b = 0; b < q_; ++b) {
      if (mul(a, b) != mul(b, a)) throw std::runtime_error("ring not commutative");
      for (int c = 0; c < q_; ++c)
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw std::runtime_error("distributivity broken");
    }
  }
}

uint8_t Ring::inv(uint8_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero in " + name_);
  return inv_[a];
}

const Ring& Ring::gf(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p = -1, degree = 0;
  if (is_prime(q)) {
    p = q;
    degree = 1;
  } else {
    for (int r = 2; r * r <= q; ++r)
      if (r * r == q && is_prime(r)) {
        p = r;
        degree = 2;
      }
  }
  if (p < 0) throw std::invalid_argument("GF(" + std::to_string(q) + ") unsupported: need p or p^2");
  auto ring = std::unique_ptr<Ring>(new Ring(p, degree));
  const Ring& ref = *ring;
  cache.emplace(q, std::move(ring));
  return ref;
}

const Ring& Ring::parse(const std::string& spec) {
  try {
    if (auto pos = spec.find('^'); pos != std::string::npos) {
      int p = std::stoi(spec.substr(0, pos));
      int e = std::stoi(spec.substr(pos + 1));
      if (e != 1 && e != 2) throw std::invalid_argument("exponent must be 1 or 2");
      return gf(e == 1 ? p : p * p);
    }
    return gf(std::stoi(spec));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad ring spec: " + spec);
  }
}

}  // namespace symu
