#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "oracles.hpp"
#include "symu/algebra.hpp"
#include "symu/corpus.hpp"
#include "symu/group.hpp"
#include "symu/ring.hpp"

using namespace symu;

TEST_CASE("coefficient fields: tables, characteristic, inverses") {
  const Ring& f2 = Ring::gf(2);
  CHECK(f2.characteristic() == 2);
  CHECK(f2.size() == 2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);

  const Ring& f3 = Ring::gf(3);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.neg(1) == 2);

  // GF(4) = GF(2)[w]/(w^2+w+1): w is index 2, w^2 = w+1 is index 3
  const Ring& f4 = Ring::gf(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.size() == 4);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);  // w * (w+1) = 1
  CHECK(f4.add(2, 3) == 1);
  CHECK(f4.inv(2) == 3);

  CHECK(&Ring::parse("2") == &f2);
  CHECK(&Ring::parse("4") == &f4);
  CHECK(&Ring::parse("2^2") == &f4);
  CHECK(&Ring::parse("3^2") == &Ring::gf(9));
  CHECK_THROWS_AS(Ring::parse("6"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("banana"), std::invalid_argument);
  CHECK_THROWS_AS((void)f2.inv(0), std::invalid_argument);
}

TEST_CASE("embedding respects the group law; zero is neutral") {
  Group q8 = generalized_quaternion_group(8);
  for (const Ring* r : {&Ring::gf(2), &Ring::gf(3), &Ring::gf(4)}) {
    for (int g = 0; g < q8.order; ++g)
      for (int h = 0; h < q8.order; ++h)
        CHECK(AlgebraElement::embed(q8, *r, g) * AlgebraElement::embed(q8, *r, h) ==
              AlgebraElement::embed(q8, *r, q8.mul(g, h)));
    uint64_t state = 17;
    AlgebraElement a = oracles::random_element(q8, *r, state);
    CHECK(a + AlgebraElement::zero(q8, *r) == a);
  }
}

TEST_CASE("(g+g^-1)(h+h^-1) expands to the four-term sums of the paper's identity") {
  // in any group algebra: (g+g^-1)(h+h^-1) = gh + gh^-1 + g^-1h + g^-1h^-1,
  // and commuting with (h+h^-1)(g+g^-1) is exactly the displayed identity
  Group s = semidirect_c2m_c4(2);
  const Ring& r = Ring::gf(2);
  int g = s.generators[0].second;
  int h = s.generators[1].second;
  auto e = [&](int x) { return AlgebraElement::embed(s, r, x); };
  AlgebraElement lhs = (e(g) + e(s.inv(g))) * (e(h) + e(s.inv(h)));
  AlgebraElement four = e(s.mul(g, h)) + e(s.mul(g, s.inv(h))) + e(s.mul(s.inv(g), h)) +
                        e(s.mul(s.inv(g), s.inv(h)));
  CHECK(lhs == four);
}

TEST_CASE("star: basis action, involution, anti-automorphism") {
  Group q8 = generalized_quaternion_group(8);
  const Ring& r2 = Ring::gf(2);
  for (int g = 0; g < q8.order; ++g)
    CHECK(AlgebraElement::embed(q8, r2, g).star() == AlgebraElement::embed(q8, r2, q8.inv(g)));

  // 1 + i + j |-> 1 + i^3 + j^3
  int i = q8.generators[0].second;
  int j = q8.generators[1].second;
  AlgebraElement a = AlgebraElement::one(q8, r2) + AlgebraElement::embed(q8, r2, i) +
                     AlgebraElement::embed(q8, r2, j);
  AlgebraElement expect = AlgebraElement::one(q8, r2) +
                          AlgebraElement::embed(q8, r2, q8.pow(i, 3)) +
                          AlgebraElement::embed(q8, r2, q8.pow(j, 3));
  CHECK(a.star() == expect);

  uint64_t state = 99;
  for (const Ring* r : {&Ring::gf(2), &Ring::gf(3), &Ring::gf(4)}) {
    for (int rep = 0; rep < 50; ++rep) {
      AlgebraElement x = oracles::random_element(q8, *r, state);
      AlgebraElement y = oracles::random_element(q8, *r, state);
      CHECK(x.star().star() == x);
      CHECK((x * y).star() == y.star() * x.star());
    }
  }
}

TEST_CASE("augmentation is a ring homomorphism") {
  Group d8 = dihedral_group(4);
  const Ring& r2 = Ring::gf(2);
  CHECK(AlgebraElement::embed(d8, r2, 3).augmentation() == 1);
  AlgebraElement one_plus_g = AlgebraElement::one(d8, r2) + AlgebraElement::embed(d8, r2, 1);
  CHECK(one_plus_g.augmentation() == 0);

  // -1 + g + g^-1 over GF(2) is 1 + g + g^-1: augmentation 1
  AlgebraElement m = AlgebraElement::one(d8, r2) + AlgebraElement::embed(d8, r2, 1) +
                     AlgebraElement::embed(d8, r2, d8.inv(1));
  CHECK(m.augmentation() == 1);

  uint64_t state = 5;
  for (const Ring* r : {&Ring::gf(2), &Ring::gf(3), &Ring::gf(4)}) {
    for (int rep = 0; rep < 50; ++rep) {
      AlgebraElement x = oracles::random_element(d8, *r, state);
      AlgebraElement y = oracles::random_element(d8, *r, state);
      CHECK((x * y).augmentation() == r->mul(x.augmentation(), y.augmentation()));
      CHECK((x + y).augmentation() == r->add(x.augmentation(), y.augmentation()));
    }
  }
}

TEST_CASE("is_symmetric on S-shaped elements") {
  Group q8 = generalized_quaternion_group(8);
  const Ring& r2 = Ring::gf(2);
  int z = -1;
  for (int x = 1; x < q8.order; ++x)
    if (q8.mul(x, x) == Group::identity) z = x;
  CHECK(AlgebraElement::embed(q8, r2, z).is_symmetric());
  int i = q8.generators[0].second;
  CHECK((AlgebraElement::embed(q8, r2, i) + AlgebraElement::embed(q8, r2, q8.inv(i)))
            .is_symmetric());
  CHECK(!AlgebraElement::embed(q8, r2, i).is_symmetric());
}

TEST_CASE("multiplication agrees with the naive convolution oracle") {
  uint64_t state = 0xC0FFEE;
  for (const auto& entry : small_group_corpus(16)) {
    for (const Ring* r : {&Ring::gf(2), &Ring::gf(3), &Ring::gf(4)}) {
      for (int rep = 0; rep < 8; ++rep) {
        AlgebraElement a = oracles::random_element(entry.group, *r, state);
        AlgebraElement b = oracles::random_element(entry.group, *r, state);
        CHECK(a * b == oracles::naive_mul(a, b));
      }
    }
  }
}

TEST_CASE("associativity and distributivity on random triples") {
  Group g = semidirect_c2m_c4(2);
  uint64_t state = 42;
  for (const Ring* r : {&Ring::gf(2), &Ring::gf(3), &Ring::gf(4)}) {
    for (int rep = 0; rep < 30; ++rep) {
      AlgebraElement a = oracles::random_element(g, *r, state);
      AlgebraElement b = oracles::random_element(g, *r, state);
      AlgebraElement c = oracles::random_element(g, *r, state);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("is_unit: local ring criterion and its precondition") {
  Group q8 = generalized_quaternion_group(8);
  const Ring& r2 = Ring::gf(2);
  CHECK(AlgebraElement::one(q8, r2).is_unit());
  AlgebraElement one_plus_g = AlgebraElement::one(q8, r2) + AlgebraElement::embed(q8, r2, 1);
  CHECK(!one_plus_g.is_unit());

  // -1 + g + g^-1 is a symmetric unit
  int i = q8.generators[0].second;
  AlgebraElement m = AlgebraElement::one(q8, r2) + AlgebraElement::embed(q8, r2, i) +
                     AlgebraElement::embed(q8, r2, q8.inv(i));
  CHECK(m.is_symmetric());
  CHECK(m.is_unit());

  // |G| must be a power of the characteristic
  Group c3 = cyclic_group(3);
  CHECK_THROWS_AS((void)AlgebraElement::one(c3, r2).is_unit(), std::invalid_argument);
  CHECK(AlgebraElement::one(c3, Ring::gf(3)).is_unit());
}

TEST_CASE("is_unit matches exhaustive inverse search (order <= 8 over GF(2), C3 over GF(3))") {
  uint64_t state = 7;
  for (const auto& entry : small_group_corpus(8)) {
    const Ring& r = Ring::gf(2);
    for (int rep = 0; rep < 10; ++rep) {
      AlgebraElement a = oracles::random_element(entry.group, r, state);
      auto brute = oracles::exhaustive_inverse(a);
      CHECK(a.is_unit() == brute.has_value());
      if (brute) CHECK(a.inverse() == *brute);
    }
  }
  Group c3 = cyclic_group(3);
  const Ring& r3 = Ring::gf(3);
  for (int rep = 0; rep < 10; ++rep) {
    AlgebraElement a = oracles::random_element(c3, r3, state);
    auto brute = oracles::exhaustive_inverse(a);
    CHECK(a.is_unit() == brute.has_value());
  }
}

TEST_CASE("inverse: basis elements, series computation, symmetric inverses") {
  Group c4 = cyclic_group(4);
  const Ring& r2 = Ring::gf(2);
  for (int g = 0; g < c4.order; ++g)
    CHECK(AlgebraElement::embed(c4, r2, g).inverse() ==
          AlgebraElement::embed(c4, r2, c4.inv(g)));

  // 1 + (g + g^2) over GF(2), G = C4
  AlgebraElement a = AlgebraElement::one(c4, r2) + AlgebraElement::embed(c4, r2, 1) +
                     AlgebraElement::embed(c4, r2, 2);
  AlgebraElement ai = a.inverse();
  CHECK(a * ai == AlgebraElement::one(c4, r2));
  CHECK(ai * a == AlgebraElement::one(c4, r2));

  // inverse of -1 + g + g^-1 is symmetric when g + g^-1 is central
  Group q8 = generalized_quaternion_group(8);
  int i = q8.generators[0].second;
  AlgebraElement s = AlgebraElement::embed(q8, r2, i) + AlgebraElement::embed(q8, r2, q8.inv(i));
  bool central = true;
  for (int h = 0; h < q8.order && central; ++h)
    central = commute(s, AlgebraElement::embed(q8, r2, h));
  REQUIRE(central);  // i + i^-1 is central in KQ8: conjugation fixes {i, i^-1}
  AlgebraElement m = AlgebraElement::one(q8, r2) + s;
  CHECK(m.inverse().is_symmetric());

  AlgebraElement nonunit = AlgebraElement::one(c4, r2) + AlgebraElement::embed(c4, r2, 1);
  CHECK_THROWS_AS((void)nonunit.inverse(), std::invalid_argument);
}

TEST_CASE("(b + b^-1)^2 = 0 in characteristic 2 whenever order(b) = 4") {
  for (const auto& entry : small_group_corpus(16)) {
    const Group& g = entry.group;
    const Ring& r2 = Ring::gf(2);
    for (int b = 0; b < g.order; ++b) {
      if (element_order(g, b) != 4) continue;
      AlgebraElement s = AlgebraElement::embed(g, r2, b) + AlgebraElement::embed(g, r2, g.inv(b));
      CHECK((s * s).is_zero());
    }
  }
}

TEST_CASE("commute: centrality and a genuine non-commuting pair in KD8") {
  Group d8 = dihedral_group(4);
  const Ring& r2 = Ring::gf(2);
  int r = d8.generators[0].second;
  int s = d8.generators[1].second;

  // r^2 is central
  AlgebraElement central = AlgebraElement::embed(d8, r2, d8.mul(r, r));
  uint64_t state = 3;
  for (int rep = 0; rep < 20; ++rep)
    CHECK(commute(central, oracles::random_element(d8, r2, state)));

  // s does commute with r + r^-1 (conjugation by s swaps r and r^-1)
  AlgebraElement rr = AlgebraElement::embed(d8, r2, r) + AlgebraElement::embed(d8, r2, d8.inv(r));
  CHECK(commute(AlgebraElement::embed(d8, r2, s), rr));

  // the involutions s and rs do not commute
  AlgebraElement es = AlgebraElement::embed(d8, r2, s);
  AlgebraElement ers = AlgebraElement::embed(d8, r2, d8.mul(r, s));
  CHECK(!commute(es, ers));

  CHECK(commute(es, es));

  Group c4 = cyclic_group(4);
  CHECK_THROWS_AS((void)commute(es, AlgebraElement::one(c4, r2)), std::invalid_argument);
}

TEST_CASE("operand compatibility is enforced") {
  Group a = cyclic_group(4);
  Group b = cyclic_group(4);
  const Ring& r2 = Ring::gf(2);
  CHECK_THROWS_AS(AlgebraElement::one(a, r2) + AlgebraElement::one(b, r2),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlgebraElement::one(a, r2) * AlgebraElement::one(a, Ring::gf(4)),
                  std::invalid_argument);
}

TEST_CASE("rendering formal sums") {
  Group q8 = generalized_quaternion_group(8);
  const Ring& r2 = Ring::gf(2);
  CHECK(AlgebraElement::zero(q8, r2).to_string() == "0");
  CHECK(AlgebraElement::one(q8, r2).to_string() == "1");
  int i = q8.generators[0].second;
  AlgebraElement a = AlgebraElement::one(q8, r2) + AlgebraElement::embed(q8, r2, i);
  CHECK(a.to_string() == "1 + a");

  const Ring& r3 = Ring::gf(3);
  AlgebraElement b = AlgebraElement::embed(q8, r3, i).scaled(2);
  CHECK(b.to_string() == "2*a");
}
