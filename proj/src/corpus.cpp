#include "symu/corpus.hpp"

#include <stdexcept>

#include "symu/coset_enum.hpp"
#include "symu/presentation.hpp"

namespace symu {

const char* h32_presentation_text() {
  return "# H32\n"
         "gens: x y u\n"
         "x^4 = y^4 = 1\n"
         "x^2 = [y,x]\n"
         "y^2 = u^2 = [u,x]\n"
         "x^2 y^2 = [u,y]\n";
}

const char* h245_presentation_text() {
  return "# H245\n"
         "gens: x y u v\n"
         "x^4 = y^4 = [v,u] = 1\n"
         "x^2 = v^2 = [y,x] = [v,y]\n"
         "y^2 = u^2 = [u,x]\n"
         "x^2 y^2 = [u,y] = [v,x]\n";
}

const char* iii_factor_presentation_text() {
  return "gens: x y\n"
         "x^4 = y^4 = 1\n"
         "x^2 = [y,x]\n";
}

namespace {

Group from_presentation_text(const char* text, const std::string& label) {
  return group_from_presentation(parse_presentation(text), 100000, label);
}

Group semidihedral16() {
  return from_presentation_text(
      "gens: a b\n"
      "a^8 = b^2 = 1\n"
      "b^-1 a b = a^3\n",
      "SD16");
}

Group modular16() {
  return from_presentation_text(
      "gens: a b\n"
      "a^8 = b^2 = 1\n"
      "b^-1 a b = a^5\n",
      "M16");
}

// (C2 x C2) x| C4 with the generator of C4 swapping the two involutions
Group c2c2_semidirect_c4() {
  return from_presentation_text(
      "gens: a b y\n"
      "a^2 = b^2 = y^4 = 1\n"
      "[a,b] = 1\n"
      "y^-1 a y = b\n"
      "y^-1 b y = a\n",
      "(C2xC2):C4");
}

int unique_involution_of(const Group& g) {
  int found = -1;
  for (int t = 1; t < g.order; ++t)
    if (g.mul(t, t) == Group::identity) {
      if (found >= 0) throw std::logic_error("involution not unique in " + g.label);
      found = t;
    }
  if (found < 0) throw std::logic_error("no involution in " + g.label);
  return found;
}

int central_involution_of(const Group& g) {
  Subgroup z = center_subgroup(g);
  for (int t : z.elements)
    if (t != Group::identity && g.mul(t, t) == Group::identity) return t;
  throw std::logic_error("no central involution in " + g.label);
}

Group q8_o_c4() {
  Group q8 = generalized_quaternion_group(8);
  Group c4 = cyclic_group(4);
  return central_product(q8, unique_involution_of(q8), c4, c4.mul(1, 1));
}

Group d8_o_c4() {
  Group d8 = dihedral_group(4);
  Group c4 = cyclic_group(4);
  return central_product(d8, central_involution_of(d8), c4, c4.mul(1, 1));
}

Group extraspecial32_plus() {
  Group d8a = dihedral_group(4);
  Group d8b = dihedral_group(4);
  return central_product(d8a, central_involution_of(d8a), d8b, central_involution_of(d8b));
}

Group extraspecial32_minus() {
  Group d8 = dihedral_group(4);
  Group q8 = generalized_quaternion_group(8);
  return central_product(d8, central_involution_of(d8), q8, unique_involution_of(q8));
}

}  // namespace

Group iii_factor_group() {
  return from_presentation_text(iii_factor_presentation_text(), "F16");
}

std::vector<CorpusEntry> small_group_corpus(int max_order) {
  if (max_order > 16) throw std::invalid_argument("corpus covers orders <= 16 only");
  std::vector<CorpusEntry> all;
  auto add = [&](const std::string& name, Group g) {
    if (g.order <= max_order) all.push_back({name, std::move(g)});
  };

  add("C1", cyclic_group(1));
  add("C2", cyclic_group(2));

  add("C4", cyclic_group(4));
  add("C2xC2", elementary_abelian_2(2));

  add("C8", cyclic_group(8));
  add("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
  add("C2^3", elementary_abelian_2(3));
  add("D8", dihedral_group(4));
  add("Q8", generalized_quaternion_group(8));

  add("C16", cyclic_group(16));
  add("C8xC2", direct_product(cyclic_group(8), cyclic_group(2)));
  add("C4xC4", direct_product(cyclic_group(4), cyclic_group(4)));
  add("C4xC2xC2", direct_product(cyclic_group(4), elementary_abelian_2(2)));
  add("C2^4", elementary_abelian_2(4));
  add("D16", dihedral_group(8));
  add("SD16", semidihedral16());
  add("Q16", generalized_quaternion_group(16));
  add("M16", modular16());
  add("D8xC2", direct_product(dihedral_group(4), cyclic_group(2)));
  add("Q8xC2", direct_product(generalized_quaternion_group(8), cyclic_group(2)));
  add("D8oC4", d8_o_c4());
  add("C4:C4", semidirect_c2m_c4(2));
  add("(C2xC2):C4", c2c2_semidirect_c4());

  return all;
}

std::vector<CorpusEntry> corpus_candidates() {
  std::vector<CorpusEntry> c;
  // alternate routes to corpus members
  c.push_back({"dihedral:1 (= C2)", dihedral_group(1)});
  c.push_back({"dihedral:2 (= C2xC2)", dihedral_group(2)});
  c.push_back({"Q8 o C4 (= D8 o C4)", q8_o_c4()});
  c.push_back({"C4:C4 by presentation", from_presentation_text(
                                            "gens: x y\n"
                                            "x^4 = y^4 = 1\n"
                                            "y^-1 x y = x^-1\n",
                                            "C4:C4-pres")});
  c.push_back({"(iii) factor (= C4:C4)", iii_factor_group()});
  c.push_back({"C2 x C2 x C2 as product", direct_product(elementary_abelian_2(2), cyclic_group(2))});
  c.push_back({"central product with trivial amalgamation (= Q8 x C2)",
               central_product(generalized_quaternion_group(8), Group::identity, cyclic_group(2),
                               Group::identity)});
  return c;
}

std::vector<CorpusEntry> family_positives() {
  std::vector<CorpusEntry> v;
  Group q8 = generalized_quaternion_group(8);
  v.push_back({"Q8xC4", direct_product(q8, cyclic_group(4))});
  v.push_back({"Q8xQ8", direct_product(q8, generalized_quaternion_group(8))});
  v.push_back({"F16oQ8", reference_groups().iii_product});
  v.push_back({"H32", reference_groups().h32});
  v.push_back({"H245", reference_groups().h245});
  return v;
}

std::vector<CorpusEntry> family_negatives() {
  std::vector<CorpusEntry> v;
  v.push_back({"D8", dihedral_group(4)});
  v.push_back({"C2xD8", direct_product(cyclic_group(2), dihedral_group(4))});
  v.push_back({"ES32+", extraspecial32_plus()});
  v.push_back({"ES32-", extraspecial32_minus()});
  v.push_back({"Q8oC4", q8_o_c4()});
  v.push_back({"D8oC4", d8_o_c4()});
  return v;
}

const ReferenceGroups& reference_groups() {
  static const ReferenceGroups refs = [] {
    ReferenceGroups r{
        direct_product(generalized_quaternion_group(8), cyclic_group(4)),
        direct_product(generalized_quaternion_group(8), generalized_quaternion_group(8)),
        Group{},
        from_presentation_text(h32_presentation_text(), "H32"),
        from_presentation_text(h245_presentation_text(), "H245"),
    };
    // (iii): F o Q8 identifying x^2 y^2 with the quaternion involution
    Group f = iii_factor_group();
    int x = f.generators.at(0).second;
    int y = f.generators.at(1).second;
    int x2y2 = f.mul(f.mul(x, x), f.mul(y, y));
    Group q8 = generalized_quaternion_group(8);
    r.iii_product = central_product(f, x2y2, q8, unique_involution_of(q8));
    return r;
  }();
  return refs;
}

}  // namespace symu
