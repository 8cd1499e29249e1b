#include "symu/verify.hpp"

#include <algorithm>
#include <sstream>

#include "symu/corpus.hpp"

namespace symu {

namespace {

struct Sweep {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Sweep sweep;
  const Ring& gf2 = Ring::gf(2);
  const Ring& gf4 = Ring::gf(4);
  const ReferenceGroups& refs = reference_groups();

  std::vector<CorpusEntry> corpus;
  if (!opts.families_only) corpus = small_group_corpus(opts.max_order);

  // criterion vs oracle at exact scale
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& e : corpus) {
      if (e.group.order > 8) continue;
      bool lhs = is_good(e.group, gf2, opts.jobs).good;
      bool rhs = closure_oracle(e.group, opts.seed, opts.sample_pairs).closed;
      if (lhs != rhs) {
        pass = false;
        detail << e.name << " disagrees; ";
      }
    }
    if (!opts.families_only)
      sweep.check("is_good == exact closure oracle (order <= 8)", pass, detail.str());
  }

  // theorem equivalence for nonabelian 2-groups in the corpus
  {
    bool pass = true;
    std::ostringstream part;
    for (const auto& e : corpus) {
      GroupInvariants inv = group_invariants(e.group);
      if (inv.is_abelian || !inv.is_2_group) continue;
      bool lhs = is_good(e.group, gf2, opts.jobs).good;
      bool rhs = theorem_rhs(e.group, refs).good;
      if (lhs != rhs) pass = false;
      part << e.name << (lhs ? ":good " : ":bad ");
    }
    if (!opts.families_only)
      sweep.check("is_good == theorem_rhs (nonabelian 2-groups)", pass, part.str());
  }

  // goodness independent of K: GF(2) vs GF(4)
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& e : corpus) {
      bool a = is_good(e.group, gf2, opts.jobs).good;
      bool b = is_good(e.group, gf4, opts.jobs).good;
      if (a != b) {
        pass = false;
        detail << e.name << " differs; ";
      }
    }
    if (!opts.families_only) sweep.check("K-independence: GF(2) == GF(4)", pass, detail.str());
  }

  // p = 2 obstruction
  {
    const Ring& gf3 = Ring::gf(3);
    Group h3 = heisenberg3();
    bool h3_good = is_good(h3, gf3, opts.jobs).good;
    Group h3c3 = direct_product(h3, cyclic_group(3));
    bool h3c3_good = is_good(h3c3, gf3, opts.jobs).good;
    sweep.check("p = 2 obstruction: Heis3 and Heis3 x C3 not good over GF(3)",
                !h3_good && !h3c3_good);
  }

  // involutions central in good nonabelian groups; lemma sweeps;
  // xy_normal_form coverage
  {
    bool inv_pass = true, l1_pass = true, l2_pass = true, xy_pass = true;
    std::ostringstream l2_detail;
    std::vector<CorpusEntry> scope = corpus;
    for (auto& e : family_positives()) scope.push_back(e);
    for (const auto& e : scope) {
      GroupInvariants inv = group_invariants(e.group);
      if (inv.is_abelian) continue;
      if (!is_good(e.group, gf2, opts.jobs).good) continue;
      if (!involutions_central(e.group)) inv_pass = false;
      if (!verify_lemma1(e.group).pass) l1_pass = false;
      if (inv.exponent != 4) {
        Lemma2Result l2 = verify_lemma2(e.group);
        if (l2.status != Lemma2Result::Status::verified) {
          l2_pass = false;
          l2_detail << e.name << ": " << l2.reason << "; ";
        }
      }
      for (int a = 0; a < e.group.order && xy_pass; ++a)
        for (int b = a + 1; b < e.group.order; ++b) {
          if (e.group.mul(a, b) == e.group.mul(b, a)) continue;
          auto xy = xy_normal_form(e.group, a, b);
          if (!xy) {
            xy_pass = false;
            break;
          }
        }
    }
    sweep.check("every involution is central in good nonabelian groups", inv_pass);
    sweep.check("lemma 1 sweep over good nonabelian groups", l1_pass);
    sweep.check("lemma 2 sweep (exponent != 4)", l2_pass, l2_detail.str());
    sweep.check("xy normal form on all noncommuting pairs of good groups", xy_pass);
  }

  // family positives: good, exponent 4, Frattini order 4
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& e : family_positives()) {
      GroupInvariants inv = group_invariants(e.group);
      bool ok = is_good(e.group, gf2, opts.jobs).good && inv.exponent == 4 &&
                frattini_2group(e.group).order() == 4;
      if (!ok) {
        pass = false;
        detail << e.name << " fails; ";
      }
    }
    sweep.check("family positives good with exponent 4, Frattini order 4", pass, detail.str());
  }

  // family negatives: not good, with a verifiable witness
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& e : family_negatives()) {
      GoodnessReport rep = is_good(e.group, gf2, opts.jobs);
      bool ok = !rep.good && rep.witness &&
                !commute(rep.witness->first.elem, rep.witness->second.elem);
      if (!ok) {
        pass = false;
        detail << e.name << " unexpectedly good or witness missing; ";
      }
    }
    sweep.check("family negatives not good, witnesses verifiable", pass, detail.str());
  }

  // only two 2-generator nonabelian exponent-4 groups with central
  // involutions among orders dividing 16; both satisfy (i)
  if (!opts.families_only && opts.max_order >= 16) {
    int count = 0;
    bool cond_i = true;
    std::ostringstream names;
    for (const auto& e : corpus) {
      GroupInvariants inv = group_invariants(e.group);
      if (inv.is_abelian || !inv.is_2_group || inv.exponent != 4) continue;
      if (!involutions_central(e.group)) continue;
      if (minimal_generator_count_2group(e.group) != 2) continue;
      ++count;
      names << e.name << " ";
      if (!check_condition_i(e.group)) cond_i = false;
    }
    sweep.check("exactly two 2-generator nonabelian exponent-4 groups with central involutions",
                count == 2 && cond_i, names.str());
  }

  // corpus deduplication stability
  if (!opts.families_only) {
    bool distinct = true;
    for (size_t i = 0; i < corpus.size() && distinct; ++i)
      for (size_t j = i + 1; j < corpus.size(); ++j)
        if (corpus[i].group.order == corpus[j].group.order &&
            is_isomorphic(corpus[i].group, corpus[j].group)) {
          distinct = false;
          break;
        }
    bool covered = true;
    std::ostringstream detail;
    if (opts.max_order >= 16) {
      for (const auto& cand : corpus_candidates()) {
        int hits = 0;
        for (const auto& e : corpus)
          if (cand.group.order == e.group.order && is_isomorphic(cand.group, e.group)) ++hits;
        if (hits != 1) {
          covered = false;
          detail << cand.name << " matched " << hits << " members; ";
        }
      }
    }
    sweep.check("corpus deduplication stable (pairwise distinct, candidates covered once)",
                distinct && covered, detail.str());
  }

  // element orders divide exponent; exponent divides |G|
  {
    bool pass = true;
    std::vector<CorpusEntry> scope = opts.families_only ? family_positives() : corpus;
    for (const auto& e : scope) {
      GroupInvariants inv = group_invariants(e.group);
      if (e.group.order % inv.exponent != 0) pass = false;
      for (int a = 0; a < e.group.order; ++a)
        if (inv.exponent % element_order(e.group, a) != 0) pass = false;
    }
    sweep.check("element orders divide exponent; exponent divides order", pass);
  }

  // recognizers on their defining families
  if (!opts.families_only) {
    bool pass = true;
    for (int n : {8, 16, 32})
      if (!recognize_generalized_quaternion(generalized_quaternion_group(n))) pass = false;
    for (int m : {2, 3})
      if (!recognize_c2m_c4(semidirect_c2m_c4(m))) pass = false;
    if (recognize_generalized_quaternion(dihedral_group(4))) pass = false;
    if (recognize_c2m_c4(generalized_quaternion_group(16))) pass = false;
    sweep.check("structure recognizers on family constructors", pass);
  }

  return sweep.results;
}

}  // namespace symu
