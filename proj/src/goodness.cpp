#include "symu/goodness.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "symu/errors.hpp"

namespace symu {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string SEntry::describe(const Group& grp) const {
  std::vector<std::string> names = element_names(grp);
  if (involution) return names[g];
  return names[g] + " + " + names[g_inv];
}

SymmetricSet build_S(const Group& g, const Ring& r) {
  SymmetricSet s;
  s.group = &g;
  s.ring = &r;
  for (int t = 0; t < g.order; ++t) {
    int ti = g.inv(t);
    if (ti == t) {
      // t^2 = 1, identity included
      SEntry e{true, t, t, AlgebraElement::embed(g, r, t)};
      s.entries.push_back(std::move(e));
    } else if (t < ti) {
      AlgebraElement a = AlgebraElement::embed(g, r, t) + AlgebraElement::embed(g, r, ti);
      SEntry e{false, t, ti, std::move(a)};
      s.entries.push_back(std::move(e));
    }
  }
  std::sort(s.entries.begin(), s.entries.end(),
            [](const SEntry& a, const SEntry& b) { return a.key() < b.key(); });
  return s;
}

GoodnessReport is_good(const Group& g, const Ring& r, int jobs) {
  SymmetricSet s = build_S(g, r);
  GoodnessReport rep;
  rep.ring = r.name();

  // unordered pairs, identity entry skipped (it is central)
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(s.entries.size());
  for (int i = 0; i < n; ++i) {
    if (s.entries[i].g == Group::identity) continue;
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  auto scan = [&](size_t begin, size_t end) -> std::optional<std::pair<int, int>> {
    for (size_t k = begin; k < end; ++k) {
      const auto& [i, j] = pairs[k];
      if (!commute(s.entries[i].elem, s.entries[j].elem)) return pairs[k];
    }
    return std::nullopt;
  };

  std::optional<std::pair<int, int>> failing;
  if (jobs <= 1 || pairs.size() < 64) {
    failing = scan(0, pairs.size());
  } else {
    const int workers = std::min<int>(jobs, static_cast<int>(std::thread::hardware_concurrency() > 0
                                                                 ? std::thread::hardware_concurrency()
                                                                 : 4));
    std::vector<std::optional<std::pair<int, int>>> found(workers);
    std::vector<std::thread> threads;
    size_t chunk = (pairs.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      size_t b = w * chunk;
      size_t e = std::min(pairs.size(), b + chunk);
      threads.emplace_back([&, w, b, e] { found[w] = scan(b, e); });
    }
    for (auto& t : threads) t.join();
    // minimal failing pair regardless of which worker saw it first
    for (const auto& f : found)
      if (f && (!failing || *f < *failing)) failing = f;
  }

  if (failing) {
    rep.good = false;
    rep.witness = std::make_pair(s.entries[failing->first], s.entries[failing->second]);
  } else {
    rep.good = true;
  }
  return rep;
}

ClosureResult closure_oracle(const Group& g, uint64_t seed, long long sample_pairs) {
  if (g.order > 16) throw CapacityError("closure_oracle: order above threshold 16");
  if (!is_power_of_two(g.order))
    throw std::invalid_argument("closure_oracle: augmentation unit criterion needs a 2-group");
  const Ring& r = Ring::gf(2);
  SymmetricSet s = build_S(g, r);
  const int dim = static_cast<int>(s.entries.size());

  // every symmetric element is a GF(2) combination of the S basis; units
  // are the combinations with augmentation 1
  std::vector<AlgebraElement> units;
  for (uint64_t mask = 0; mask < (1ull << dim); ++mask) {
    AlgebraElement a(g, r);
    for (int i = 0; i < dim; ++i)
      if (mask & (1ull << i)) a = a + s.entries[i].elem;
    if (a.augmentation() != 0) units.push_back(std::move(a));
  }

  ClosureResult res;
  res.units = static_cast<long long>(units.size());
  res.exact = g.order <= 8;

  if (res.exact) {
    for (size_t i = 0; i < units.size(); ++i)
      for (size_t j = i; j < units.size(); ++j) {
        ++res.pairs_checked;
        if (!(units[i] * units[j]).is_symmetric()) {
          res.closed = false;
          res.witness = std::make_pair(units[i], units[j]);
          return res;
        }
      }
    res.closed = true;
    return res;
  }

  // plain modulo keeps draws identical across standard libraries
  std::mt19937_64 rng(seed);
  for (long long k = 0; k < sample_pairs; ++k) {
    size_t i = static_cast<size_t>(rng() % units.size());
    size_t j = static_cast<size_t>(rng() % units.size());
    ++res.pairs_checked;
    if (!(units[i] * units[j]).is_symmetric()) {
      res.closed = false;
      res.witness = std::make_pair(units[i], units[j]);
      return res;
    }
  }
  res.closed = true;
  return res;
}

bool involutions_central(const Group& g) {
  Subgroup z = center_subgroup(g);
  for (int t = 0; t < g.order; ++t)
    if (t != Group::identity && g.mul(t, t) == Group::identity && !z.contains(t)) return false;
  return true;
}

std::optional<std::pair<int, int>> xy_normal_form(const Group& g, int a, int b) {
  if (!g.valid_index(a) || !g.valid_index(b))
    throw std::invalid_argument("xy_normal_form: element out of range");
  if (g.mul(a, b) == g.mul(b, a)) throw std::invalid_argument("xy_normal_form: elements commute");

  const int ab = g.mul(a, b);
  int x = -1, y = -1;
  if (ab == g.mul(g.inv(a), g.inv(b))) {
    x = ab;
    y = b;
  } else if (ab == g.mul(b, g.inv(a))) {
    x = a;
    y = b;
  } else if (ab == g.mul(g.inv(b), a)) {
    x = b;
    y = a;
  } else {
    return std::nullopt;  // the four-term sum identity fails: not good
  }

  Subgroup k = subgroup_generated(g, {a, b});
  if (element_order(g, y) != 4) {
    // goodness forces y^4 = 1 unless x<y> = x^-1<y>, i.e. x^2 in <y>; in
    // that case <y> has index 2 in <x,y> and the subgroup is generalized
    // quaternion, which carries a standard (x, y) pair
    Subgroup ys = subgroup_generated(g, {y});
    if (ys.contains(g.mul(x, x))) {
      Group kg = k.to_group("<g,h>");
      if (recognize_generalized_quaternion(kg)) {
        int xo = k.order() / 2;
        int nx = -1, ny = -1;
        for (int e : k.elements)
          if (element_order(g, e) == xo) {
            nx = e;
            break;
          }
        Subgroup cyc = subgroup_generated(g, {nx});
        for (int e : k.elements)
          if (!cyc.contains(e)) {
            ny = e;
            break;
          }
        x = nx;
        y = ny;
      }
    }
  }

  // verify the contract; failure refutes goodness of the ambient group
  if (element_order(g, y) != 4) return std::nullopt;
  if (g.conj(x, y) != g.inv(x)) return std::nullopt;
  if (subgroup_generated(g, {x, y}).elements != k.elements) return std::nullopt;
  return std::make_pair(x, y);
}

Lemma1Result verify_lemma1(const Group& g) {
  Lemma1Result res;
  std::set<std::vector<int>> checked;
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b) {
      if (g.mul(a, b) == g.mul(b, a)) continue;
      Subgroup k = subgroup_generated(g, {a, b});
      if (!checked.insert(k.elements).second) continue;
      Group kg = k.to_group("<g,h>");
      if (!recognize_generalized_quaternion(kg) && !recognize_c2m_c4(kg)) {
        res.pass = false;
        res.offender = std::make_pair(a, b);
        return res;
      }
    }
  res.pass = true;
  return res;
}

Lemma2Result verify_lemma2(const Group& g) {
  Lemma2Result res;
  GroupInvariants inv = group_invariants(g);
  if (inv.is_abelian) {
    res.reason = "abelian";
    return res;
  }
  if (inv.exponent == 4) {
    res.reason = "exponent 4";
    return res;
  }
  if (!is_good(g, Ring::gf(2)).good) {
    res.reason = "not good";
    return res;
  }

  std::vector<int> gens;
  for (int a = 0; a < g.order; ++a)
    if (g.pow(a, 4) != Group::identity) gens.push_back(a);
  Subgroup A = subgroup_generated(g, gens);
  res.abelian_a = A.elements;
  if (!A.is_abelian() || 2 * A.order() != g.order) {
    res.status = Lemma2Result::Status::failed;
    res.reason = "A = <a : a^4 != 1> is not abelian of index 2";
    return res;
  }
  for (int b = 0; b < g.order; ++b) {
    if (A.contains(b) || element_order(g, b) != 4) continue;
    bool inverts = true;
    for (int a : A.elements)
      if (g.conj(a, b) != g.inv(a)) {
        inverts = false;
        break;
      }
    if (inverts) {
      res.status = Lemma2Result::Status::verified;
      res.b = b;
      return res;
    }
  }
  res.status = Lemma2Result::Status::failed;
  res.reason = "no element of order 4 inverts A";
  return res;
}

std::optional<ConditionIWitness> check_condition_i(const Group& g) {
  if (g.order % 2 != 0) return std::nullopt;
  for (const Subgroup& A : index2_subgroups(g)) {
    if (!A.is_abelian()) continue;
    for (int b = 0; b < g.order; ++b) {
      if (A.contains(b) || element_order(g, b) != 4) continue;
      bool inverts = true;
      for (int a : A.elements)
        if (g.conj(a, b) != g.inv(a)) {
          inverts = false;
          break;
        }
      if (!inverts) continue;
      // paper's remark: every element outside A then has order 4
      for (int h = 0; h < g.order; ++h)
        if (!A.contains(h) && element_order(g, h) != 4)
          throw std::runtime_error(
              "condition (i) witness found but an element outside A has order != 4");
      return ConditionIWitness{A.elements, b};
    }
  }
  return std::nullopt;
}

ConditionResults check_conditions_ii_iii_iv(const Group& g, const ReferenceGroups& refs,
                                            int iso_cap) {
  ConditionResults res;
  auto matches = [&](const Group& ref) {
    if (g.order != ref.order || !is_isomorphic(g, ref, iso_cap)) return false;
    if (res.iso_target.empty()) res.iso_target = ref.label;
    return true;
  };
  res.ii = matches(refs.q8xc4) || matches(refs.q8xq8);
  res.iii = matches(refs.iii_product);
  res.iv = matches(refs.h32) || matches(refs.h245);
  return res;
}

ConditionResults check_conditions(const Group& g, const ReferenceGroups& refs, int iso_cap) {
  ConditionResults res = check_conditions_ii_iii_iv(g, refs, iso_cap);
  res.i_witness = check_condition_i(g);
  res.i = res.i_witness.has_value();
  return res;
}

namespace {

// All subgroups of an elementary abelian 2-subgroup (given as the sorted
// element list of a subgroup of g of exponent <= 2), by closure BFS with
// canonical dedup. Small ranks only.
std::vector<std::vector<int>> all_subspaces(const Group& g, const std::vector<int>& omega) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> frontier;
  std::vector<int> trivial{Group::identity};
  seen.insert(trivial);
  out.push_back(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& u : frontier)
      for (int v : omega) {
        if (std::binary_search(u.begin(), u.end(), v)) continue;
        std::vector<int> bigger;
        for (int x : u) {
          bigger.push_back(x);
          bigger.push_back(g.mul(x, v));
        }
        std::sort(bigger.begin(), bigger.end());
        if (seen.insert(bigger).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TheoremRhsReport theorem_rhs(const Group& g, const ReferenceGroups& refs, int cap) {
  TheoremRhsReport rep;
  GroupInvariants inv = group_invariants(g);
  if (inv.is_abelian) {
    rep.abelian = true;
    rep.good = true;  // abelian groups are good; the theorem is about nonabelian G
    rep.two_group = is_power_of_two(g.order);
    return rep;
  }
  rep.two_group = is_power_of_two(g.order);
  if (!rep.two_group) {
    rep.good = false;  // p = 2 is forced for nonabelian good groups
    return rep;
  }
  if (g.order > cap) throw CapacityError("theorem_rhs: order above cap");

  // H = G with trivial E first
  rep.conditions = check_conditions(g, refs, cap);
  if (rep.conditions.i || rep.conditions.ii || rep.conditions.iii || rep.conditions.iv) {
    rep.good = true;
    std::string cond = rep.conditions.i    ? "i"
                       : rep.conditions.ii ? "ii"
                       : rep.conditions.iii ? "iii"
                                            : "iv";
    std::vector<int> all(g.order);
    std::iota(all.begin(), all.end(), 0);
    rep.decomposition = Decomposition{{Group::identity}, all, cond};
    return rep;
  }

  // internal decompositions G = E x H: E a central elementary abelian
  // subgroup meeting Frattini trivially, H the preimage of a complement of
  // image(E) in the GF(2)-space G/Frattini
  Subgroup phi = frattini_2group(g);
  Subgroup z = center_subgroup(g);
  std::vector<int> omega;  // central elements of order dividing 2
  for (int t : z.elements)
    if (g.mul(t, t) == Group::identity) omega.push_back(t);

  // coordinates of G/Phi
  struct Coords {
    std::vector<int> coset_of;
    std::vector<uint32_t> coord_of_coset;
    int rank = 0;
  };
  Coords vc;
  {
    std::vector<int> rep_of(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
      if (rep_of[x] >= 0) continue;
      std::vector<int> coset;
      for (int k : phi.elements) coset.push_back(g.mul(x, k));
      int mn = *std::min_element(coset.begin(), coset.end());
      for (int ycs : coset) rep_of[ycs] = mn;
    }
    std::vector<int> reps;
    std::vector<int> id_of(g.order, -1);
    for (int x = 0; x < g.order; ++x)
      if (rep_of[x] == x) {
        id_of[x] = static_cast<int>(reps.size());
        reps.push_back(x);
      }
    vc.coset_of.resize(g.order);
    for (int x = 0; x < g.order; ++x) vc.coset_of[x] = id_of[rep_of[x]];
    const int q = static_cast<int>(reps.size());
    vc.coord_of_coset.assign(q, 0);
    std::vector<char> spanned(q, 0);
    spanned[vc.coset_of[Group::identity]] = 1;
    std::vector<int> span{vc.coset_of[Group::identity]};
    for (int c = 0; c < q; ++c) {
      if (spanned[c]) continue;
      int bit = vc.rank++;
      std::vector<int> added;
      for (int s : span) {
        int t = vc.coset_of[g.mul(reps[s], reps[c])];
        if (!spanned[t]) {
          spanned[t] = 1;
          vc.coord_of_coset[t] = vc.coord_of_coset[s] | (1u << bit);
          added.push_back(t);
        }
      }
      span.insert(span.end(), added.begin(), added.end());
    }
  }
  auto coord = [&](int x) { return vc.coord_of_coset[vc.coset_of[x]]; };

  std::set<std::vector<int>> tried_h;
  for (const auto& e_elems : all_subspaces(g, omega)) {
    if (e_elems.size() == 1) continue;  // trivial E handled above
    bool meets_phi = false;
    for (int e : e_elems)
      if (e != Group::identity && phi.contains(e)) {
        meets_phi = true;
        break;
      }
    if (meets_phi) continue;

    // image of E in V: a subspace of size |E|
    std::set<uint32_t> u;
    for (int e : e_elems) u.insert(coord(e));
    // basis of U by greedy reduction
    std::vector<uint32_t> ubasis;
    {
      std::set<uint32_t> span{0};
      for (uint32_t v : u)
        if (!span.count(v)) {
          ubasis.push_back(v);
          std::set<uint32_t> bigger = span;
          for (uint32_t s : span) bigger.insert(s ^ v);
          span = std::move(bigger);
        }
    }
    // extend to a basis of V with vectors outside U's span
    std::vector<uint32_t> ext;
    {
      std::set<uint32_t> span;
      auto rebuild = [&] {
        span = {0};
        for (uint32_t v : ubasis)
          for (std::set<uint32_t> s2 = span; uint32_t s : s2) span.insert(s ^ v);
        for (uint32_t v : ext)
          for (std::set<uint32_t> s2 = span; uint32_t s : s2) span.insert(s ^ v);
      };
      rebuild();
      for (uint32_t v = 1; v < (1u << vc.rank); ++v)
        if (!span.count(v)) {
          ext.push_back(v);
          rebuild();
        }
    }
    const int w_dim = static_cast<int>(ext.size());

    // complements W = span{ext[j] + u_j}: one per tuple of U-translations
    std::vector<uint32_t> uvec(u.begin(), u.end());
    const long long tuples = [&] {
      long long t = 1;
      for (int j = 0; j < w_dim; ++j) t *= static_cast<long long>(uvec.size());
      return t;
    }();
    for (long long tup = 0; tup < tuples; ++tup) {
      long long t = tup;
      std::vector<uint32_t> wbasis;
      for (int j = 0; j < w_dim; ++j) {
        wbasis.push_back(ext[j] ^ uvec[t % uvec.size()]);
        t /= uvec.size();
      }
      std::set<uint32_t> w{0};
      for (uint32_t v : wbasis)
        for (std::set<uint32_t> s2 = w; uint32_t s : s2) w.insert(s ^ v);
      std::vector<int> h_elems;
      for (int x = 0; x < g.order; ++x)
        if (w.count(coord(x))) h_elems.push_back(x);
      if (static_cast<long long>(h_elems.size()) * static_cast<long long>(e_elems.size()) !=
          g.order)
        continue;
      if (!tried_h.insert(h_elems).second) continue;
      Subgroup h{&g, h_elems};
      if (!h.closed()) continue;  // preimages of subspaces are closed; guard anyway
      Group hg = h.to_group("H");
      ConditionResults cr = check_conditions(hg, refs, cap);
      if (cr.i || cr.ii || cr.iii || cr.iv) {
        rep.good = true;
        rep.conditions = cr;
        std::string cond = cr.i ? "i" : cr.ii ? "ii" : cr.iii ? "iii" : "iv";
        rep.decomposition = Decomposition{e_elems, h_elems, cond};
        return rep;
      }
    }
  }
  rep.good = false;
  return rep;
}

ClassificationReport classify(const Group& g, const Ring& r, const ReferenceGroups& refs,
                              int jobs) {
  ClassificationReport rep;
  rep.label = g.label;
  rep.order = g.order;
  rep.ring = r.name();
  rep.goodness = is_good(g, r, jobs);
  rep.rhs = theorem_rhs(g, refs);
  if (rep.goodness.good && !rep.rhs.abelian) {
    rep.lemma1 = verify_lemma1(g);
    rep.lemma2 = verify_lemma2(g);
  }
  return rep;
}

UnitCensus unit_census(const Group& g, uint64_t seed, long long sample_pairs) {
  if (g.order > 16) throw CapacityError("unit_census: order above threshold 16");
  if (!is_power_of_two(g.order))
    throw std::invalid_argument("unit_census: needs a 2-group over GF(2)");
  const Ring& r = Ring::gf(2);
  SymmetricSet s = build_S(g, r);
  UnitCensus c;
  c.label = g.label;
  c.order = g.order;
  c.s_size = static_cast<int>(s.entries.size());

  // enumerate the span of S and assert it is exactly the symmetric subspace
  long long units = 0;
  for (uint64_t mask = 0; mask < (1ull << c.s_size); ++mask) {
    AlgebraElement a(g, r);
    for (int i = 0; i < c.s_size; ++i)
      if (mask & (1ull << i)) a = a + s.entries[i].elem;
    if (!a.is_symmetric()) throw std::runtime_error("S-span contains a non-symmetric element");
    ++c.symmetric_elements;
    if (a.augmentation() != 0) ++units;
  }
  c.symmetric_units = units;

  // dimension claim: S spans, so direct enumeration of all of KG must find
  // exactly 2^|S| symmetric elements
  long long direct = 0;
  for (uint64_t mask = 0; mask < (1ull << g.order); ++mask) {
    AlgebraElement a(g, r);
    for (int i = 0; i < g.order; ++i)
      if (mask & (1ull << i)) a.set_coeff(i, Ring::one);
    if (a.is_symmetric()) ++direct;
  }
  if (direct != c.symmetric_elements)
    throw std::runtime_error("symmetric subspace dimension differs from |S|");
  c.closure = closure_oracle(g, seed, sample_pairs);
  return c;
}

}  // namespace symu
