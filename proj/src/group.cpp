#include "symu/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "symu/errors.hpp"

namespace symu {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::string index_fallback_name(int i) { return "g" + std::to_string(i); }

void check(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int Group::pow(int g, int e) const {
  int base = e >= 0 ? g : inv(g);
  long long k = e >= 0 ? e : -static_cast<long long>(e);
  int acc = identity;
  for (long long i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_abelian() const {
  for (int a : elements)
    for (int b : elements)
      if (parent->mul(a, b) != parent->mul(b, a)) return false;
  return true;
}

bool Subgroup::closed() const {
  if (elements.empty() || !contains(Group::identity)) return false;
  for (int a : elements) {
    if (!contains(parent->inv(a))) return false;
    for (int b : elements)
      if (!contains(parent->mul(a, b))) return false;
  }
  return true;
}

Group Subgroup::to_group(const std::string& label,
                         const std::vector<std::pair<std::string, int>>& gens) const {
  const int n = order();
  std::unordered_map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = parent->mul(elements[i], elements[j]);
      auto it = pos.find(p);
      check(it != pos.end(), "subgroup not closed under multiplication");
      table[i][j] = it->second;
    }
  std::vector<std::pair<std::string, int>> mapped;
  if (!gens.empty()) {
    for (const auto& [name, g] : gens) {
      auto it = pos.find(g);
      check(it != pos.end(), "generator not in subgroup");
      mapped.emplace_back(name, it->second);
    }
  } else {
    // greedy minimal generating set, ascending element order
    Subgroup span{parent, {Group::identity}};
    int next = 0;
    for (int e : elements) {
      if (span.contains(e)) continue;
      std::vector<int> g;
      for (const auto& [name, idx] : mapped) {
        (void)name;
        g.push_back(elements[idx]);
      }
      g.push_back(e);
      std::string gname = next < 26 ? std::string(1, static_cast<char>('a' + next))
                                    : "g" + std::to_string(next);
      ++next;
      mapped.emplace_back(gname, pos[e]);
      span = subgroup_generated(*parent, g);
      if (span.order() == n) break;
    }
    if (mapped.empty()) mapped.emplace_back("a", 0);  // trivial group
  }
  return finalize_group(label, std::move(table), std::move(mapped));
}

bool GroupHom::respects_multiplication() const {
  for (int a = 0; a < source->order; ++a)
    for (int b = 0; b < source->order; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->order != target->order) return false;
  std::vector<char> seen(target->order, 0);
  for (int im : images) {
    if (im < 0 || im >= target->order || seen[im]) return false;
    seen[im] = 1;
  }
  return true;
}

// ---- audit ----------------------------------------------------------------

void audit_group(const Group& g) {
  const int n = g.order;
  check(n >= 1, "group order must be positive");
  check(static_cast<int>(g.table.size()) == n, "table row count mismatch");
  for (const auto& row : g.table)
    check(static_cast<int>(row.size()) == n, "table column count mismatch");

  // identity at index 0
  for (int h = 0; h < n; ++h) {
    check(g.table[0][h] == h, "element 0 is not a left identity");
    check(g.table[h][0] == h, "element 0 is not a right identity");
  }

  // Latin square
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = g.table[r][c];
      check(v >= 0 && v < n, "table entry out of range");
      check(!seen[v], "row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = g.table[r][c];
      check(!seen[v], "column is not a permutation");
      seen[v] = 1;
    }
  }

  // associativity: full triple loop for small orders, Light's test above
  // (below; Light's test needs the generator audit first)
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = g.table[a][b];
        for (int c = 0; c < n; ++c)
          check(g.table[ab][c] == g.table[a][g.table[b][c]], "associativity fails");
      }
  }

  // inverse table consistency
  check(static_cast<int>(g.inverses.size()) == n, "inverse table size mismatch");
  for (int a = 0; a < n; ++a) {
    int b = g.inverses[a];
    check(g.valid_index(b), "inverse out of range");
    check(g.table[a][b] == 0 && g.table[b][a] == 0, "inverse table inconsistent");
  }

  check(!g.generators.empty(), "group must carry at least one named generator");
  std::set<std::string> gen_names;
  for (const auto& [name, idx] : g.generators) {
    check(!name.empty(), "generator name empty");
    check(gen_names.insert(name).second, "duplicate generator name: " + name);
    check(g.valid_index(idx), "generator index out of range");
  }
  std::vector<int> gen_elems;
  for (const auto& [name, idx] : g.generators) {
    (void)name;
    gen_elems.push_back(idx);
  }
  Subgroup span = subgroup_generated(g, gen_elems);
  check(span.order() == n, "generators do not generate the group");

  if (n > 64) {
    // Light's test over the (verified generating) named generators
    for (int x : gen_elems)
      for (int a = 0; a < n; ++a) {
        const int ax = g.table[a][x];
        for (int b = 0; b < n; ++b)
          check(g.table[ax][b] == g.table[a][g.table[x][b]], "associativity fails (Light)");
      }
  }
}

Group finalize_group(std::string label, std::vector<std::vector<int>> table,
                     std::vector<std::pair<std::string, int>> generators, bool audit) {
  Group g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  g.label = std::move(label);
  g.generators = std::move(generators);
  check(g.order >= 1, "empty table");
  g.inverses.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] == 0) {
        g.inverses[a] = b;
        break;
      }
    check(g.inverses[a] >= 0, "element without inverse");
  }
  if (g.generators.empty() && g.order == 1) g.generators.emplace_back("e", 0);
  if (audit) audit_group(g);
  return g;
}

// ---- generic builder over abstract element values -------------------------

namespace {

// Builds a Cayley table from element values with a supplied product map.
// Identity value must be supplied; it receives index 0. Remaining elements
// are indexed in the order produced by `elems`.
template <typename T, typename Mul>
Group build_from_values(const std::string& label, const std::vector<T>& elems,
                        const T& identity_value, Mul&& mulfn,
                        const std::vector<std::pair<std::string, T>>& gens, bool audit) {
  std::map<T, int> index;
  std::vector<T> ordered;
  ordered.push_back(identity_value);
  index[identity_value] = 0;
  for (const T& e : elems)
    if (index.emplace(e, static_cast<int>(ordered.size())).second) ordered.push_back(e);
  const int n = static_cast<int>(ordered.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T p = mulfn(ordered[i], ordered[j]);
      auto it = index.find(p);
      if (it == index.end()) throw std::invalid_argument("product escaped element set");
      table[i][j] = it->second;
    }
  std::vector<std::pair<std::string, int>> named;
  for (const auto& [name, value] : gens) named.emplace_back(name, index.at(value));
  return finalize_group(label, std::move(table), std::move(named), audit);
}

}  // namespace

// ---- families --------------------------------------------------------------

Group cyclic_group(int n, bool audit) {
  check(n >= 1 && n <= kDefaultOrderCap, "cyclic: order out of range");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::pair<std::string, int>> gens{{"x", n == 1 ? 0 : 1}};
  return finalize_group("C" + std::to_string(n), std::move(table), std::move(gens), audit);
}

Group elementary_abelian_2(int k, bool audit) {
  check(k >= 0 && k <= 12, "elementary_abelian_2: rank out of range");
  const int n = 1 << k;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = i ^ j;
  std::vector<std::pair<std::string, int>> gens;
  for (int b = 0; b < k; ++b) gens.emplace_back("e" + std::to_string(b + 1), 1 << b);
  if (gens.empty()) gens.emplace_back("e", 0);
  return finalize_group("C2^" + std::to_string(k), std::move(table), std::move(gens), audit);
}

Group dihedral_group(int n, bool audit) {
  check(n >= 1 && 2 * n <= kDefaultOrderCap, "dihedral: parameter out of range");
  // element (i, j) = r^i s^j, index j*n + i
  const int order = 2 * n;
  auto idx = [n](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          // s r^i = r^-i s
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  std::vector<std::pair<std::string, int>> gens{{"r", idx(n > 1 ? 1 : 0, 0)}, {"s", idx(0, 1)}};
  return finalize_group("D" + std::to_string(order), std::move(table), std::move(gens), audit);
}

Group generalized_quaternion_group(int order, bool audit) {
  check(order >= 8 && order <= kDefaultOrderCap && is_power_of_two(order),
        "generalized_quaternion: order must be 2^n, n >= 3");
  const int m = order / 2;  // |<a>|
  auto idx = [m](int i, int j) { return j * m + i; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          // a^i1 b^j1 * a^i2 b^j2 with b a = a^-1 b and b^2 = a^(m/2)
          int i = j1 == 0 ? (i1 + i2) % m : ((i1 - i2) % m + m) % m;
          int j = j1 + j2;
          if (j == 2) {
            i = (i + m / 2) % m;
            j = 0;
          }
          table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  std::vector<std::pair<std::string, int>> gens{{"a", idx(1, 0)}, {"b", idx(0, 1)}};
  return finalize_group("Q" + std::to_string(order), std::move(table), std::move(gens), audit);
}

Group semidirect_c2m_c4(int m, bool audit) {
  check(m >= 2 && (1 << (m + 2)) <= kDefaultOrderCap, "semidirect_c2m_c4: m out of range");
  const int xo = 1 << m;
  auto idx = [xo](int i, int j) { return j * xo + i; };
  const int order = 4 * xo;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int j1 = 0; j1 < 4; ++j1)
    for (int i1 = 0; i1 < xo; ++i1)
      for (int j2 = 0; j2 < 4; ++j2)
        for (int i2 = 0; i2 < xo; ++i2) {
          // y^j x^k = x^((-1)^j k) y^j
          int k = (j1 % 2 == 0) ? i2 : ((-i2) % xo + xo) % xo;
          int i = (i1 + k) % xo;
          int j = (j1 + j2) % 4;
          table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  std::vector<std::pair<std::string, int>> gens{{"x", idx(1, 0)}, {"y", idx(0, 1)}};
  return finalize_group("C" + std::to_string(xo) + ":C4", std::move(table), std::move(gens),
                        audit);
}

Group heisenberg3(bool audit) {
  // upper unitriangular 3x3 matrices over GF(3): (a,b,c), index c + 3b + 9a
  auto idx = [](int a, int b, int c) { return c + 3 * b + 9 * a; };
  std::vector<std::vector<int>> table(27, std::vector<int>(27));
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              table[idx(a1, b1, c1)][idx(a2, b2, c2)] =
                  idx((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3);
  std::vector<std::pair<std::string, int>> gens{{"p", idx(1, 0, 0)}, {"q", idx(0, 1, 0)}};
  return finalize_group("Heis3", std::move(table), std::move(gens), audit);
}

Group make_family(const std::string& descriptor, bool audit) {
  std::string name = descriptor;
  int param = -1;
  if (auto pos = descriptor.find(':'); pos != std::string::npos) {
    name = descriptor.substr(0, pos);
    try {
      param = std::stoi(descriptor.substr(pos + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("family parameter is not an integer: " + descriptor);
    }
  }
  auto need = [&](bool has) {
    check(has == (param >= 0), "family " + name + (param >= 0 ? " takes no parameter"
                                                             : " requires a parameter"));
  };
  if (name == "cyclic") {
    need(true);
    return cyclic_group(param, audit);
  }
  if (name == "elementary_abelian_2") {
    need(true);
    return elementary_abelian_2(param, audit);
  }
  if (name == "dihedral") {
    need(true);
    return dihedral_group(param, audit);
  }
  if (name == "generalized_quaternion") {
    need(true);
    return generalized_quaternion_group(param, audit);
  }
  if (name == "semidirect_c2m_c4") {
    need(true);
    return semidirect_c2m_c4(param, audit);
  }
  if (name == "heisenberg3" || name == "heisenberg_3") {
    need(false);
    return heisenberg3(audit);
  }
  // aliases; dN means the dihedral group of order N
  if (name == "q8" || name == "q16" || name == "q32") {
    need(false);
    return generalized_quaternion_group(std::stoi(name.substr(1)), audit);
  }
  if (name == "d8" || name == "d16" || name == "d32") {
    need(false);
    return dihedral_group(std::stoi(name.substr(1)) / 2, audit);
  }
  if (name.size() > 1 && name[0] == 'c' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    need(false);
    return cyclic_group(std::stoi(name.substr(1)), audit);
  }
  throw std::invalid_argument("unknown family descriptor: " + descriptor);
}

// ---- products --------------------------------------------------------------

Group direct_product(const Group& g, const Group& h, int order_cap, bool audit) {
  long long n = static_cast<long long>(g.order) * h.order;
  if (n > order_cap) throw CapacityError("direct product order exceeds cap");
  auto idx = [&](int a, int b) { return a * h.order + b; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2)
          table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2));
  std::vector<std::pair<std::string, int>> gens;
  std::set<std::string> used;
  for (const auto& [name, e] : g.generators) {
    gens.emplace_back(name, idx(e, 0));
    used.insert(name);
  }
  for (const auto& [name, e] : h.generators) {
    std::string n2 = name;
    while (used.count(n2)) n2 += "'";
    used.insert(n2);
    gens.emplace_back(n2, idx(0, e));
  }
  return finalize_group(g.label + "x" + h.label, std::move(table), std::move(gens), audit);
}

Group central_product(const Group& g, int a, const Group& h, int b, int order_cap,
                      bool audit) {
  check(g.valid_index(a) && h.valid_index(b), "central product: element out of range");
  check(center_subgroup(g).contains(a), "central product: a is not central");
  check(center_subgroup(h).contains(b), "central product: b is not central");
  check(element_order(g, a) == element_order(h, b), "central product: orders differ");
  Group p = direct_product(g, h, order_cap, false);
  auto idx = [&](int x, int y) { return x * h.order + y; };
  // N = <(a, b^-1)>
  std::vector<int> n_elems;
  int cur = idx(a, h.inv(b));
  int e = Group::identity;
  do {
    n_elems.push_back(e);
    e = p.mul(e, cur);
  } while (e != Group::identity);
  std::sort(n_elems.begin(), n_elems.end());

  // quotient by the (central, hence normal) subgroup N
  std::vector<int> coset_rep(p.order, -1);
  for (int x = 0; x < p.order; ++x) {
    if (coset_rep[x] >= 0) continue;
    std::vector<int> coset;
    for (int nn : n_elems) coset.push_back(p.mul(x, nn));
    int rep = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) coset_rep[y] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < p.order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::unordered_map<int, int> rep_index;
  // identity's coset contains 0, whose rep is the minimum of N itself = 0
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) rep_index[reps[i]] = i;
  const int qn = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(qn, std::vector<int>(qn));
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j) table[i][j] = rep_index.at(coset_rep[p.mul(reps[i], reps[j])]);
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& [name, eidx] : p.generators) gens.emplace_back(name, rep_index.at(coset_rep[eidx]));
  return finalize_group(g.label + "o" + h.label, std::move(table), std::move(gens), audit);
}

// ---- interrogation ---------------------------------------------------------

int element_order(const Group& g, int x) {
  check(g.valid_index(x), "element_order: index out of range");
  int k = 1;
  int cur = x;
  while (cur != Group::identity) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

Subgroup center_subgroup(const Group& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup{&g, std::move(z)};
}

GroupInvariants group_invariants(const Group& g) {
  GroupInvariants inv;
  inv.is_abelian = true;
  for (int a = 0; a < g.order && inv.is_abelian; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        inv.is_abelian = false;
        break;
      }
  long long expo = 1;
  for (int a = 0; a < g.order; ++a) {
    int o = element_order(g, a);
    expo = std::lcm(expo, static_cast<long long>(o));
    if (o == 2) inv.involutions.push_back(a);
  }
  inv.exponent = static_cast<int>(expo);
  inv.center = center_subgroup(g);
  inv.is_2_group = is_power_of_two(g.order);
  inv.unique_involution = inv.involutions.size() == 1;
  return inv;
}

Subgroup subgroup_generated(const Group& g, const std::vector<int>& gens) {
  for (int x : gens) check(g.valid_index(x), "subgroup_generated: index out of range");
  std::vector<char> in(g.order, 0);
  in[Group::identity] = 1;
  std::vector<int> frontier{Group::identity};
  std::vector<int> members{Group::identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int x : gens) {
        for (int p : {g.mul(a, x), g.mul(a, g.inv(x))}) {
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
            next.push_back(p);
          }
        }
      }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

namespace {

// Coordinates of an elementary abelian quotient G/K over GF(2):
// coset ids, a greedy basis, and per-coset coordinate bitmasks.
struct QuotientCoords {
  std::vector<int> coset_of;          // element -> coset id (rep index)
  std::vector<int> reps;              // coset id -> representative element
  int rank = 0;
  std::vector<uint32_t> coords;       // coset id -> GF(2) coordinates
};

QuotientCoords quotient_coords(const Group& g, const Subgroup& k) {
  QuotientCoords qc;
  std::vector<int> rep_of(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (rep_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int kk : k.elements) coset.push_back(g.mul(x, kk));
    int rep = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) rep_of[y] = rep;
  }
  std::unordered_map<int, int> id_of_rep;
  for (int x = 0; x < g.order; ++x)
    if (rep_of[x] == x) {
      id_of_rep[x] = static_cast<int>(qc.reps.size());
      qc.reps.push_back(x);
    }
  qc.coset_of.resize(g.order);
  for (int x = 0; x < g.order; ++x) qc.coset_of[x] = id_of_rep.at(rep_of[x]);

  const int q = static_cast<int>(qc.reps.size());
  qc.coords.assign(q, 0);
  std::vector<char> spanned(q, 0);
  spanned[qc.coset_of[Group::identity]] = 1;
  std::vector<int> span{qc.coset_of[Group::identity]};
  for (int c = 0; c < q; ++c) {
    if (spanned[c]) continue;
    int bit = qc.rank++;
    check(qc.rank <= 30, "quotient rank too large");
    std::vector<int> added;
    for (int s : span) {
      int t = qc.coset_of[g.mul(qc.reps[s], qc.reps[c])];
      if (!spanned[t]) {
        spanned[t] = 1;
        qc.coords[t] = qc.coords[s] | (1u << bit);
        added.push_back(t);
      }
    }
    span.insert(span.end(), added.begin(), added.end());
  }
  return qc;
}

Subgroup closure_of_squares_and_commutators(const Group& g, bool squares_only) {
  std::vector<int> gens;
  for (int a = 0; a < g.order; ++a) gens.push_back(g.mul(a, a));
  if (!squares_only)
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) gens.push_back(g.comm(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(g, gens);
}

}  // namespace

std::vector<Subgroup> index2_subgroups(const Group& g) {
  Subgroup k = closure_of_squares_and_commutators(g, false);
  if (k.order() == g.order) return {};  // G = G^2 [G,G]: no index-2 subgroups
  QuotientCoords qc = quotient_coords(g, k);
  std::vector<Subgroup> result;
  for (uint32_t phi = 1; phi < (1u << qc.rank); ++phi) {
    std::vector<int> elems;
    for (int x = 0; x < g.order; ++x)
      if (__builtin_parity(qc.coords[qc.coset_of[x]] & phi) == 0) elems.push_back(x);
    Subgroup s{&g, std::move(elems)};
    check(2 * s.order() == g.order && s.closed(), "index-2 subgroup construction broken");
    result.push_back(std::move(s));
  }
  std::sort(result.begin(), result.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return result;
}

Subgroup frattini_2group(const Group& g) {
  check(is_power_of_two(g.order), "frattini_2group: not a 2-group");
  Subgroup phi = closure_of_squares_and_commutators(g, true);
  // <squares> always contains [G,G]; assert it rather than assume it
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (!phi.contains(g.comm(a, b)))
        throw std::runtime_error("frattini_2group: commutator outside <squares>");
  return phi;
}

int minimal_generator_count_2group(const Group& g) {
  Subgroup phi = frattini_2group(g);
  int quotient = g.order / phi.order();
  int rank = 0;
  while ((1 << rank) < quotient) ++rank;
  check((1 << rank) == quotient, "frattini index not a power of two");
  return rank;
}

bool recognize_generalized_quaternion(const Group& g) {
  if (g.order < 8 || !is_power_of_two(g.order)) return false;
  int involutions = 0;
  bool abelian = true;
  for (int a = 0; a < g.order && involutions < 2; ++a)
    if (a != Group::identity && g.mul(a, a) == Group::identity) ++involutions;
  if (involutions != 1) return false;
  for (int a = 0; a < g.order && abelian; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        abelian = false;
        break;
      }
  return !abelian;
}

std::optional<C2mC4Witness> recognize_c2m_c4(const Group& g) {
  if (!is_power_of_two(g.order) || g.order < 16) return std::nullopt;
  const int xorder = g.order / 4;  // = 2^m, m >= 2
  if (xorder < 4) return std::nullopt;
  int m = 0;
  while ((1 << m) < xorder) ++m;
  for (int x = 0; x < g.order; ++x) {
    if (element_order(g, x) != xorder) continue;
    Subgroup xs = subgroup_generated(g, {x});
    for (int y = 0; y < g.order; ++y) {
      if (element_order(g, y) != 4) continue;
      if (g.conj(x, y) != g.inv(x)) continue;
      // <x> meet <y> must be trivial
      int y2 = g.mul(y, y);
      if (xs.contains(y) || xs.contains(y2)) continue;
      if (subgroup_generated(g, {x, y}).order() != g.order) continue;
      return C2mC4Witness{x, y, m};
    }
  }
  return std::nullopt;
}

// ---- isomorphism -----------------------------------------------------------

namespace {

struct Fingerprint {
  int order;
  bool abelian;
  int exponent;
  int center_size;
  int involutions;
  std::vector<int> order_profile;        // sorted element orders
  std::vector<int> centralizer_profile;  // sorted centralizer sizes
  std::vector<int> square_profile;       // sorted orders of g^2

  bool operator==(const Fingerprint&) const = default;
};

int centralizer_size(const Group& g, int a) {
  int c = 0;
  for (int b = 0; b < g.order; ++b)
    if (g.mul(a, b) == g.mul(b, a)) ++c;
  return c;
}

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order;
  GroupInvariants inv = group_invariants(g);
  f.abelian = inv.is_abelian;
  f.exponent = inv.exponent;
  f.center_size = inv.center.order();
  f.involutions = static_cast<int>(inv.involutions.size());
  for (int a = 0; a < g.order; ++a) {
    f.order_profile.push_back(element_order(g, a));
    f.centralizer_profile.push_back(centralizer_size(g, a));
    f.square_profile.push_back(element_order(g, g.mul(a, a)));
  }
  std::sort(f.order_profile.begin(), f.order_profile.end());
  std::sort(f.centralizer_profile.begin(), f.centralizer_profile.end());
  std::sort(f.square_profile.begin(), f.square_profile.end());
  return f;
}

// expression of each source element as (previous element, generator slot)
struct GenExpressions {
  std::vector<int> gens;                      // generating sequence
  std::vector<std::pair<int, int>> expr;      // element -> (prev, slot); gens map to (-1, slot)
  std::vector<int> chain_orders;              // |<g_1..g_i>|
  std::vector<int> bfs_order;                 // elements in derivation order
};

GenExpressions generating_sequence(const Group& g) {
  GenExpressions ge;
  Subgroup span{&g, {Group::identity}};
  for (int x = 0; x < g.order && span.order() < g.order; ++x) {
    if (span.contains(x)) continue;
    ge.gens.push_back(x);
    std::vector<int> sofar = ge.gens;
    span = subgroup_generated(g, sofar);
    ge.chain_orders.push_back(span.order());
  }
  if (ge.gens.empty()) {  // trivial group
    ge.gens.push_back(Group::identity);
    ge.chain_orders.push_back(1);
  }
  // BFS giving every element one derivation: e = prev * gens[slot]
  ge.expr.assign(g.order, {-2, -2});
  ge.expr[Group::identity] = {-1, -1};
  ge.bfs_order.push_back(Group::identity);
  std::queue<int> q;
  q.push(Group::identity);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int s = 0; s < static_cast<int>(ge.gens.size()); ++s) {
      int t = g.mul(a, ge.gens[s]);
      if (ge.expr[t].first == -2) {
        ge.expr[t] = {a, s};
        ge.bfs_order.push_back(t);
        q.push(t);
      }
    }
  }
  return ge;
}

bool extend_images(const Group& g, const Group& h, const GenExpressions& ge,
                   const std::vector<int>& gen_images, GroupHom& out) {
  std::vector<int> img(g.order, -1);
  img[Group::identity] = Group::identity;
  for (int e : ge.bfs_order) {
    auto [prev, slot] = ge.expr[e];
    if (prev < 0) continue;
    img[e] = h.mul(img[prev], gen_images[slot]);
  }
  std::vector<char> hit(h.order, 0);
  for (int v : img) {
    if (v < 0 || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (img[g.mul(a, b)] != h.mul(img[a], img[b])) return false;
  out.images = std::move(img);
  return true;
}

bool search_images(const Group& g, const Group& h, const GenExpressions& ge,
                   const std::vector<std::vector<int>>& candidates, size_t depth,
                   std::vector<int>& chosen, GroupHom& out) {
  if (depth == ge.gens.size()) return extend_images(g, h, ge, chosen, out);
  for (int cand : candidates[depth]) {
    chosen.push_back(cand);
    // prune: partial subgroups must match in order
    Subgroup hs = subgroup_generated(h, chosen);
    if (hs.order() == ge.chain_orders[depth] &&
        search_images(g, h, ge, candidates, depth + 1, chosen, out))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const Group& g, const Group& h, int cap) {
  if (g.order > cap || h.order > cap)
    throw CapacityError("find_isomorphism: order above cap");
  if (g.order != h.order) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;

  GenExpressions ge = generating_sequence(g);
  std::vector<std::vector<int>> candidates(ge.gens.size());
  for (size_t s = 0; s < ge.gens.size(); ++s) {
    int o = element_order(g, ge.gens[s]);
    int c = centralizer_size(g, ge.gens[s]);
    for (int y = 0; y < h.order; ++y)
      if (element_order(h, y) == o && centralizer_size(h, y) == c) candidates[s].push_back(y);
  }
  GroupHom hom;
  hom.source = &g;
  hom.target = &h;
  std::vector<int> chosen;
  if (search_images(g, h, ge, candidates, 0, chosen, hom)) return hom;
  return std::nullopt;
}

bool is_isomorphic(const Group& g, const Group& h, int cap) {
  return find_isomorphism(g, h, cap).has_value();
}

std::vector<std::string> element_names(const Group& g) {
  std::vector<std::string> names(g.order);
  names[Group::identity] = "1";
  // BFS over named generators, shortest word first
  std::vector<std::vector<std::pair<int, int>>> words(g.order);  // (gen slot, count) runs
  std::vector<char> seen(g.order, 0);
  seen[Group::identity] = 1;
  std::queue<int> q;
  q.push(Group::identity);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (size_t s = 0; s < g.generators.size(); ++s) {
      int t = g.mul(a, g.generators[s].second);
      if (seen[t]) continue;
      seen[t] = 1;
      words[t] = words[a];
      if (!words[t].empty() && words[t].back().first == static_cast<int>(s))
        words[t].back().second++;
      else
        words[t].emplace_back(static_cast<int>(s), 1);
      q.push(t);
    }
  }
  for (int e = 0; e < g.order; ++e) {
    if (e == Group::identity) continue;
    if (!seen[e]) {
      names[e] = index_fallback_name(e);
      continue;
    }
    std::string w;
    for (const auto& [slot, count] : words[e]) {
      if (!w.empty()) w += "*";
      w += g.generators[slot].first;
      if (count > 1) w += "^" + std::to_string(count);
    }
    names[e] = w;
  }
  return names;
}

}  // namespace symu
