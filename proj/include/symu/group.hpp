#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symu {

/// Finite group stored as an explicit Cayley table.
///
/// Element 0 is always the identity. Orders stay small (a few hundred at
/// most, default cap 4096), so the table representation keeps every
/// downstream operation a plain array lookup. Values are immutable after
/// construction and safe to share across threads.
struct Group {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<int> inverses;
  std::vector<std::pair<std::string, int>> generators;  // (name, element)
  std::string label;

  static constexpr int identity = 0;

  int mul(int g, int h) const { return table[g][h]; }
  int inv(int g) const { return inverses[g]; }
  /// g^e for any integer e (negative exponents via the inverse table).
  int pow(int g, int e) const;
  /// b^-1 * g * b
  int conj(int g, int b) const { return mul(mul(inv(b), g), b); }
  /// [g,h] = g^-1 h^-1 g h
  int comm(int g, int h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }
  bool valid_index(int g) const { return g >= 0 && g < order; }
};

/// Subgroup of a parent group, kept as a sorted element list.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<int> elements;  // sorted ascending; always contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool is_abelian() const;
  /// Checks closure under multiplication and inverses, identity membership.
  bool closed() const;
  /// Relabels the subgroup as a standalone Group (element 0 stays identity).
  /// `gens` are parent element indices to record as named generators; when
  /// empty a minimal generating set is chosen greedily.
  Group to_group(const std::string& label,
                 const std::vector<std::pair<std::string, int>>& gens = {}) const;
};

/// Homomorphism witness: images[g] in the target for every source element.
struct GroupHom {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<int> images;

  bool respects_multiplication() const;
  bool is_bijective() const;
};

struct GroupInvariants {
  bool is_abelian = false;
  int exponent = 1;
  Subgroup center;
  std::vector<int> involutions;  // elements of order exactly 2
  bool is_2_group = false;
  bool unique_involution = false;
};

inline constexpr int kDefaultOrderCap = 4096;

/// Builds a Group from a raw table, computing inverses and (unless `audit`
/// is off) running the full invariant audit: Latin square, identity at 0,
/// associativity (triple loop up to order 64, Light's test above), inverse
/// consistency, generators generate. Throws std::invalid_argument on any
/// violation.
Group finalize_group(std::string label, std::vector<std::vector<int>> table,
                     std::vector<std::pair<std::string, int>> generators,
                     bool audit = true);

/// Re-runs the construction-time audit on an existing group.
void audit_group(const Group& g);

// ---- families ------------------------------------------------------------

Group cyclic_group(int n, bool audit = true);
Group elementary_abelian_2(int k, bool audit = true);
/// Dihedral group of order 2n (symmetries of the n-gon); n >= 1.
Group dihedral_group(int n, bool audit = true);
/// Generalized quaternion group of the given order (8, 16, 32, ...).
Group generalized_quaternion_group(int order, bool audit = true);
/// <x,y | x^(2^m) = y^4 = 1, x^y = x^-1>, order 2^(m+2); m >= 2.
Group semidirect_c2m_c4(int m, bool audit = true);
/// Extraspecial group of order 27 and exponent 3 (the p = 3 witness).
Group heisenberg3(bool audit = true);

/// Parses a family descriptor such as "cyclic:12", "dihedral:4",
/// "generalized_quaternion:16", "elementary_abelian_2:3",
/// "semidirect_c2m_c4:2", "heisenberg3", plus the aliases
/// "q8"/"q16"/"q32", "d8"/"d16" (dihedral groups of that *order*),
/// "c<n>" (cyclic). Throws std::invalid_argument on unknown descriptors or
/// out-of-range parameters.
Group make_family(const std::string& descriptor, bool audit = true);

// ---- products ------------------------------------------------------------

Group direct_product(const Group& g, const Group& h, int order_cap = kDefaultOrderCap,
                     bool audit = true);

/// Central product G o H: the quotient of G x H by <(a, b^-1)>.
/// Requires a central in G, b central in H and order(a) == order(b).
Group central_product(const Group& g, int a, const Group& h, int b,
                      int order_cap = kDefaultOrderCap, bool audit = true);

// ---- interrogation -------------------------------------------------------

int element_order(const Group& g, int x);
GroupInvariants group_invariants(const Group& g);
Subgroup subgroup_generated(const Group& g, const std::vector<int>& gens);
Subgroup center_subgroup(const Group& g);

/// All subgroups of index 2, computed as preimages of the hyperplanes of
/// the GF(2)-space G / <squares, commutators>. Empty when none exist.
std::vector<Subgroup> index2_subgroups(const Group& g);

/// Frattini subgroup of a 2-group, computed as <h^2 | h in G>. Asserts the
/// containment of every commutator. Throws std::invalid_argument if |G| is
/// not a power of 2.
Subgroup frattini_2group(const Group& g);

/// Size of a minimal generating set of a 2-group (rank of G/Frattini).
int minimal_generator_count_2group(const Group& g);

/// 2-group, nonabelian, exactly one involution (order >= 8).
bool recognize_generalized_quaternion(const Group& g);

struct C2mC4Witness {
  int x = -1;
  int y = -1;
  int m = 0;
};

/// Searches for x of order 2^m (m >= 2) and y of order 4 with x^y = x^-1,
/// <x> meet <y> trivial, |G| = 2^(m+2), and <x,y> = G.
std::optional<C2mC4Witness> recognize_c2m_c4(const Group& g);

/// Generator-image backtracking with an order-statistics fingerprint
/// prefilter. Intended for |G| <= 64; throws CapacityError above `cap`.
std::optional<GroupHom> find_isomorphism(const Group& g, const Group& h, int cap = 64);
bool is_isomorphic(const Group& g, const Group& h, int cap = 64);

/// Short generator words naming each element ("1", "x", "x*y^2", ...),
/// chosen by breadth-first search from the identity. Elements outside the
/// span of named generators fall back to "g<i>".
std::vector<std::string> element_names(const Group& g);

}  // namespace symu
