#include "symu/coset_enum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "symu/errors.hpp"

namespace symu {

namespace {

constexpr int kUndef = -1;

// Mutable enumeration state. Rows are merged by a union-find whose
// representative is always the smaller index.
struct Enumerator {
  int ngens;
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> relator_cols;  // relators as column sequences
  std::vector<std::vector<int>> tab;           // tab[coset][column]
  std::vector<int> rep_;                       // union-find parent
  std::deque<int> dead_queue;
  long long defined = 0;

  Enumerator(const Presentation& p, int cap) : ngens(static_cast<int>(p.generator_names.size())) {
    ncols = 2 * ngens;
    max_cosets = cap;
    for (const Word& w : p.relators) {
      std::vector<int> cols;
      for (const Word::Factor& f : w.factors) {
        int col = f.exp > 0 ? 2 * f.gen : 2 * f.gen + 1;
        for (int i = 0; i < std::abs(f.exp); ++i) cols.push_back(col);
      }
      relator_cols.push_back(std::move(cols));
    }
    define_coset();
  }

  static int inv_col(int c) { return c ^ 1; }

  int define_coset() {
    if (static_cast<int>(tab.size()) >= max_cosets)
      throw CapacityError("coset enumeration exceeded max_cosets");
    tab.emplace_back(ncols, kUndef);
    rep_.push_back(static_cast<int>(tab.size()) - 1);
    ++defined;
    return static_cast<int>(tab.size()) - 1;
  }

  int rep(int c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  bool live(int c) { return rep_[c] == c; }

  void set_edge(int a, int col, int b) {
    tab[a][col] = b;
    tab[b][inv_col(col)] = a;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    dead_queue.push_back(b);
  }

  // Holt-style coincidence processing: drain the dead queue, migrating the
  // edges of each dead coset onto its representative.
  void process_coincidences() {
    while (!dead_queue.empty()) {
      int e = dead_queue.front();
      dead_queue.pop_front();
      for (int col = 0; col < ncols; ++col) {
        int f = tab[e][col];
        if (f == kUndef) continue;
        tab[e][col] = kUndef;
        if (tab[f][inv_col(col)] == e) tab[f][inv_col(col)] = kUndef;
        int e1 = rep(e);
        int f1 = rep(f);
        if (tab[e1][col] != kUndef) {
          merge(f1, tab[e1][col]);
        } else if (tab[f1][inv_col(col)] != kUndef) {
          merge(e1, tab[f1][inv_col(col)]);
        } else {
          set_edge(e1, col, f1);
        }
      }
    }
  }

  // Traces relator `cols` at coset c: forward as far as defined, backward
  // from the far end, then fills the gap with fresh cosets, deduces the
  // final edge, or merges when the scans overlap. Returns true if the
  // table changed.
  bool trace_relator(int c, const std::vector<int>& cols) {
    if (cols.empty()) return false;
    int fwd = c;
    size_t i = 0;
    while (i < cols.size() && tab[fwd][cols[i]] != kUndef) fwd = tab[fwd][cols[i++]];
    if (i == cols.size()) {
      if (fwd == c) return false;
      merge(fwd, c);
      process_coincidences();
      return true;
    }
    int bwd = c;
    size_t j = cols.size();
    while (j > i && tab[bwd][inv_col(cols[j - 1])] != kUndef)
      bwd = tab[bwd][inv_col(cols[--j])];
    if (j == i) {
      // both scans reached position i; with bidirectional edges this only
      // happens with fwd != bwd, a coincidence
      merge(fwd, bwd);
      process_coincidences();
      return true;
    }
    while (j > i + 1) {
      int fresh = define_coset();
      set_edge(fwd, cols[i], fresh);
      fwd = fresh;
      ++i;
    }
    // the remaining edge is undefined on both sides by the scan stops
    set_edge(fwd, cols[i], bwd);
    return true;
  }

  // One full pass over live cosets: trace every relator, then fill
  // undefined row entries with fresh cosets. Returns true if anything
  // changed.
  bool sweep() {
    bool changed = false;
    for (int c = 0; c < static_cast<int>(tab.size()); ++c) {
      if (!live(c)) continue;
      for (const auto& cols : relator_cols) {
        if (!live(c)) break;  // c may die during coincidence processing
        changed |= trace_relator(c, cols);
      }
      if (!live(c)) continue;
      for (int col = 0; col < ncols; ++col) {
        if (tab[c][col] == kUndef) {
          int fresh = define_coset();
          set_edge(c, col, fresh);
          changed = true;
        }
      }
    }
    return changed;
  }

  // Live rows, renumbered ascending.
  CosetTable compress() {
    std::vector<int> newid(tab.size(), -1);
    int next = 0;
    for (int c = 0; c < static_cast<int>(tab.size()); ++c)
      if (live(c)) newid[c] = next++;
    CosetTable out;
    out.ngens = ngens;
    out.cosets_defined = defined;
    out.rows.reserve(next);
    for (int c = 0; c < static_cast<int>(tab.size()); ++c) {
      if (!live(c)) continue;
      std::vector<int> row(ncols);
      for (int col = 0; col < ncols; ++col) {
        int t = tab[c][col];
        if (t == kUndef) throw std::runtime_error("coset table incomplete after closure");
        row[col] = newid[rep(t)];
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }
};

void verify_table(const CosetTable& t, const Enumerator& en) {
  for (int c = 0; c < t.cosets(); ++c)
    for (int col = 0; col < 2 * t.ngens; ++col) {
      int d = t.rows[c][col];
      if (d < 0 || d >= t.cosets() || t.rows[d][Enumerator::inv_col(col)] != c)
        throw std::runtime_error("coset table inconsistent");
    }
  for (int c = 0; c < t.cosets(); ++c)
    for (const auto& cols : en.relator_cols) {
      int cur = c;
      for (int col : cols) cur = t.rows[cur][col];
      if (cur != c) throw std::runtime_error("relator does not close on coset table");
    }
}

}  // namespace

CosetTable coset_enumerate(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
  if (p.generator_names.empty()) throw std::invalid_argument("presentation has no generators");
  Enumerator en(p, max_cosets);
  while (en.sweep()) {
  }
  CosetTable out = en.compress();
  verify_table(out, en);
  return out;
}

Group group_from_presentation(const Presentation& p, int max_cosets, const std::string& label,
                              bool audit) {
  CosetTable t = coset_enumerate(p, max_cosets);
  const int n = t.cosets();

  // representative word (as column sequence) per coset, BFS from coset 0
  std::vector<std::vector<int>> repword(n);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<int> q{0};
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (int col = 0; col < 2 * t.ngens; ++col) {
      int d = t.rows[c][col];
      if (!seen[d]) {
        seen[d] = 1;
        repword[d] = repword[c];
        repword[d].push_back(col);
        q.push_back(d);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::runtime_error("coset table is not transitive");

  // regular representation: i * j = trace of j's word starting at i
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int cur = i;
      for (int col : repword[j]) cur = t.rows[cur][col];
      table[i][j] = cur;
    }

  std::vector<std::pair<std::string, int>> gens;
  for (int g = 0; g < t.ngens; ++g) gens.emplace_back(p.generator_names[g], t.rows[0][2 * g]);

  std::string lbl = label.empty() ? "<presented group>" : label;
  Group out = finalize_group(lbl, std::move(table), std::move(gens), audit);

  // defining relators must evaluate to the identity
  std::vector<int> assignment;
  for (int g = 0; g < t.ngens; ++g) assignment.push_back(out.generators[g].second);
  for (const Word& r : p.relators)
    if (word_evaluate(out, assignment, r) != Group::identity)
      throw std::runtime_error("relator fails to evaluate to identity in presented group");
  return out;
}

}  // namespace symu
