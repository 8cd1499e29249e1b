#pragma once

#include <string>
#include <vector>

#include "symu/goodness.hpp"
#include "symu/group.hpp"

namespace symu {

struct CorpusEntry {
  std::string name;
  Group group;
};

/// The complete list of groups of order 1, 2, 4, 8 and 16 (1+1+2+5+14),
/// built from standard constructions and presentations. `max_order` must
/// be <= 16; larger corpora are out of scope.
std::vector<CorpusEntry> small_group_corpus(int max_order = 16);

/// Redundant constructions of corpus members through different routes
/// (central products, presentations, family builders). Every candidate
/// must be isomorphic to exactly one corpus member; the test suite asserts
/// this deduplication stability.
std::vector<CorpusEntry> corpus_candidates();

/// The good families named by theorem conditions (ii)-(iv): Q8xC4, Q8xQ8,
/// the (iii) central product, H32, H245.
std::vector<CorpusEntry> family_positives();

/// Named non-good groups: D8, C2xD8, the two extraspecial groups of order
/// 32, Q8 o C4 and D8 o C4.
std::vector<CorpusEntry> family_negatives();

/// Reference groups for the condition checkers, built once and cached.
const ReferenceGroups& reference_groups();

// presentation sources (also shipped under presentations/)
const char* h32_presentation_text();
const char* h245_presentation_text();
const char* iii_factor_presentation_text();

/// <x,y | x^4 = y^4 = 1, x^2 = [y,x]>, realized by coset enumeration.
Group iii_factor_group();

}  // namespace symu
