#pragma once

#include <string>
#include <vector>

#include "symu/group.hpp"
#include "symu/presentation.hpp"

namespace symu {

/// Complete coset table over the trivial subgroup: one row per element of
/// the presented group, one column per generator and per inverse generator
/// (column 2i acts by generator i, column 2i+1 by its inverse).
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> rows;
  long long cosets_defined = 0;  // total ever allocated, dead ones included

  int cosets() const { return static_cast<int>(rows.size()); }
  int act(int coset, int column) const { return rows[coset][column]; }
};

/// Todd-Coxeter enumeration (HLT strategy: relator tracing with gap
/// filling, immediate coincidence processing, row filling). Scan order is
/// fixed - cosets ascending, relators in declaration order - so identical
/// input yields identical numbering. Throws CapacityError when more than
/// `max_cosets` cosets would be defined.
CosetTable coset_enumerate(const Presentation& p, int max_cosets = 100000);

/// Builds the presented group concretely: cosets of the closed table are
/// the elements of the regular representation, multiplied by tracing
/// representative words. Generator names attach to their images.
Group group_from_presentation(const Presentation& p, int max_cosets = 100000,
                              const std::string& label = "", bool audit = true);

}  // namespace symu
