#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thue/forms.hpp"
#include "thue/roots.hpp"

namespace thue {

enum class SolveMode { Inequality, Equation };
enum class SizeClass { Small, Medium, Large, AboveWindow, Unclassified };

const char* size_class_name(SizeClass c);
const char* mode_name(SolveMode m);

struct Solution {
  Int x, y;
  Int value;  // F(x, y)
  bool primitive = true;
  int related_root = -1;  // filled by annotate()
  bool related_tie = false;
  SizeClass size_class = SizeClass::Unclassified;
};

struct EnumerationResult {
  SolveMode mode = SolveMode::Inequality;
  Int m;
  Int y_max;
  bool exclude_zero = false;
  Int complete_up_to;  // certified exhaustive y range actually searched
  std::vector<Solution> solutions;  // canonical primitive pairs, sorted by (y, x)
};

// All canonical primitive solutions (y > 0, or y = 0 with x > 0) of
// |F(x,y)| <= m (or = m) with 0 <= y <= y_max. Membership decisions use
// exact integer evaluation only.
EnumerationResult enumerate_solutions(const BinaryForm& F, const Int& m, const Int& y_max,
                                      SolveMode mode, bool exclude_zero = false);

// Index minimizing |x - alpha_j y|; ties resolved to the lowest index after
// refinement, conjugate-pair ties to the pair's lower index. tie_out reports
// whether a tie was detected.
int related_root_index(RootSystem& rs, const Int& x, const Int& y, bool* tie_out = nullptr);

// Small / Medium / Large against M^2 and M^(1+(n-1)^2); y = 0 is Small.
// Boundary cases are decided through the exact Mahler value when available;
// otherwise UnresolvableBoundary once the given enclosure cannot separate.
SizeClass classify_solution(const MahlerMeasure& M, int n, const Int& y);

// Same, but retightens the Mahler enclosure through the root system when the
// comparison is boundary-ambiguous.
SizeClass classify_refining(RootSystem& rs, MahlerMeasure& M, const Int& y);

// Fill related_root and size_class for every solution.
void annotate(EnumerationResult& result, RootSystem& rs, MahlerMeasure& M);

// Lewis-Mahler right-hand side 2^(n-1) n^(n-1/2) M^(n-2) |F(x,y)| /
// (|D|^(1/2) |y|^n) as an outward-rounded interval.
Interval lewis_mahler_rhs(const BinaryForm& F, const Interval& mahler, const Int& D, const Int& x,
                          const Int& y);

// min_k |alpha_k - x/y| as an interval from the current enclosures.
Interval min_root_distance(RootSystem& rs, const Int& x, const Int& y);

// Certified check min_alpha |alpha - x/y| <= rhs for (x, y), escalating the
// enclosures; returns false only on certified violation.
bool lewis_mahler_holds(RootSystem& rs, const Interval& mahler, const Int& D, const Int& x,
                        const Int& y);

}  // namespace thue
