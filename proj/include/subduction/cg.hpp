#pragma once

#include <optional>
#include <vector>

#include "subduction/gt.hpp"
#include "subduction/surd.hpp"

namespace subduction {

// One level of the U(p) > U(p-1) chain. `upper` is the parent row m_p,
// `lower` the parent row m_{p-1}; i (1-based) is the upper entry that gains
// the box. j is the lower entry that gains a box (add form) or empty when the
// fundamental's lower row is zero (stop form).
struct ScalarFactorQuery {
    std::vector<int> upper;
    std::vector<int> lower;
    int i = 1;
    std::optional<int> j;
};

SurdSum scalar_factor(const ScalarFactorQuery& q);

// <parent; e_a | child>. Zero when the occupation selection rule fails or the
// child is not the parent plus one box at every level down to the stop row.
SurdSum fundamental_cg(const GTPattern& parent, int a, const GTPattern& child);

// Same with copy labels: additionally zero unless the parent tableau is the
// child tableau with its largest label removed.
SurdSum fundamental_cg(const CopyLabel& parent, int a, const CopyLabel& child);

struct SlotTerm {
    std::vector<int> slots;  // (a_m, ..., a_1)
    SurdSum coeff;
    friend bool operator==(const SlotTerm&, const SlotTerm&) = default;
};

// |M_s> = sum_a C^{M_s}_{a_m ... a_1} |a_m> x ... x |a_1>, coupling a_m first
// along the chain of s. Nonzero terms only, sorted by slots.
const std::vector<SlotTerm>& coupled_expansion(const StandardTableau& s, const GTPattern& m);

// Composite CG for one slot vector a = (a_m, ..., a_1).
SurdSum composite_cg(const StandardTableau& s, const GTPattern& m, const std::vector<int>& a);
SurdSum composite_cg(const StandardTableau& s, int pattern_index, const std::vector<int>& a, int p);

// Patterns with the given top row, cached.
const std::vector<GTPattern>& cached_patterns(const std::vector<int>& weight);

}  // namespace subduction
