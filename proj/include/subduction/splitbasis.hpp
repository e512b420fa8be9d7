#pragma once

#include <string>
#include <vector>

#include "subduction/cg.hpp"
#include "subduction/gt.hpp"
#include "subduction/matrix.hpp"
#include "subduction/tableaux.hpp"

namespace subduction {

// Slot vector (a_m, ..., a_1); a_k is the row of R receiving the k-th box
// after the t_n part, so a_1 sits next to the S_n labels.
using TensorSlotState = std::vector<int>;

// One (r_n, r_m) block of the restriction of R to S_n x S_m.
struct SplitClass {
    YoungDiagram rn;
    YoungDiagram rm;
    std::vector<int> removed;      // boxes removed from each row of R
    std::vector<int> delta;        // the same counts in Delta order
    std::vector<int> copy_indices;  // pattern indices of the copies
    std::vector<GTPattern> copies;
    // R/r_n has no two boxes in one column; only then is the leading-order
    // construction exact in its multiplicity count.
    bool separated = false;
    int multiplicity() const { return static_cast<int>(copies.size()); }
};

// All classes with multiplicity >= 1, ordered by r_n (descending) then r_m.
std::vector<SplitClass> enumerate_split_labels(const YoungDiagram& R, int m);

// True when some row-length difference of R is below 2m.
bool regime_warning(const YoungDiagram& R, int m);

struct SplitLabel {
    YoungDiagram big;
    StandardTableau rn_tableau;
    CopyLabel rm_copy;
};

// Young-Yamanouchi state of R written as a t_n tableau plus the rows
// (b_m, ..., b_1) of the remaining boxes.
struct RemovalWord {
    StandardTableau base;
    std::vector<int> rows;  // 1-based rows, stored (b_m, ..., b_1)

    StandardTableau full_tableau() const;
    static RemovalWord from_tableau(const StandardTableau& t, int n);
};

SurdSum subduction_coefficient(const RemovalWord& yy, const SplitLabel& split);

std::vector<SlotTerm> split_state_expansion(const SplitLabel& split);

// The vector in slot k moves to slot sigma(k).
TensorSlotState slot_permutation_action(const Permutation& sigma, const TensorSlotState& t);
std::vector<SlotTerm> slot_permutation_action(const Permutation& sigma, const std::vector<SlotTerm>& v);

// Slot words with the given occupation in lexicographic order.
std::vector<TensorSlotState> slot_words(const std::vector<int>& occupation);

struct SplitRow {
    YoungDiagram rm;
    int pattern_index;
    GTPattern pattern;
    StandardTableau q;
};

// Rows of a split sector in the canonical order (r_m, pattern index, r_m tableau).
std::vector<SplitRow> sector_rows(const YoungDiagram& R, const YoungDiagram& rn);

// Rows are split states of the sector, columns are slot words; entries are
// subduction coefficients. Throws InvalidQuery when R/r_n is not separated.
CoeffMatrix transformation_matrix(const YoungDiagram& R, int m, const YoungDiagram& rn);

std::string slots_to_string(const TensorSlotState& t);

}  // namespace subduction
