#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "subduction/tableaux.hpp"

namespace subduction {

// Gelfand-Tsetlin pattern stored top row first: rows()[t] has p - t entries.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<int>> rows);

    int p() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& top() const { return rows_.front(); }
    // Row of length l (1..p).
    const std::vector<int>& level(int l) const { return rows_.at(p() - l); }
    // sigma_l: sum of the row of length l; sigma_0 = 0.
    int level_sum(int l) const;

    std::string to_string() const;
    static GTPattern parse(std::string_view text);

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Re-checks betweenness and row ordering independently of the constructor.
bool satisfies_betweenness(const std::vector<std::vector<int>>& rows);

// All patterns with the given top row, descending lexicographic on the
// concatenated rows (top row first).
std::vector<GTPattern> enumerate_gt_patterns(const std::vector<int>& weight);

// (sigma_p - sigma_{p-1}, ..., sigma_1 - sigma_0).
std::vector<int> delta_weight(const GTPattern& m);

// Occupation (w_1, ..., w_p) with w_j = sigma_j - sigma_{j-1}: the number of
// fundamental factors of type j. It is delta_weight reversed; w_j counts the
// boxes removed from row j of the big diagram.
std::vector<int> occupation(const GTPattern& m);

int inner_multiplicity(const std::vector<int>& weight, const std::vector<int>& delta);
long dim_unitary(const std::vector<int>& weight);
// Weyl dimension formula, used as an independent check of dim_unitary.
long weyl_dimension(const std::vector<int>& weight);

// Shapes of the tableau restricted to labels 1..k for k = 1..m.
std::vector<YoungDiagram> tableau_to_removal_chain(const StandardTableau& t);

// Fundamental pattern for index a in 1..p: weight e_a, so a = 1 is the pattern
// with every row starting with 1.
GTPattern fundamental_pattern(int p, int a);

// A copy of an S_m irrep inside the tensor power: the tableau fixes the
// coupling chain and the pattern fixes the U(p) state.
struct CopyLabel {
    StandardTableau tableau;
    int pattern_index = 0;
    GTPattern pattern;

    static CopyLabel make(const StandardTableau& t, int pattern_index, int p);
    friend bool operator==(const CopyLabel&, const CopyLabel&) = default;
};

}  // namespace subduction
