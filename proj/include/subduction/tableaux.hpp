#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subduction/matrix.hpp"
#include "subduction/surd.hpp"

namespace subduction {

// Partition with positive, non-increasing rows. The empty diagram is
// allowed so that degenerate splits (m = 0, empty frozen part) need no
// special casing. Trailing zeros given to the constructor are dropped.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    // Row length, 0-based; zero past the last row.
    int row(int i) const { return i < num_rows() ? rows_[i] : 0; }
    int size() const;
    bool empty() const { return rows_.empty(); }

    bool contains(const YoungDiagram& other) const;
    std::optional<YoungDiagram> add_box(int row) const;
    std::optional<YoungDiagram> remove_box(int row) const;
    // Rows padded with zeros to length p.
    std::vector<int> padded(int p) const;

    std::uint64_t hooks_product() const;
    // Number of standard tableaux, N!/hooks.
    std::int64_t dimension() const;

    std::string to_string() const;
    static YoungDiagram parse(std::string_view text);

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

// Standard filling of a diagram with labels 1..N increasing along rows and
// down columns. Positions are 0-based (row, column).
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);
    // Label k (1-based) is appended to row row_of_label[k-1] (0-based).
    static StandardTableau from_row_sequence(const std::vector<int>& row_of_label);

    const YoungDiagram& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return static_cast<int>(pos_.size()); }
    std::pair<int, int> position(int label) const { return pos_.at(label - 1); }
    int row_of(int label) const { return pos_.at(label - 1).first; }
    // Content col - row with K = 0.
    int content(int label) const { return pos_.at(label - 1).second - pos_.at(label - 1).first; }
    std::vector<int> row_sequence() const;

    // Tableau on labels 1..k.
    StandardTableau restricted(int k) const;
    // Tableau with labels k and k+1 exchanged, if still standard.
    std::optional<StandardTableau> swapped(int k) const;

    std::string to_string() const;
    static StandardTableau parse(std::string_view text);

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> pos_;
};

// All standard tableaux of a shape in last-letter order: the position of the
// largest label decides first (lowest row first), then recursively.
std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& shape);

// All partitions of n with at most max_rows rows, in reverse lexicographic order.
std::vector<YoungDiagram> partitions(int n, int max_rows);

struct TableauTerm {
    StandardTableau tableau;
    SurdSum coeff;
};

// Young's orthogonal form for the transposition (k, k+1).
std::vector<TableauTerm> yy_action_exact(const StandardTableau& t, int k);

enum class LimitMode { Row, Column };

// Infinite row (or column) length difference limit of the same action.
TableauTerm yy_action_limit(const StandardTableau& t, int k, LimitMode mode);

// Matrix of (k, k+1) on the standard tableaux of a shape, in last-letter order.
// Column j holds the image of basis tableau j.
CoeffMatrix yy_matrix(const YoungDiagram& shape, int k, bool exact = true);

// Permutation of 1..N in one-line form.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    // Cycle notation such as "(4,5)(1,2,3)"; "()" is the identity.
    static Permutation parse_cycles(std::string_view text, int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i - 1); }
    const std::vector<int>& images() const { return img_; }
    Permutation inverse() const;
    bool is_identity() const;
    // Relabel points through f (a bijection given as f[i-1]).
    Permutation conjugated(const std::vector<int>& f) const;
    std::string to_cycles() const;

    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// Bubble-sort decomposition: returns k_1..k_L with perm = s_{k_1} ... s_{k_L},
// where s_k = (k, k+1).
std::vector<int> permutation_to_adjacent_word(const Permutation& perm);

}  // namespace subduction
