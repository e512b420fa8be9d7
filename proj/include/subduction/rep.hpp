#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subduction/matrix.hpp"
#include "subduction/splitbasis.hpp"

namespace subduction {

// A window of the split basis of R. Labels 1..f sit in a fixed standard
// filling of `frozen` (f = |frozen|); the generators (k, k+1) with
// f < k < N act inside the window. With f = n - 1 the window is exactly
// what the straddling transposition (n, n+1) needs.
struct Sector {
    YoungDiagram R;
    int m = 0;
    YoungDiagram frozen;

    int N() const { return R.size(); }
    int n() const { return R.size() - m; }
    int f() const { return frozen.size(); }
    int p() const { return std::max(R.num_rows(), 1); }
};

// Split-basis state: t_n given by the rows of its active labels f+1..n,
// together with the S_m label (r_m, copy, tableau).
struct SectorState {
    YoungDiagram rn;
    std::vector<int> active_rows;  // 0-based rows of labels f+1..n
    SplitRow split;
    // 1-based row of box n, or 0 when t_n has no active labels.
    int straddle_row() const { return active_rows.empty() ? 0 : active_rows.back() + 1; }
};

struct Budget {
    std::size_t max_states = 4000;
    std::size_t max_word_length = 400;
};

// Canonical order: r_n (descending), active rows (lexicographic), r_m
// (descending), pattern index, r_m tableau in last-letter order.
class SectorBasis {
public:
    static SectorBasis build(const Sector& sector, const Budget& budget = {});

    const Sector& sector() const { return sector_; }
    const std::vector<SectorState>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    std::optional<std::size_t> index_of(const SectorState& s) const;
    // Full t_n tableau; the frozen labels fill `frozen` row by row.
    StandardTableau tn_tableau(const SectorState& s) const;
    std::string label(std::size_t i) const;

private:
    Sector sector_;
    std::vector<SectorState> states_;
    std::map<std::tuple<std::vector<int>, std::vector<int>, int, std::vector<std::vector<int>>>, std::size_t> index_;
};

// Matrix element of a generator (k, k+1) that does not straddle, k != n.
SurdSum nonstraddling_matrix_element(const SectorBasis& basis, const SectorState& bra, const SectorState& ket, int k);

// Leading-order matrix element of (n, n+1) between two split states.
SurdSum straddling_element(const SectorState& bra, const SectorState& ket, int p);

CoeffMatrix generator_matrix(const SectorBasis& basis, int k);
CoeffMatrix straddling_block(const SectorBasis& basis);

// Product of generator matrices along the bubble-sort word of sigma
// (standard labels). sigma must fix 1..f.
CoeffMatrix element_matrix(const SectorBasis& basis, const Permutation& sigma, const Budget& budget = {});

// alpha * (n, n+1) * beta evaluated entry by entry from Young matrices of
// t_n and r_m and one CG sum, without the sector generator matrices.
CoeffMatrix straddle_closed_form(const SectorBasis& basis, const Permutation& alpha, const Permutation& beta);

// Trace of (n, n+1) over the (r_n, r_m) block summed over the copies, by
// the dimension-weighted sum over removable boxes.
Rational restricted_trace_straddling(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm);
// The same trace by explicit enumeration of r_m tableaux and counted t_n tableaux.
Rational restricted_trace_by_tableaux(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm);
// The same sum with d_{r_n - e_rho} replaced by its leading-order value d_{r_n} q_rho / n.
Rational restricted_trace_leading(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm);

struct TwoRowParams {
    int q1 = 0;
    int q2 = 0;
    int n1 = 0;
    int n2 = 0;
    int r1 = 0;
    int r2 = 0;

    int m() const { return n1 + n2; }
    int n() const { return q1 + q2; }
    int d() const { return q1 - q2; }
    YoungDiagram R() const { return YoungDiagram({q1 + n1, q2 + n2}); }
    YoungDiagram rn() const { return YoungDiagram({q1, q2}); }
    YoungDiagram rm() const { return YoungDiagram({r1, r2}); }
    void validate() const;
};

struct TwoRowForms {
    Rational leading;
    // Restricted character with the box contents of the removed boxes
    // substituted correctly.
    Rational exact;
    // The parameterized form as printed (drops the -n2 content shift).
    Rational exact_as_printed;
    // Relative-error bound; empty when n1 d + m q2 = 0.
    std::optional<Rational> bound;
    int lambda_m = 0;
};

TwoRowForms two_row_closed_forms(const TwoRowParams& params);

// Pairs in rows minus pairs in columns.
int lambda_pairs(const YoungDiagram& shape);

// Number of standard tableaux by recursion over removable corners,
// independent of the hook formula.
std::int64_t count_tableaux(const YoungDiagram& shape);

}  // namespace subduction
