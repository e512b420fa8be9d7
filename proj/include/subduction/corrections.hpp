#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subduction/matrix.hpp"
#include "subduction/splitbasis.hpp"

namespace subduction {

// Row pair (a, b), a < b, 1-based; stands for the symbol 1/d_ab where d_ab is
// the axial distance between boxes in rows a and b.
using RowPair = std::pair<int, int>;

// Sum of c_ab / d_ab.
using FirstOrderCoeff = std::map<RowPair, SurdSum>;

std::string first_order_to_string(const FirstOrderCoeff& c);

struct FirstOrderTerm {
    TensorSlotState slots;
    FirstOrderCoeff coeff;
};

// First-order part of (k, k+1) acting on a slot-word combination. Young's
// form gives (1/rho)|w> + O(1/rho^2) on words whose two slots sit in
// different rows; same-row slots are exact already and get no correction.
std::vector<FirstOrderTerm> delta_s_action(const std::vector<SlotTerm>& state, int k);

// Same with 1/rho evaluated from the box contents of R / r_n.
std::vector<SlotTerm> delta_s_action_exact(const YoungDiagram& R, const YoungDiagram& rn,
                                           const std::vector<SlotTerm>& state, int k);

// Signed axial distance c(n+k+1) - c(n+k) for slot word w on R / r_n.
int axial_distance(const YoungDiagram& rn, const TensorSlotState& w, int k);

struct PerturbedAction {
    std::vector<CoeffMatrix> base;                            // Young's form of (k, k+1) in the limit basis
    std::vector<std::map<RowPair, CoeffMatrix>> correction;  // per k, per symbol
};

struct FirstOrderSolution {
    std::vector<SplitRow> states;
    std::vector<RowPair> symbols;
    PerturbedAction action;
    // X[symbol](u, r): coefficient of |u> in |delta r>, per symbol.
    std::map<RowPair, CoeffMatrix> x;
    bool antisymmetric = false;
    // True when [X, Gamma_k] = D_k holds exactly for every k.
    bool solved = false;
    // Free antisymmetric directions inside multiplicity spaces, fixed to zero.
    int gauge_dimension = 0;
    // Components of delta S leaving the occupation class of the sector.
    int cross_sector_terms = 0;

    // Sum of X_ab / d_ab at the given distances.
    CoeffMatrix evaluate(const std::map<RowPair, Rational>& d) const;
    FirstOrderCoeff coefficient(std::size_t u, std::size_t r) const;
};

// Solves the first-order equations on the split sector (R, r_n). Throws
// InvalidQuery when the sector is not separated and BudgetExceeded when m! is
// above max_group_order.
FirstOrderSolution first_order_corrections(const YoungDiagram& R, const YoungDiagram& rn,
                                           std::size_t max_group_order = 5040);

struct TwoRowExactStates {
    // Coefficients on the words (1,2), (2,1).
    std::vector<SurdSum> symmetric;
    std::vector<SurdSum> antisymmetric;
};

// Exact m = 2 two-row split states at axial distance d >= 2.
TwoRowExactStates two_row_exact_states(int d);

struct DecayFit {
    std::vector<int> d;
    std::vector<double> deviation;
    double exponent = 0;
};

// Max-norm deviation of the exact two-row states from limit plus first order.
// The exponent is NaN for fewer than two distances.
DecayFit two_row_decay(const std::vector<int>& dvals);

// Least-squares slope of -log(dev) against log(d).
double fit_decay_exponent(const std::vector<int>& d, const std::vector<double>& deviation);

}  // namespace subduction
