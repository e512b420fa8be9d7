#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "subduction/matrix.hpp"
#include "subduction/tableaux.hpp"

namespace subduction {

struct FullRep {
    YoungDiagram shape;
    std::vector<CoeffMatrix> generators;  // generators[k-1] represents (k, k+1)

    int N() const { return shape.size(); }
    std::size_t dim() const { return generators.empty() ? 1 : generators.front().rows(); }
    // Symmetric, involutory, braid and far-commutation relations, exactly.
    bool satisfies_coxeter() const;
};

// Work cap is N! * d^2 scalar products.
FullRep build_full_rep(const YoungDiagram& shape, std::uint64_t max_work = 400'000'000);

// Adjacent position swaps k (1-based) visiting every permutation of n once,
// in Steinhaus-Johnson-Trotter order; n! - 1 entries.
std::vector<int> sjt_swaps(int n);

// Isotypic projectors of the subgroup permuting labels first..first+size-1,
// one per irrep of S_size, from character sums over the whole subgroup.
std::map<YoungDiagram, CoeffMatrix> subgroup_projectors(const FullRep& rep, int first, int size);

// Projector onto the (r_n, r_m) isotypic subspace of S_n x S_m.
CoeffMatrix split_projector_exact(const FullRep& rep, const YoungDiagram& rn, const YoungDiagram& rm);

struct MultiplicityRow {
    YoungDiagram rn;
    YoungDiagram rm;
    std::int64_t rank = 0;
    std::int64_t oracle_multiplicity = 0;
    int predicted = 0;  // inner multiplicity of the U(p) weight
    bool separated = false;
};

// One row per (r_n, r_m) with nonzero rank or nonzero prediction.
std::vector<MultiplicityRow> multiplicity_report(const YoungDiagram& R, int m);

// S_m on standard fillings of the skew shape outer/inner by Young's form.
struct SkewRep {
    YoungDiagram outer;
    YoungDiagram inner;
    std::vector<std::vector<int>> fillings;  // 0-based row of labels 1..m
    std::vector<CoeffMatrix> generators;

    int content(std::size_t filling, int label) const;
    std::size_t index_of(const std::vector<int>& rows) const;
};

SkewRep build_skew_rep(const YoungDiagram& outer, const YoungDiagram& inner);

// r_m isotypic projector of a skew representation.
CoeffMatrix skew_isotypic_projector(const SkewRep& rep, const YoungDiagram& rm);

// Exact trace of (n, n+1) over the (r_n, r_m) block of R, summed over copies.
Rational exact_restricted_trace(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm);

// Largest principal-angle sine between the exact r_m isotypic subspace of the
// (R, r_n) sector and the span of the leading-order split states with that r_m.
double isotypic_angle(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm);

struct TwoRowFamily {
    int q2 = 0;
    int n1 = 0;
    int n2 = 0;
    int r1 = 0;
    int r2 = 0;
};

enum class ConvergenceQuantity { Trace, Block };

struct ConvergenceRow {
    int d = 0;
    double deviation = 0;  // relative trace error or principal-angle sine
    Rational exact;
    Rational leading;
    bool exact_matches_closed_form = true;
    bool within_bound = true;
    bool regime_warning = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double exponent = 0;
};

// d runs over q1 - q2 with q2 fixed by the family.
ConvergenceReport convergence_report(const TwoRowFamily& family, ConvergenceQuantity quantity,
                                     const std::vector<int>& dvals);

}  // namespace subduction
