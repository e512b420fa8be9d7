#include "subduction/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "subduction/cg.hpp"
#include "subduction/corrections.hpp"
#include "subduction/errors.hpp"
#include "subduction/gt.hpp"
#include "subduction/oracle.hpp"
#include "subduction/rep.hpp"
#include "subduction/splitbasis.hpp"

namespace subduction {

bool CriterionReport::passed() const {
    if (time_limit > 0 && seconds > time_limit) return false;
    for (const auto& c : checks) {
        if (c.required && !c.passed) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
CriterionReport timed(int id, std::string title, double limit, F&& body) {
    CriterionReport r;
    r.id = id;
    r.title = std::move(title);
    r.time_limit = limit;
    const auto start = Clock::now();
    body(r.checks);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

SurdSum over_four_root(const Rational& c, std::int64_t radicand) {
    return SurdSum(c) / (SurdSum(4) * surd_sqrt(Rational(radicand)));
}

std::string count_text(std::size_t bad, std::size_t total, const char* what) {
    std::ostringstream os;
    os << bad << " of " << total << ' ' << what;
    return os.str();
}

// Every valid two-row point with m <= 4, q1 <= 14, q2 <= 6.
std::vector<TwoRowParams> two_row_grid() {
    std::vector<TwoRowParams> out;
    for (int n1 = 0; n1 <= 4; ++n1) {
        for (int n2 = 0; n1 + n2 <= 4; ++n2) {
            const int m = n1 + n2;
            if (m == 0) continue;
            for (int q2 = 0; q2 <= 6; ++q2) {
                for (int q1 = std::max(q2, 1); q1 <= 14; ++q1) {
                    for (int r2 = 0; 2 * r2 <= m; ++r2) {
                        TwoRowParams t{q1, q2, n1, n2, m - r2, r2};
                        try {
                            t.validate();
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        out.push_back(t);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

CriterionReport check_worked_example() {
    return timed(1, "four-row worked example", 1.0, [](std::vector<CheckResult>& checks) {
        const auto p1 = GTPattern::parse("[[2,1,0,0],[2,0,0],[1,0],[0]]");
        const auto p2 = GTPattern::parse("[[2,1,0,0],[1,1,0],[1,0],[0]]");
        const auto c1 = GTPattern::parse("[[3,1,0,0],[3,0,0],[2,0],[1]]");
        const auto c2 = GTPattern::parse("[[3,1,0,0],[2,1,0],[2,0],[1]]");
        const auto c3 = GTPattern::parse("[[3,1,0,0],[2,1,0],[1,1],[1]]");

        struct Expect {
            std::string name;
            SurdSum got;
            SurdSum want;
        };
        std::vector<Expect> cgs{
            {"C(p1,c1)", fundamental_cg(p1, 1, c1), SurdSum(1) / surd_sqrt(Rational(3))},
            {"C(p1,c2)", fundamental_cg(p1, 1, c2), over_four_root(-1, 6)},
            {"C(p2,c2)", fundamental_cg(p2, 1, c2), over_four_root(3, 2)},
            {"C(p1,c3)", fundamental_cg(p1, 1, c3), over_four_root(-1, 2)},
            {"C(p2,c3)", fundamental_cg(p2, 1, c3), -surd_sqrt(Rational(3)) / (SurdSum(4) * surd_sqrt(Rational(2)))},
        };
        std::string bad;
        for (const auto& e : cgs) {
            if (!(e.got == e.want)) bad += e.name + "=" + e.got.to_string() + " ";
        }
        checks.push_back({"five CG coefficients", bad.empty(), bad.empty() ? "all canonical forms equal" : bad});

        const auto pats = enumerate_gt_patterns({3, 1, 0, 0});
        std::vector<GTPattern> with_delta;
        for (const auto& p : pats) {
            if (delta_weight(p) == std::vector<int>{1, 1, 1, 1}) with_delta.push_back(p);
        }
        checks.push_back({"patterns with Delta (1,1,1,1)", with_delta == std::vector<GTPattern>{c1, c2, c3},
                          std::to_string(with_delta.size()) + " patterns in canonical order"});

        auto basis = SectorBasis::build(Sector{YoungDiagram({10, 8, 6, 4}), 4, YoungDiagram({8, 7, 5, 3})});
        auto block = straddling_block(basis);
        const auto q = StandardTableau::parse("[[1,2,4],[3]]");
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& st = basis.states()[i];
            if (st.rn == YoungDiagram({9, 7, 5, 3}) && st.straddle_row() == 1 && st.split.q == q) idx.push_back(i);
        }
        if (idx.size() != 3) {
            checks.push_back({"six matrix elements", false, "expected 3 states, found " + std::to_string(idx.size())});
            return;
        }
        std::vector<Expect> elems{
            {"<1|s|1>", block.at(idx[0], idx[0]), SurdSum(Rational(1, 3))},
            {"<2|s|2>", block.at(idx[1], idx[1]), SurdSum(Rational(28, 96))},
            {"<3|s|3>", block.at(idx[2], idx[2]), SurdSum(Rational(1, 8))},
            {"<1|s|2>", block.at(idx[0], idx[1]), over_four_root(-1, 18)},
            {"<1|s|3>", block.at(idx[0], idx[2]), over_four_root(-1, 6)},
            {"<2|s|3>", block.at(idx[1], idx[2]), over_four_root(-1, 3)},
        };
        bad.clear();
        for (const auto& e : elems) {
            if (!(e.got == e.want)) bad += e.name + "=" + e.got.to_string() + " ";
        }
        checks.push_back({"six matrix elements", bad.empty(), bad.empty() ? "no sign flips needed" : bad});
    });
}

CriterionReport check_schur_weyl() {
    return timed(2, "Schur-Weyl dimension count", 10.0, [](std::vector<CheckResult>& checks) {
        std::size_t bad = 0, total = 0;
        for (int p = 1; p <= 4; ++p) {
            for (int m = 1; m <= 5; ++m) {
                long sum_enum = 0;
                long sum_weyl = 0;
                for (const auto& s : partitions(m, p)) {
                    const long d = static_cast<long>(enumerate_standard_tableaux(s).size());
                    sum_enum += static_cast<long>(enumerate_gt_patterns(s.padded(p)).size()) * d;
                    sum_weyl += weyl_dimension(s.padded(p)) * s.dimension();
                }
                long power = 1;
                for (int k = 0; k < m; ++k) power *= p;
                ++total;
                if (sum_enum != power || sum_weyl != power) ++bad;
            }
        }
        checks.push_back({"p^m = sum Dim(s) d_s, p <= 4, m <= 5", bad == 0,
                          count_text(bad, total, "(p, m) pairs differ")});
    });
}

CriterionReport check_two_row_trace() {
    return timed(3, "two-row restricted trace", 30.0, [](std::vector<CheckResult>& checks) {
        const auto grid = two_row_grid();
        std::size_t literal_bad = 0, tab_bad = 0, lead_bad = 0;
        double worst_gap = 0;
        for (const auto& t : grid) {
            const auto forms = two_row_closed_forms(t);
            const auto split = restricted_trace_straddling(t.R(), t.rn(), t.rm());
            if (split != forms.leading) {
                ++literal_bad;
                if (!forms.leading.is_zero()) {
                    worst_gap = std::max(worst_gap, std::abs(split.to_double() / forms.leading.to_double() - 1.0));
                }
            }
            if (restricted_trace_by_tableaux(t.R(), t.rn(), t.rm()) != split) ++tab_bad;
            if (restricted_trace_leading(t.R(), t.rn(), t.rm()) != forms.leading) ++lead_bad;
        }
        std::ostringstream lit;
        lit << count_text(literal_bad, grid.size(), "grid points differ") << "; worst relative gap " << worst_gap
            << " (the split-basis trace weights each row by d_{r_n - e_rho}, the closed form by its leading value)";
        checks.push_back({"split-basis trace equals closed form", literal_bad == 0, lit.str()});
        checks.push_back({"dimension and tableau-count routes agree", tab_bad == 0,
                          count_text(tab_bad, grid.size(), "grid points differ"), false});
        checks.push_back({"leading-order reduction equals closed form", lead_bad == 0,
                          count_text(lead_bad, grid.size(), "grid points differ"), false});

        // sum over r_m' of d_{r_m'} C^2 equals d_{r_m} n_rho / m for every pattern.
        std::size_t id_bad = 0, id_total = 0;
        for (int m = 1; m <= 4; ++m) {
            for (const auto& rm : partitions(m, 2)) {
                for (const auto& child : cached_patterns(rm.padded(2))) {
                    const auto occ = occupation(child);
                    for (int rho = 1; rho <= 2; ++rho) {
                        Rational sum;
                        for (int row = 0; row < 2; ++row) {
                            auto parent = rm.remove_box(row);
                            if (!parent) continue;
                            Rational c2;
                            for (const auto& pp : cached_patterns(parent->padded(2))) {
                                const auto c = fundamental_cg(pp, rho, child);
                                c2 += (c * c).as_rational();
                            }
                            sum += Rational(parent->dimension()) * c2;
                        }
                        ++id_total;
                        if (sum != Rational(rm.dimension() * occ[rho - 1], m)) ++id_bad;
                    }
                }
            }
        }
        checks.push_back({"CG weight identity", id_bad == 0, count_text(id_bad, id_total, "cases differ"), false});
    });
}

CriterionReport check_error_bound() {
    return timed(4, "relative error bound", 0, [](std::vector<CheckResult>& checks) {
        std::size_t total = 0, skipped = 0, bad_exact = 0, bad_printed = 0, brute_bad = 0, brute_total = 0;
        std::size_t ns_bad = 0, ns_total = 0;
        for (const auto& t : two_row_grid()) {
            if (t.d() <= 1) continue;
            const auto f = two_row_closed_forms(t);
            if (f.leading.is_zero() || !f.bound) {
                ++skipped;
                continue;
            }
            ++total;
            auto rel = [&](const Rational& x) {
                Rational r = (x - f.leading) / f.leading;
                return r < Rational(0) ? -r : r;
            };
            if (rel(f.exact) > *f.bound) ++bad_exact;
            if (rel(f.exact_as_printed) > *f.bound) ++bad_printed;
            if (t.R().size() <= 12) {
                const bool differs = exact_restricted_trace(t.R(), t.rn(), t.rm()) != f.exact;
                // Below q1 = q2 + n2 the removed boxes share a column and the block can be empty.
                if (t.q1 >= t.q2 + t.n2) {
                    ++brute_total;
                    if (differs) ++brute_bad;
                } else {
                    ++ns_total;
                    if (differs) ++ns_bad;
                }
            }
        }
        checks.push_back({"bound holds for the exact character", bad_exact == 0,
                          count_text(bad_exact, total, "points exceed") + ", " + std::to_string(skipped) +
                              " with zero leading value skipped"});
        checks.push_back({"bound holds for the form as printed", bad_printed == 0,
                          count_text(bad_printed, total, "points exceed"), false});
        checks.push_back({"exact form equals brute-force skew trace", brute_bad == 0,
                          count_text(brute_bad, brute_total, "separated points differ"), false});
        checks.push_back({"brute-force trace on non-separated points", ns_bad == 0,
                          count_text(ns_bad, ns_total, "points differ (the block is empty there)"), false});
    });
}

CriterionReport check_corrections() {
    return timed(5, "first-order corrections", 0, [](std::vector<CheckResult>& checks) {
        auto sol = first_order_corrections(YoungDiagram({9, 4}), YoungDiagram({8, 3}));
        bool ok = sol.solved && sol.states.size() == 2 && sol.states[0].rm == YoungDiagram({2}) &&
                  sol.states[1].rm == YoungDiagram({1, 1});
        std::string detail = "unsolved";
        if (ok) {
            const auto up = first_order_to_string(sol.coefficient(1, 0));
            const auto down = first_order_to_string(sol.coefficient(0, 1));
            const auto diag0 = first_order_to_string(sol.coefficient(0, 0));
            const auto diag1 = first_order_to_string(sol.coefficient(1, 1));
            ok = up == "(1/2)/d_12" && down == "(-1/2)/d_12" && diag0 == "0" && diag1 == "0";
            detail = "delta[2] = " + up + " [1,1], delta[1,1] = " + down + " [2]";
        }
        checks.push_back({"symbolic m = 2 solution", ok, detail});

        auto fit = two_row_decay({4, 8, 16, 32});
        std::ostringstream os;
        os << "exponent " << fit.exponent;
        checks.push_back({"second-order decay exponent in [1.8, 2.2]", fit.exponent >= 1.8 && fit.exponent <= 2.2,
                          os.str()});
    });
}

CriterionReport check_properties() {
    return timed(6, "property suites", 0, [](std::vector<CheckResult>& checks) {
        {
            std::size_t bad = 0, classes_total = 0;
            for (int p = 1; p <= 3; ++p) {
                for (int m = 1; m <= 4; ++m) {
                    std::map<std::vector<int>, std::vector<const std::vector<SlotTerm>*>> classes;
                    for (const auto& shape : partitions(m, p)) {
                        for (const auto& s : enumerate_standard_tableaux(shape)) {
                            for (const auto& pat : cached_patterns(shape.padded(p))) {
                                classes[occupation(pat)].push_back(&coupled_expansion(s, pat));
                            }
                        }
                    }
                    for (const auto& [occ, states] : classes) {
                        ++classes_total;
                        const auto words = slot_words(occ);
                        bool good = states.size() == words.size();
                        for (std::size_t x = 0; good && x < states.size(); ++x) {
                            std::map<std::vector<int>, SurdSum> vx;
                            for (const auto& t : *states[x]) vx[t.slots] = t.coeff;
                            for (std::size_t y = x; y < states.size(); ++y) {
                                SurdSum dot;
                                for (const auto& t : *states[y]) {
                                    auto it = vx.find(t.slots);
                                    if (it != vx.end()) dot.add_scaled(it->second, t.coeff);
                                }
                                if (!(dot == SurdSum(x == y ? 1 : 0))) good = false;
                            }
                        }
                        if (!good) ++bad;
                    }
                }
            }
            checks.push_back({"CG orthonormality and completeness per class", bad == 0,
                              count_text(bad, classes_total, "occupation classes fail")});
        }
        {
            std::size_t bad = 0, total = 0;
            for (const auto& R : {YoungDiagram({9, 5, 1}), YoungDiagram({11, 7, 3}), YoungDiagram({10, 8, 6, 4}),
                                  YoungDiagram({12, 5})}) {
                for (int m = 1; m <= 4; ++m) {
                    std::set<YoungDiagram> sectors;
                    for (const auto& c : enumerate_split_labels(R, m)) {
                        if (c.separated) sectors.insert(c.rn);
                    }
                    for (const auto& rn : sectors) {
                        auto t = transformation_matrix(R, m, rn);
                        ++total;
                        if (t.rows() != t.cols() || !(t * t.transpose()).is_identity()) ++bad;
                    }
                }
            }
            checks.push_back({"split transformation matrices orthogonal", bad == 0,
                              count_text(bad, total, "sectors fail")});
        }
        {
            std::size_t bad = 0, total = 0;
            for (const auto& sec : {Sector{YoungDiagram({10, 8, 6, 4}), 4, YoungDiagram({8, 7, 5, 3})},
                                    Sector{YoungDiagram({9, 4}), 2, YoungDiagram({7, 3})},
                                    Sector{YoungDiagram({12, 7, 2}), 3, YoungDiagram({10, 6, 1})},
                                    Sector{YoungDiagram({11, 6}), 4, YoungDiagram({8, 4})},
                                    Sector{YoungDiagram({9, 5, 2}), 2, YoungDiagram({7, 4, 2})}}) {
                auto g = straddling_block(SectorBasis::build(sec));
                ++total;
                if (!g.is_symmetric() || !(g * g).is_identity()) ++bad;
            }
            checks.push_back({"straddling blocks symmetric and involutory", bad == 0,
                              count_text(bad, total, "sectors fail")});
        }
        {
            std::mt19937 rng(7);
            std::uniform_int_distribution<int> entry(-5, 5);
            std::size_t bad = 0, total = 0;
            for (int p = 2; p <= 3; ++p) {
                for (int m = 2; m <= 4; ++m) {
                    std::vector<std::vector<Rational>> u(p, std::vector<Rational>(p));
                    for (auto& row : u) {
                        for (auto& x : row) x = Rational(entry(rng), 1 + (entry(rng) + 5) % 4);
                    }
                    using Vec = std::map<TensorSlotState, Rational>;
                    auto apply_u = [&](const Vec& v) {
                        Vec out;
                        for (const auto& [word, c] : v) {
                            Vec partial{{TensorSlotState{}, c}};
                            for (int a : word) {
                                Vec next;
                                for (const auto& [w, x] : partial) {
                                    for (int b = 1; b <= p; ++b) {
                                        auto w2 = w;
                                        w2.push_back(b);
                                        next[w2] += x * u[b - 1][a - 1];
                                    }
                                }
                                partial = std::move(next);
                            }
                            for (const auto& [w, x] : partial) out[w] += x;
                        }
                        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
                        return out;
                    };
                    auto apply_sigma = [](const Permutation& s, const Vec& v) {
                        Vec out;
                        for (const auto& [w, c] : v) out[slot_permutation_action(s, w)] += c;
                        return out;
                    };
                    std::vector<int> occ(p, 0);
                    for (int k = 0; k < m; ++k) ++occ[k % p];
                    for (const auto& word : slot_words(occ)) {
                        Vec v{{word, Rational(1)}};
                        for (int k = 1; k < m; ++k) {
                            auto s = Permutation::transposition(m, k, k + 1);
                            ++total;
                            if (apply_sigma(s, apply_u(v)) != apply_u(apply_sigma(s, v))) ++bad;
                        }
                    }
                }
            }
            checks.push_back({"slot permutations commute with per-slot maps", bad == 0,
                              count_text(bad, total, "cases fail")});
        }
        {
            std::size_t bad = 0, total = 0;
            for (int n = 2; n <= 5; ++n) {
                for (const auto& shape : partitions(n, n)) {
                    std::vector<CoeffMatrix> gens;
                    for (int k = 1; k < n; ++k) gens.push_back(yy_matrix(shape, k));
                    ++total;
                    bool good = true;
                    for (const auto& g : gens) {
                        good = good && (g * g.transpose()).is_identity() && (g * g).is_identity();
                    }
                    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
                        good = good && gens[k] * gens[k + 1] * gens[k] == gens[k + 1] * gens[k] * gens[k + 1];
                    }
                    for (std::size_t a = 0; a < gens.size(); ++a) {
                        for (std::size_t b = a + 2; b < gens.size(); ++b) good = good && gens[a] * gens[b] == gens[b] * gens[a];
                    }
                    if (!good) ++bad;
                }
            }
            checks.push_back({"Young matrices orthogonal, involutory, braid, N <= 5", bad == 0,
                              count_text(bad, total, "shapes fail")});
        }
    });
}

CriterionReport check_oracle() {
    return timed(7, "oracle agreement", 300.0, [](std::vector<CheckResult>& checks) {
        std::size_t bad = 0, rows = 0, ns_rows = 0, ns_bad = 0, rank_bad = 0, shapes = 0;
        for (int size = 2; size <= 7; ++size) {
            for (const auto& R : partitions(size, 3)) {
                for (int m = 1; m <= std::min(3, size - 1); ++m) {
                    ++shapes;
                    std::int64_t ranks = 0;
                    for (const auto& row : multiplicity_report(R, m)) {
                        ranks += row.rank;
                        if (row.separated) {
                            ++rows;
                            if (row.oracle_multiplicity != row.predicted) ++bad;
                        } else {
                            ++ns_rows;
                            if (row.oracle_multiplicity != row.predicted) ++ns_bad;
                        }
                    }
                    if (ranks != R.dimension()) ++rank_bad;
                }
            }
        }
        checks.push_back({"isotypic ranks equal inner multiplicities on separated sectors", bad == 0 && rank_bad == 0,
                          count_text(bad, rows, "rows differ") + "; ranks sum to dim R in " +
                              std::to_string(shapes - rank_bad) + " of " + std::to_string(shapes) + " cases"});
        checks.push_back({"non-separated sectors", ns_bad == 0,
                          count_text(ns_bad, ns_rows, "rows differ (R/r_n has two boxes in a column)"), false});

        struct Family {
            TwoRowFamily f;
            std::vector<int> d;
        };
        std::ostringstream os;
        bool good = true;
        for (const auto& fam : {Family{{1, 1, 1, 2, 0}, {4, 8, 16, 32, 64}}, Family{{1, 1, 1, 1, 1}, {4, 8, 16, 32, 64}},
                                Family{{1, 2, 1, 2, 1}, {4, 8, 16, 32}}}) {
            auto rep = convergence_report(fam.f, ConvergenceQuantity::Block, fam.d);
            good = good && rep.exponent >= 0.8;
            os << "[" << fam.f.r1 << "," << fam.f.r2 << "] n=(" << fam.f.n1 << "," << fam.f.n2 << "): " << rep.exponent
               << "  ";
        }
        checks.push_back({"principal angles decay with exponent >= 0.8", good, os.str()});
    });
}

std::vector<CriterionReport> run_suite(std::string_view suite) {
    std::vector<int> ids;
    if (suite == "paper") {
        ids = {1, 5};
    } else if (suite == "dims") {
        ids = {2, 6, 7};
    } else if (suite == "convergence") {
        ids = {3, 4, 5, 7};
    } else if (suite == "all") {
        ids = {1, 2, 3, 4, 5, 6, 7};
    } else {
        throw InvalidQuery("unknown suite '" + std::string(suite) + "'; expected paper, dims, convergence or all");
    }
    std::vector<CriterionReport> out;
    for (int id : ids) {
        switch (id) {
            case 1: out.push_back(check_worked_example()); break;
            case 2: out.push_back(check_schur_weyl()); break;
            case 3: out.push_back(check_two_row_trace()); break;
            case 4: out.push_back(check_error_bound()); break;
            case 5: out.push_back(check_corrections()); break;
            case 6: out.push_back(check_properties()); break;
            case 7: out.push_back(check_oracle()); break;
        }
    }
    return out;
}

}  // namespace subduction
