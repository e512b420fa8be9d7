#include "subduction/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "subduction/errors.hpp"

namespace subduction {

namespace {

// Leading-order 1/rho for the pair of slots k, k+1; empty for same-row slots.
std::optional<std::pair<RowPair, int>> first_order_sign(const TensorSlotState& w, int k) {
    const int m = static_cast<int>(w.size());
    const int lo = w[m - k];       // row of label n+k
    const int hi = w[m - k - 1];   // row of label n+k+1
    if (lo == hi) return std::nullopt;
    // Label n+k+1 in the upper row puts it to the right: rho > 0.
    return std::make_pair(RowPair{std::min(lo, hi), std::max(lo, hi)}, hi < lo ? 1 : -1);
}

CoeffMatrix diag_in_limit_basis(const CoeffMatrix& t, const std::vector<SurdSum>& diag) {
    CoeffMatrix out(t.rows(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.rows(); ++j) {
            SurdSum s;
            for (std::size_t w = 0; w < diag.size(); ++w) {
                if (diag[w].is_zero()) continue;
                const SurdSum& a = t.at(i, w);
                const SurdSum& b = t.at(j, w);
                if (!a.is_zero() && !b.is_zero()) s += a * b * diag[w];
            }
            out.at(i, j) = s;
        }
    }
    return out;
}

CoeffMatrix commutator(const CoeffMatrix& a, const CoeffMatrix& b) { return a * b - b * a; }

}  // namespace

std::string first_order_to_string(const FirstOrderCoeff& c) {
    std::string out;
    for (const auto& [pair, v] : c) {
        if (v.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v.to_string() + ")/d_" + std::to_string(pair.first) + std::to_string(pair.second);
    }
    return out.empty() ? "0" : out;
}

int axial_distance(const YoungDiagram& rn, const TensorSlotState& w, int k) {
    const int m = static_cast<int>(w.size());
    if (k < 1 || k >= m) throw InvalidQuery("adjacent index out of range");
    std::vector<int> rows = rn.rows();
    int content_k = 0;
    int content_k1 = 0;
    for (int j = 1; j <= k + 1; ++j) {
        const int r = w[m - j] - 1;
        if (r >= static_cast<int>(rows.size())) rows.resize(r + 1, 0);
        const int c = rows[r] - r;
        ++rows[r];
        if (j == k) content_k = c;
        if (j == k + 1) content_k1 = c;
    }
    return content_k1 - content_k;
}

std::vector<FirstOrderTerm> delta_s_action(const std::vector<SlotTerm>& state, int k) {
    std::vector<FirstOrderTerm> out;
    for (const auto& term : state) {
        if (k < 1 || k >= static_cast<int>(term.slots.size())) throw InvalidQuery("adjacent index out of range");
        auto s = first_order_sign(term.slots, k);
        if (!s) continue;
        FirstOrderCoeff c;
        c[s->first] = s->second > 0 ? term.coeff : -term.coeff;
        out.push_back({term.slots, std::move(c)});
    }
    return out;
}

std::vector<SlotTerm> delta_s_action_exact(const YoungDiagram& R, const YoungDiagram& rn,
                                           const std::vector<SlotTerm>& state, int k) {
    if (!R.contains(rn)) throw InvalidShape(rn.to_string() + " is not contained in " + R.to_string());
    std::vector<SlotTerm> out;
    for (const auto& term : state) {
        const int rho = axial_distance(rn, term.slots, k);
        if (rho == 1 || rho == -1) continue;
        out.push_back({term.slots, term.coeff / Rational(rho)});
    }
    return out;
}

CoeffMatrix FirstOrderSolution::evaluate(const std::map<RowPair, Rational>& d) const {
    CoeffMatrix out(states.size(), states.size());
    for (const auto& [pair, mat] : x) {
        auto it = d.find(pair);
        if (it == d.end()) throw InvalidQuery("missing distance for rows " + std::to_string(pair.first) + "," +
                                              std::to_string(pair.second));
        out = out + SurdSum(it->second.reciprocal()) * mat;
    }
    return out;
}

FirstOrderCoeff FirstOrderSolution::coefficient(std::size_t u, std::size_t r) const {
    FirstOrderCoeff c;
    for (const auto& [pair, mat] : x) {
        if (!mat.at(u, r).is_zero()) c[pair] = mat.at(u, r);
    }
    return c;
}

FirstOrderSolution first_order_corrections(const YoungDiagram& R, const YoungDiagram& rn,
                                           std::size_t max_group_order) {
    const int m = R.size() - rn.size();
    if (m < 1) throw InvalidQuery("corrections need m >= 1");
    std::size_t order = 1;
    for (int i = 2; i <= m; ++i) {
        order *= static_cast<std::size_t>(i);
        if (order > max_group_order) throw BudgetExceeded("S_" + std::to_string(m) + " is above the group budget");
    }
    const CoeffMatrix t = transformation_matrix(R, m, rn);
    const int p = std::max(R.num_rows(), 1);
    std::vector<int> occ(p, 0);
    for (int i = 0; i < p; ++i) occ[i] = R.row(i) - rn.row(i);
    const auto words = slot_words(occ);

    FirstOrderSolution sol;
    sol.states = sector_rows(R, rn);
    const std::size_t dim = sol.states.size();
    std::set<RowPair> symbols;

    // Limit action and first-order corrections in the limit basis.
    for (int k = 1; k < m; ++k) {
        CoeffMatrix swap(words.size(), words.size());
        std::map<RowPair, std::vector<SurdSum>> diag;
        for (std::size_t j = 0; j < words.size(); ++j) {
            auto img = slot_permutation_action(Permutation::transposition(m, k, k + 1), words[j]);
            auto pos = std::lower_bound(words.begin(), words.end(), img) - words.begin();
            if (words[j] == img) {
                // Same-row slots: Young's form is +1 exactly.
                swap.at(j, j) = SurdSum(1);
            } else {
                swap.at(static_cast<std::size_t>(pos), j) = SurdSum(1);
            }
            if (auto s = first_order_sign(words[j], k)) {
                auto& d = diag[s->first];
                d.resize(words.size());
                d[j] = SurdSum(s->second);
                symbols.insert(s->first);
            }
            if (std::count(words.begin(), words.end(), img) == 0) ++sol.cross_sector_terms;
        }
        sol.action.base.push_back(t * swap * t.transpose());
        std::map<RowPair, CoeffMatrix> corr;
        for (const auto& [pair, dv] : diag) corr[pair] = diag_in_limit_basis(t, dv);
        sol.action.correction.push_back(std::move(corr));
    }
    sol.symbols.assign(symbols.begin(), symbols.end());

    // Walk S_m from the identity; rho(g s_k) = rho(g) G_k and
    // drho(g s_k) = drho(g) G_k + rho(g) D_k for each symbol.
    struct Entry {
        CoeffMatrix rho;
        std::map<RowPair, CoeffMatrix> drho;
    };
    std::map<std::vector<int>, Entry> seen;
    Entry id{CoeffMatrix::identity(dim), {}};
    for (const auto& s : sol.symbols) id.drho[s] = CoeffMatrix(dim, dim);
    std::vector<std::vector<int>> frontier{Permutation::identity(m).images()};
    seen.emplace(frontier.front(), id);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier) {
            const Entry& e = seen.at(g);
            for (int k = 1; k < m; ++k) {
                auto h = (Permutation(g) * Permutation::transposition(m, k, k + 1)).images();
                if (seen.count(h)) continue;
                Entry f{e.rho * sol.action.base[k - 1], {}};
                for (const auto& s : sol.symbols) {
                    CoeffMatrix d = e.drho.at(s) * sol.action.base[k - 1];
                    auto it = sol.action.correction[k - 1].find(s);
                    if (it != sol.action.correction[k - 1].end()) d = d + e.rho * it->second;
                    f.drho[s] = std::move(d);
                }
                seen.emplace(h, std::move(f));
                next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    const Rational inv_order(1, static_cast<std::int64_t>(seen.size()));
    for (const auto& s : sol.symbols) {
        CoeffMatrix acc(dim, dim);
        for (const auto& [g, e] : seen) acc = acc + e.drho.at(s) * e.rho.transpose();
        sol.x[s] = SurdSum(inv_order) * acc;
    }

    sol.antisymmetric = true;
    sol.solved = true;
    for (const auto& [s, mat] : sol.x) {
        if (!(mat + mat.transpose()).is_zero()) sol.antisymmetric = false;
        for (int k = 1; k < m; ++k) {
            CoeffMatrix d(dim, dim);
            auto it = sol.action.correction[k - 1].find(s);
            if (it != sol.action.correction[k - 1].end()) d = it->second;
            if (!(commutator(mat, sol.action.base[k - 1]) - d).is_zero()) sol.solved = false;
        }
    }
    for (auto& [s, mat] : sol.x) {
        for (std::size_t i = 0; i < dim; ++i) {
            const auto& st = sol.states[i];
            const std::string label = st.rm.to_string() + " i=" + std::to_string(st.pattern_index) + " " + st.q.to_string();
            mat.row_labels().push_back(label);
            mat.col_labels().push_back(label);
        }
    }
    std::map<YoungDiagram, std::set<int>> copies;
    for (const auto& st : sol.states) copies[st.rm].insert(st.pattern_index);
    for (const auto& [rm, idx] : copies) {
        const int kk = static_cast<int>(idx.size());
        sol.gauge_dimension += kk * (kk - 1) / 2;
    }
    return sol;
}

TwoRowExactStates two_row_exact_states(int d) {
    if (d < 2) throw InvalidQuery("two-row exact states need d >= 2");
    const SurdSum plus = surd_sqrt(Rational(d + 1, 2 * d));
    const SurdSum minus = surd_sqrt(Rational(d - 1, 2 * d));
    return {{plus, minus}, {minus, -plus}};
}

double fit_decay_exponent(const std::vector<int>& d, const std::vector<double>& deviation) {
    if (d.size() != deviation.size() || d.size() < 2) throw InvalidQuery("need at least two points to fit");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (deviation[i] <= 0) throw InvalidQuery("deviation must be positive to fit a power law");
        const double x = std::log(static_cast<double>(d[i]));
        const double y = std::log(deviation[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecayFit two_row_decay(const std::vector<int>& dvals) {
    DecayFit fit;
    for (int d : dvals) {
        // R = [d, 1], r_n = [d-1]: the two removed boxes sit at axial distance d.
        const YoungDiagram R({d, 1});
        const YoungDiagram rn({d - 1});
        const auto sol = first_order_corrections(R, rn);
        const CoeffMatrix limit = transformation_matrix(R, 2, rn);
        const CoeffMatrix x = sol.evaluate({{RowPair{1, 2}, Rational(d)}});
        // Row r of the corrected states: limit_r + sum_u X(u, r) limit_u.
        const CoeffMatrix corrected = limit + x.transpose() * limit;
        const auto exact = two_row_exact_states(d);
        double dev = 0;
        for (std::size_t w = 0; w < 2; ++w) {
            dev = std::max(dev, std::abs(exact.symmetric[w].to_double() - corrected.at(0, w).to_double()));
            dev = std::max(dev, std::abs(exact.antisymmetric[w].to_double() - corrected.at(1, w).to_double()));
        }
        fit.d.push_back(d);
        fit.deviation.push_back(dev);
    }
    fit.exponent = fit.d.size() >= 2 ? fit_decay_exponent(fit.d, fit.deviation)
                                     : std::numeric_limits<double>::quiet_NaN();
    return fit;
}

}  // namespace subduction
