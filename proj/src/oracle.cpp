#include "subduction/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "subduction/corrections.hpp"
#include "subduction/errors.hpp"
#include "subduction/rep.hpp"
#include "subduction/splitbasis.hpp"

namespace subduction {

namespace {

using Column = std::vector<std::pair<std::size_t, SurdSum>>;

std::vector<Column> columns_of(const CoeffMatrix& g) {
    std::vector<Column> cols(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (!g.at(i, j).is_zero()) cols[j].emplace_back(i, g.at(i, j));
        }
    }
    return cols;
}

CoeffMatrix times_sparse(const CoeffMatrix& a, const std::vector<Column>& g) {
    CoeffMatrix out(a.rows(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (const auto& [k, v] : g[j]) {
            for (std::size_t i = 0; i < a.rows(); ++i) {
                const SurdSum& x = a.at(i, k);
                if (!x.is_zero()) out.at(i, j).add_scaled(x, v);
            }
        }
    }
    return out;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

// Isotypic projectors of S_size acting through gens (gens[k-1] for (k, k+1)).
// Group elements are visited in SJT order and summed per conjugacy class.
std::map<YoungDiagram, CoeffMatrix> class_sum_projectors(const std::vector<CoeffMatrix>& gens, std::size_t dim,
                                                         int size) {
    std::map<YoungDiagram, CoeffMatrix> out;
    if (size <= 1) {
        out[YoungDiagram(std::vector<int>(size, 1))] = CoeffMatrix::identity(dim);
        return out;
    }
    std::vector<std::vector<Column>> cols;
    for (const auto& g : gens) cols.push_back(columns_of(g));
    const auto irreps = partitions(size, size);
    std::vector<std::vector<CoeffMatrix>> irrep_gens(irreps.size());
    std::vector<CoeffMatrix> irrep_run;
    for (std::size_t l = 0; l < irreps.size(); ++l) {
        for (int k = 1; k < size; ++k) irrep_gens[l].push_back(yy_matrix(irreps[l], k));
        irrep_run.push_back(CoeffMatrix::identity(static_cast<std::size_t>(irreps[l].dimension())));
    }
    std::map<std::vector<int>, CoeffMatrix> class_sums;
    std::map<std::vector<int>, std::vector<Rational>> class_chars;
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i + 1;
    CoeffMatrix run = CoeffMatrix::identity(dim);
    auto visit = [&] {
        const auto type = cycle_type(perm);
        auto it = class_sums.find(type);
        if (it == class_sums.end()) {
            it = class_sums.emplace(type, CoeffMatrix(dim, dim)).first;
            auto& chars = class_chars[type];
            for (const auto& r : irrep_run) chars.push_back(r.trace().as_rational());
        }
        it->second = it->second + run;
    };
    visit();
    std::int64_t order = 1;
    for (int k : sjt_swaps(size)) {
        std::swap(perm[k - 1], perm[k]);
        run = times_sparse(run, cols[k - 1]);
        for (std::size_t l = 0; l < irreps.size(); ++l) irrep_run[l] = irrep_run[l] * irrep_gens[l][k - 1];
        visit();
        ++order;
    }
    for (std::size_t l = 0; l < irreps.size(); ++l) {
        CoeffMatrix p(dim, dim);
        for (const auto& [type, sum] : class_sums) {
            const Rational chi = class_chars.at(type)[l];
            if (!chi.is_zero()) p = p + SurdSum(chi) * sum;
        }
        out[irreps[l]] = SurdSum(Rational(irreps[l].dimension(), order)) * p;
    }
    return out;
}

void check_split(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    if (!R.contains(rn)) throw InvalidShape(rn.to_string() + " is not contained in " + R.to_string());
    if (rn.size() + rm.size() != R.size()) throw InvalidShape("|r_n| + |r_m| must equal |R|");
}

Eigen::MatrixXd to_eigen(const CoeffMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).to_double();
    }
    return out;
}

}  // namespace

bool FullRep::satisfies_coxeter() const {
    const std::size_t n = generators.size();
    for (std::size_t a = 0; a < n; ++a) {
        const auto& g = generators[a];
        if (!g.is_symmetric() || !(g * g).is_identity()) return false;
        if (a + 1 < n && !(g * generators[a + 1] * g == generators[a + 1] * g * generators[a + 1])) return false;
        for (std::size_t b = a + 2; b < n; ++b) {
            if (!(g * generators[b] == generators[b] * g)) return false;
        }
    }
    return true;
}

FullRep build_full_rep(const YoungDiagram& shape, std::uint64_t max_work) {
    const int N = shape.size();
    if (N > 8) throw BudgetExceeded("full representations are limited to N <= 8");
    std::uint64_t work = static_cast<std::uint64_t>(shape.dimension()) * static_cast<std::uint64_t>(shape.dimension());
    for (int i = 2; i <= N; ++i) work *= static_cast<std::uint64_t>(i);
    if (work > max_work) throw BudgetExceeded("N! d^2 = " + std::to_string(work) + " exceeds the budget");
    FullRep rep{shape, {}};
    for (int k = 1; k < N; ++k) rep.generators.push_back(yy_matrix(shape, k));
    return rep;
}

std::vector<int> sjt_swaps(int n) {
    std::vector<int> out;
    if (n <= 1) return out;
    std::vector<int> perm(n);
    std::vector<int> dir(n + 1, -1);  // indexed by value
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    while (true) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            const int j = i + dir[perm[i]];
            if (j < 0 || j >= n || perm[j] > perm[i]) continue;
            if (best < 0 || perm[i] > perm[best]) best = i;
        }
        if (best < 0) break;
        const int j = best + dir[perm[best]];
        const int v = perm[best];
        std::swap(perm[best], perm[j]);
        out.push_back(std::min(best, j) + 1);
        for (int u = v + 1; u <= n; ++u) dir[u] = -dir[u];
    }
    return out;
}

std::map<YoungDiagram, CoeffMatrix> subgroup_projectors(const FullRep& rep, int first, int size) {
    if (first < 1 || size < 0 || first + size - 1 > rep.N()) throw InvalidQuery("subgroup labels out of range");
    std::vector<CoeffMatrix> gens;
    for (int k = 1; k < size; ++k) gens.push_back(rep.generators[first + k - 2]);
    return class_sum_projectors(gens, rep.dim(), size);
}

CoeffMatrix split_projector_exact(const FullRep& rep, const YoungDiagram& rn, const YoungDiagram& rm) {
    check_split(rep.shape, rn, rm);
    const int n = rn.size();
    auto pn = subgroup_projectors(rep, 1, n);
    auto pm = subgroup_projectors(rep, n + 1, rm.size());
    return pn.at(rn) * pm.at(rm);
}

std::vector<MultiplicityRow> multiplicity_report(const YoungDiagram& R, int m) {
    const int N = R.size();
    if (m < 0 || m > N) throw InvalidQuery("m must lie between 0 and |R|");
    const int n = N - m;
    const FullRep rep = build_full_rep(R);
    const auto pn = subgroup_projectors(rep, 1, n);
    const auto pm = subgroup_projectors(rep, n + 1, m);
    std::map<std::pair<YoungDiagram, YoungDiagram>, std::pair<int, bool>> predicted;
    for (const auto& c : enumerate_split_labels(R, m)) predicted[{c.rn, c.rm}] = {c.multiplicity(), c.separated};
    std::vector<MultiplicityRow> rows;
    for (const auto& [rn, a] : pn) {
        for (const auto& [rm, b] : pm) {
            SurdSum tr;
            for (std::size_t i = 0; i < rep.dim(); ++i) {
                for (std::size_t j = 0; j < rep.dim(); ++j) {
                    if (!a.at(i, j).is_zero() && !b.at(j, i).is_zero()) tr += a.at(i, j) * b.at(j, i);
                }
            }
            const Rational rank = tr.as_rational();
            auto it = predicted.find({rn, rm});
            if (rank.is_zero() && it == predicted.end()) continue;
            if (!rank.is_integer()) throw std::logic_error("projector trace is not an integer");
            MultiplicityRow row{rn, rm, rank.num(), 0, 0, false};
            const std::int64_t block = rn.dimension() * rm.dimension();
            row.oracle_multiplicity = rank.num() / block;
            if (rank.num() % block != 0) throw std::logic_error("rank is not a multiple of d_rn d_rm");
            if (it != predicted.end()) {
                row.predicted = it->second.first;
                row.separated = it->second.second;
            } else {
                row.separated = true;
                for (int i = 0; i + 1 < R.num_rows(); ++i) {
                    if (rn.row(i) < R.row(i + 1)) row.separated = false;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

int SkewRep::content(std::size_t filling, int label) const {
    const auto& rows = fillings.at(filling);
    const int r = rows.at(label - 1);
    int col = inner.row(r);
    for (int l = 1; l < label; ++l) {
        if (rows[l - 1] == r) ++col;
    }
    return col - r;
}

std::size_t SkewRep::index_of(const std::vector<int>& rows) const {
    auto it = std::lower_bound(fillings.begin(), fillings.end(), rows);
    if (it == fillings.end() || *it != rows) throw InvalidQuery("not a standard filling of the skew shape");
    return static_cast<std::size_t>(it - fillings.begin());
}

SkewRep build_skew_rep(const YoungDiagram& outer, const YoungDiagram& inner) {
    if (!outer.contains(inner)) throw InvalidShape(inner.to_string() + " is not contained in " + outer.to_string());
    SkewRep rep{outer, inner, {}, {}};
    const int m = outer.size() - inner.size();
    std::vector<int> cur;
    auto grow = [&](auto&& self, const YoungDiagram& shape) -> void {
        if (static_cast<int>(cur.size()) == m) {
            rep.fillings.push_back(cur);
            return;
        }
        for (int r = 0; r <= shape.num_rows(); ++r) {
            auto next = shape.add_box(r);
            if (!next || !outer.contains(*next)) continue;
            cur.push_back(r);
            self(self, *next);
            cur.pop_back();
        }
    };
    grow(grow, inner);
    std::sort(rep.fillings.begin(), rep.fillings.end());
    const std::size_t dim = rep.fillings.size();
    for (int k = 1; k < m; ++k) {
        CoeffMatrix g(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const int rho = rep.content(j, k + 1) - rep.content(j, k);
            g.at(j, j) = SurdSum(Rational(1, rho));
            if (rho == 1 || rho == -1) continue;
            auto swapped = rep.fillings[j];
            std::swap(swapped[k - 1], swapped[k]);
            g.at(rep.index_of(swapped), j) = surd_sqrt(Rational(1) - Rational(1, std::int64_t{rho} * rho));
        }
        rep.generators.push_back(std::move(g));
    }
    return rep;
}

CoeffMatrix skew_isotypic_projector(const SkewRep& rep, const YoungDiagram& rm) {
    const int m = rep.outer.size() - rep.inner.size();
    if (rm.size() != m) throw InvalidShape("r_m must have " + std::to_string(m) + " boxes");
    auto all = class_sum_projectors(rep.generators, rep.fillings.size(), m);
    return all.at(rm);
}

Rational exact_restricted_trace(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    check_split(R, rn, rm);
    if (rn.size() == 0 || rm.size() == 0) throw InvalidQuery("the straddling trace needs n >= 1 and m >= 1");
    const SkewRep skew = build_skew_rep(R, rn);
    const CoeffMatrix p = skew_isotypic_projector(skew, rm);
    SurdSum total;
    for (int rho = 0; rho < rn.num_rows(); ++rho) {
        auto smaller = rn.remove_box(rho);
        if (!smaller) continue;
        const int cn = rn.row(rho) - 1 - rho;
        const Rational weight(smaller->dimension());
        for (std::size_t w = 0; w < skew.fillings.size(); ++w) {
            if (p.at(w, w).is_zero()) continue;
            const int gap = skew.content(w, 1) - cn;
            total += p.at(w, w) * SurdSum(weight / Rational(gap));
        }
    }
    return total.as_rational();
}

double isotypic_angle(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    check_split(R, rn, rm);
    const int m = rm.size();
    const SkewRep skew = build_skew_rep(R, rn);
    const Eigen::MatrixXd pa = to_eigen(skew_isotypic_projector(skew, rm));
    const CoeffMatrix t = transformation_matrix(R, m, rn);
    const auto rows = sector_rows(R, rn);
    const int p = std::max(R.num_rows(), 1);
    std::vector<int> occ(p, 0);
    for (int i = 0; i < p; ++i) occ[i] = R.row(i) - rn.row(i);
    const auto words = slot_words(occ);
    const std::size_t dim = skew.fillings.size();
    std::vector<Eigen::VectorXd> states;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rm != rm) continue;
        Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        for (std::size_t w = 0; w < words.size(); ++w) {
            // Slot a_j holds label j of the skew filling.
            std::vector<int> filling(m);
            for (int j = 1; j <= m; ++j) filling[j - 1] = words[w][m - j] - 1;
            v(static_cast<Eigen::Index>(skew.index_of(filling))) = t.at(i, w).to_double();
        }
        states.push_back(v);
    }
    Eigen::MatrixXd pb = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& v : states) pb += v * v.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pa - pb);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

ConvergenceReport convergence_report(const TwoRowFamily& family, ConvergenceQuantity quantity,
                                     const std::vector<int>& dvals) {
    ConvergenceReport report;
    std::vector<int> fit_d;
    std::vector<double> fit_dev;
    for (int d : dvals) {
        TwoRowParams t{family.q2 + d, family.q2, family.n1, family.n2, family.r1, family.r2};
        t.validate();
        ConvergenceRow row;
        row.d = d;
        row.regime_warning = d <= 1 || regime_warning(t.R(), t.m());
        if (quantity == ConvergenceQuantity::Trace) {
            const auto forms = two_row_closed_forms(t);
            row.exact = exact_restricted_trace(t.R(), t.rn(), t.rm());
            row.leading = forms.leading;
            row.exact_matches_closed_form = row.exact == forms.exact;
            const Rational gap = (row.exact - row.leading).abs();
            if (!row.leading.is_zero()) {
                row.deviation = (gap / row.leading.abs()).to_double();
                if (forms.bound) row.within_bound = gap <= *forms.bound * row.leading.abs();
            } else {
                row.deviation = gap.to_double();
                row.within_bound = gap.is_zero();
            }
        } else {
            row.deviation = isotypic_angle(t.R(), t.rn(), t.rm());
        }
        if (row.deviation > 1e-300) {
            fit_d.push_back(d);
            fit_dev.push_back(row.deviation);
        }
        report.rows.push_back(row);
    }
    report.exponent = fit_d.size() >= 2 ? fit_decay_exponent(fit_d, fit_dev) : std::numeric_limits<double>::infinity();
    return report;
}

}  // namespace subduction
