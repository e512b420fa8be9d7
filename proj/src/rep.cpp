#include "subduction/rep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "subduction/errors.hpp"

namespace subduction {

namespace {

// Every filling carries at least one split state, so `cap` bounds the fillings too.
void active_paths(const YoungDiagram& R, const YoungDiagram& shape, int left, std::vector<int>& rows,
                  std::map<YoungDiagram, std::vector<std::vector<int>>, std::greater<>>& out, std::size_t& count,
                  std::size_t cap) {
    if (left == 0) {
        if (++count > cap) throw BudgetExceeded("sector has more than " + std::to_string(cap) + " states");
        out[shape].push_back(rows);
        return;
    }
    for (int r = 0; r <= shape.num_rows(); ++r) {
        auto next = shape.add_box(r);
        if (!next || !R.contains(*next)) continue;
        rows.push_back(r);
        active_paths(R, *next, left - 1, rows, out, count, cap);
        rows.pop_back();
    }
}

std::vector<int> frozen_rows(const YoungDiagram& frozen) {
    std::vector<int> seq;
    for (int r = 0; r < frozen.num_rows(); ++r) seq.insert(seq.end(), frozen.row(r), r);
    return seq;
}

using Column = std::vector<std::pair<std::size_t, SurdSum>>;

// Nonzeros of each column; column j is the image of basis state j.
std::vector<Column> generator_columns(const SectorBasis& basis, int k);

CoeffMatrix from_columns(const SectorBasis& basis, const std::vector<Column>& cols) {
    CoeffMatrix g(basis.size(), basis.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [i, v] : cols[j]) g.at(i, j) = v;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        g.row_labels().push_back(basis.label(i));
        g.col_labels().push_back(basis.label(i));
    }
    return g;
}

std::size_t require_index(const SectorBasis& basis, const SectorState& s) {
    auto idx = basis.index_of(s);
    if (!idx) throw InvalidQuery("generator leaves the sector; widen the window");
    return *idx;
}

std::vector<Column> generator_columns(const SectorBasis& basis, int k) {
    const Sector& sec = basis.sector();
    const int n = sec.n();
    const int m = sec.m;
    if (k <= sec.f() || k >= sec.N()) {
        throw InvalidQuery("generator (" + std::to_string(k) + "," + std::to_string(k + 1) +
                           ") does not act inside the window");
    }
    const auto& states = basis.states();
    std::vector<Column> cols(states.size());
    if (k == n) {
        for (std::size_t j = 0; j < states.size(); ++j) {
            for (std::size_t i = 0; i < states.size(); ++i) {
                SurdSum v = straddling_element(states[i], states[j], sec.p());
                if (!v.is_zero()) cols[j].emplace_back(i, std::move(v));
            }
        }
        return cols;
    }
    for (std::size_t j = 0; j < states.size(); ++j) {
        const SectorState& ket = states[j];
        if (k < n) {
            for (const auto& term : yy_action_exact(basis.tn_tableau(ket), k)) {
                SectorState img = ket;
                const auto seq = term.tableau.row_sequence();
                img.active_rows.assign(seq.begin() + sec.f(), seq.end());
                cols[j].emplace_back(require_index(basis, img), term.coeff);
            }
        } else {
            for (const auto& term : yy_action_exact(ket.split.q, m - (k - n))) {
                SectorState img = ket;
                img.split.q = term.tableau;
                cols[j].emplace_back(require_index(basis, img), term.coeff);
            }
        }
    }
    return cols;
}

// A * G with G given by sparse columns.
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

using TableauVector = std::map<StandardTableau, SurdSum>;

// Gamma(s_{k_1}) ... Gamma(s_{k_L}) applied to a single tableau.
TableauVector apply_word(const std::vector<int>& word, const StandardTableau& t) {
    TableauVector v{{t, SurdSum(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        TableauVector next;
        for (const auto& [tab, c] : v) {
            for (const auto& term : yy_action_exact(tab, *it)) next[term.tableau].add_scaled(term.coeff, c);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        v = std::move(next);
    }
    return v;
}

// Tableau whose restriction is `base` and whose last label sits in the row
// that grows base's shape into `target`.
std::optional<StandardTableau> extend_to(const StandardTableau& base, const YoungDiagram& target) {
    for (int r = 0; r <= base.shape().num_rows(); ++r) {
        auto grown = base.shape().add_box(r);
        if (grown && *grown == target) {
            auto seq = base.row_sequence();
            seq.push_back(r);
            return StandardTableau::from_row_sequence(seq);
        }
    }
    return std::nullopt;
}

SurdSum cg_overlap(const YoungDiagram& parent_shape, int p, int a_left, const GTPattern& left, int a_right,
                   const GTPattern& right) {
    SurdSum s;
    for (const auto& mp : cached_patterns(parent_shape.padded(p))) {
        SurdSum x = fundamental_cg(mp, a_left, left);
        if (x.is_zero()) continue;
        SurdSum y = fundamental_cg(mp, a_right, right);
        if (!y.is_zero()) s += x * y;
    }
    return s;
}

void check_same_size(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    if (!R.contains(rn)) throw InvalidShape(rn.to_string() + " is not contained in " + R.to_string());
    if (rn.size() + rm.size() != R.size()) throw InvalidShape("|r_n| + |r_m| must equal |R|");
    if (rm.size() == 0 || rn.size() == 0) throw InvalidQuery("the straddling trace needs n >= 1 and m >= 1");
}

// Shared body of the three trace routes; `tn_count(rho)` gives the weight of
// t_n tableaux with box n in row rho; enumerate_q walks r_m tableaux one by one.
template <class Weight>
Rational trace_sum(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm, Weight tn_count,
                   bool enumerate_q) {
    check_same_size(R, rn, rm);
    const int p = std::max(R.num_rows(), 1);
    std::vector<int> occ(p, 0);
    for (int i = 0; i < p; ++i) occ[i] = R.row(i) - rn.row(i);
    // lambda' with its multiplicity among r_m tableaux.
    std::map<YoungDiagram, Rational> parents;
    if (enumerate_q) {
        const int m = rm.size();
        for (const auto& q : enumerate_standard_tableaux(rm)) parents[q.restricted(m - 1).shape()] += Rational(1);
    } else {
        for (int r = 0; r < rm.num_rows(); ++r) {
            if (auto lp = rm.remove_box(r)) parents[*lp] = Rational(lp->dimension());
        }
    }
    Rational total;
    for (const auto& mm : cached_patterns(rm.padded(p))) {
        if (occupation(mm) != occ) continue;
        for (int rho = 1; rho <= p; ++rho) {
            const Rational w = tn_count(rho);
            if (w.is_zero()) continue;
            for (const auto& [lp, count] : parents) {
                for (const auto& mp : cached_patterns(lp.padded(p))) {
                    SurdSum c = fundamental_cg(mp, rho, mm);
                    if (!c.is_zero()) total += w * count * (c * c).as_rational();
                }
            }
        }
    }
    return total;
}

}  // namespace

SectorBasis SectorBasis::build(const Sector& sector, const Budget& budget) {
    const int n = sector.n();
    if (sector.m < 0 || n < 0) throw InvalidQuery("m must lie between 0 and |R|");
    if (!sector.R.contains(sector.frozen)) throw InvalidShape("frozen shape must lie inside R");
    if (sector.f() > n) throw InvalidQuery("frozen part must have at most n boxes");
    SectorBasis basis;
    basis.sector_ = sector;
    std::map<YoungDiagram, std::vector<std::vector<int>>, std::greater<>> fillings;
    std::vector<int> rows;
    std::size_t count = 0;
    active_paths(sector.R, sector.frozen, n - sector.f(), rows, fillings, count, budget.max_states);
    for (auto& [rn, list] : fillings) {
        std::sort(list.begin(), list.end());
        const auto split_rows = sector_rows(sector.R, rn);
        if (basis.states_.size() + list.size() * split_rows.size() > budget.max_states) {
            throw BudgetExceeded("sector has more than " + std::to_string(budget.max_states) + " states");
        }
        for (const auto& active : list) {
            for (const auto& sr : split_rows) basis.states_.push_back({rn, active, sr});
        }
    }
    for (std::size_t i = 0; i < basis.states_.size(); ++i) {
        const auto& s = basis.states_[i];
        basis.index_[{s.rn.rows(), s.active_rows, s.split.pattern_index, s.split.q.rows()}] = i;
    }
    return basis;
}

std::optional<std::size_t> SectorBasis::index_of(const SectorState& s) const {
    auto it = index_.find({s.rn.rows(), s.active_rows, s.split.pattern_index, s.split.q.rows()});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

StandardTableau SectorBasis::tn_tableau(const SectorState& s) const {
    auto seq = frozen_rows(sector_.frozen);
    seq.insert(seq.end(), s.active_rows.begin(), s.active_rows.end());
    return StandardTableau::from_row_sequence(seq);
}

std::string SectorBasis::label(std::size_t i) const {
    const auto& s = states_.at(i);
    return "t=" + tn_tableau(s).to_string() + " rm=" + s.split.rm.to_string() +
           " i=" + std::to_string(s.split.pattern_index) + " Q=" + s.split.q.to_string();
}

SurdSum nonstraddling_matrix_element(const SectorBasis& basis, const SectorState& bra, const SectorState& ket, int k) {
    if (k == basis.sector().n()) throw InvalidQuery("(n, n+1) straddles; use straddling_element");
    auto bi = require_index(basis, bra);
    auto kj = require_index(basis, ket);
    for (const auto& [i, v] : generator_columns(basis, k)[kj]) {
        if (i == bi) return v;
    }
    return {};
}

SurdSum straddling_element(const SectorState& bra, const SectorState& ket, int p) {
    if (bra.active_rows.empty() || ket.active_rows.empty()) {
        throw InvalidQuery("label n is frozen; the straddling element needs f <= n - 1");
    }
    const int m = ket.split.q.size();
    if (m == 0) throw InvalidQuery("the straddling element needs m >= 1");
    if (!std::equal(bra.active_rows.begin(), bra.active_rows.end() - 1, ket.active_rows.begin(),
                    ket.active_rows.end() - 1) ||
        bra.active_rows.size() != ket.active_rows.size()) {
        return {};
    }
    const StandardTableau qp = bra.split.q.restricted(m - 1);
    if (qp != ket.split.q.restricted(m - 1)) return {};
    return cg_overlap(qp.shape(), p, ket.straddle_row(), bra.split.pattern, bra.straddle_row(), ket.split.pattern);
}

CoeffMatrix generator_matrix(const SectorBasis& basis, int k) { return from_columns(basis, generator_columns(basis, k)); }

CoeffMatrix straddling_block(const SectorBasis& basis) { return generator_matrix(basis, basis.sector().n()); }

CoeffMatrix element_matrix(const SectorBasis& basis, const Permutation& sigma, const Budget& budget) {
    const Sector& sec = basis.sector();
    if (sigma.size() != sec.N()) throw InvalidQuery("permutation must act on 1.." + std::to_string(sec.N()));
    for (int i = 1; i <= sec.f(); ++i) {
        if (sigma(i) != i) throw InvalidQuery("permutation moves frozen label " + std::to_string(i));
    }
    const auto word = permutation_to_adjacent_word(sigma);
    if (word.size() > budget.max_word_length) throw BudgetExceeded("adjacent word is too long");
    std::map<int, std::vector<Column>> gens;
    CoeffMatrix out = CoeffMatrix::identity(basis.size());
    for (int k : word) {
        auto it = gens.find(k);
        if (it == gens.end()) it = gens.emplace(k, generator_columns(basis, k)).first;
        out = times_sparse(out, it->second);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out.row_labels().push_back(basis.label(i));
        out.col_labels().push_back(basis.label(i));
    }
    return out;
}

CoeffMatrix straddle_closed_form(const SectorBasis& basis, const Permutation& alpha, const Permutation& beta) {
    const Sector& sec = basis.sector();
    const int n = sec.n();
    const int N = sec.N();
    const int m = sec.m;
    if (alpha.size() != N || beta.size() != N) throw InvalidQuery("permutations must act on 1.." + std::to_string(N));
    for (int i = 1; i <= N; ++i) {
        const bool in_window = i > sec.f() && i <= n;
        if (!in_window && alpha(i) != i) throw InvalidQuery("alpha must move only labels f+1..n");
        if (i <= n && beta(i) != i) throw InvalidQuery("beta must move only labels n+1..N");
    }
    if (m == 0 || sec.f() >= n) throw InvalidQuery("the closed form needs m >= 1 and f <= n - 1");
    const auto alpha_word = permutation_to_adjacent_word(alpha);
    // beta on r_m tableaux: standard label n+j is tableau label m+1-j.
    std::vector<int> qimg(m);
    for (int q = 1; q <= m; ++q) qimg[q - 1] = N + 1 - beta(N + 1 - q);
    const auto beta_word = permutation_to_adjacent_word(Permutation(qimg));

    std::map<StandardTableau, TableauVector> alpha_cache;
    std::map<StandardTableau, TableauVector> beta_cache;
    const auto& states = basis.states();
    CoeffMatrix out(states.size(), states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const SectorState& bra = states[i];
        const StandardTableau c = basis.tn_tableau(bra);
        const StandardTableau d1 = bra.split.q.restricted(m - 1);
        for (std::size_t j = 0; j < states.size(); ++j) {
            const SectorState& ket = states[j];
            const StandardTableau a = basis.tn_tableau(ket);
            auto a_star = extend_to(a.restricted(n - 1), bra.rn);
            auto d_star = extend_to(d1, ket.split.rm);
            if (!a_star || !d_star) continue;
            auto ai = alpha_cache.find(*a_star);
            if (ai == alpha_cache.end()) ai = alpha_cache.emplace(*a_star, apply_word(alpha_word, *a_star)).first;
            auto ca = ai->second.find(c);
            if (ca == ai->second.end()) continue;
            auto bi = beta_cache.find(ket.split.q);
            if (bi == beta_cache.end()) bi = beta_cache.emplace(ket.split.q, apply_word(beta_word, ket.split.q)).first;
            auto db = bi->second.find(*d_star);
            if (db == bi->second.end()) continue;
            const int rho_a = ket.straddle_row();
            const int rho_star = a_star->row_of(n) + 1;
            SurdSum s = cg_overlap(d1.shape(), sec.p(), rho_a, bra.split.pattern, rho_star, ket.split.pattern);
            if (s.is_zero()) continue;
            out.at(i, j) = ca->second * db->second * s;
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out.row_labels().push_back(basis.label(i));
        out.col_labels().push_back(basis.label(i));
    }
    return out;
}

Rational restricted_trace_straddling(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    return trace_sum(
        R, rn, rm, [&](int rho) {
            auto smaller = rn.remove_box(rho - 1);
            return smaller ? Rational(smaller->dimension()) : Rational(0);
        }, false);
}

Rational restricted_trace_by_tableaux(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    return trace_sum(
        R, rn, rm, [&](int rho) {
            auto smaller = rn.remove_box(rho - 1);
            return smaller ? Rational(count_tableaux(*smaller)) : Rational(0);
        }, true);
}

Rational restricted_trace_leading(const YoungDiagram& R, const YoungDiagram& rn, const YoungDiagram& rm) {
    const Rational dn(rn.dimension());
    return trace_sum(
        R, rn, rm, [&](int rho) { return dn * Rational(rn.row(rho - 1), rn.size()); }, false);
}

void TwoRowParams::validate() const {
    if (q2 < 0 || q1 < q2) throw InvalidShape("need q1 >= q2 >= 0");
    if (n() < 1) throw InvalidShape("r_n must have at least one box");
    if (n1 < 0 || n2 < 0 || m() < 1) throw InvalidQuery("need n1, n2 >= 0 and m >= 1");
    if (r2 < 0 || r1 < r2 || r1 + r2 != m()) throw InvalidShape("r_m must be a partition of m = n1 + n2");
    if (q2 + n2 > q1 + n1) throw InvalidShape("R = [q1+n1, q2+n2] is not a partition");
    if (n1 > r1 || n1 < r2) throw InvalidQuery("r_m does not occur with occupation (n1, n2)");
}

int lambda_pairs(const YoungDiagram& shape) {
    int s = 0;
    for (int r : shape.rows()) s += r * (r - 1) / 2;
    for (int c = 0; c < shape.row(0); ++c) {
        int h = 0;
        while (shape.row(h) > c) ++h;
        s -= h * (h - 1) / 2;
    }
    return s;
}

TwoRowForms two_row_closed_forms(const TwoRowParams& p) {
    p.validate();
    const int m = p.m();
    const int n = p.n();
    const Rational pref = Rational(p.rn().dimension()) * Rational(p.rm().dimension()) / Rational(std::int64_t{m} * n);
    const Rational linear(std::int64_t{p.n1} * p.q1 + std::int64_t{p.n2} * p.q2);
    const Rational pairs(p.n1 * (p.n1 - 1) / 2 + p.n2 * (p.n2 - 1) / 2);
    TwoRowForms f;
    f.lambda_m = lambda_pairs(p.rm());
    f.leading = pref * linear;
    f.exact_as_printed = pref * (linear + pairs - Rational(f.lambda_m));
    f.exact = pref * (linear + pairs - Rational(f.lambda_m) - Rational(p.n2));
    const std::int64_t denom = 2 * (std::int64_t{p.n1} * p.d() + std::int64_t{m} * p.q2);
    if (denom != 0) f.bound = Rational(std::int64_t{m} * m + m, denom);
    return f;
}

std::int64_t count_tableaux(const YoungDiagram& shape) {
    static std::mutex mu;
    static std::map<YoungDiagram, std::int64_t> memo;
    if (shape.empty()) return 1;
    {
        std::lock_guard lock(mu);
        auto it = memo.find(shape);
        if (it != memo.end()) return it->second;
    }
    std::int64_t total = 0;
    for (int r = 0; r < shape.num_rows(); ++r) {
        if (auto smaller = shape.remove_box(r)) total += count_tableaux(*smaller);
    }
    std::lock_guard lock(mu);
    memo.emplace(shape, total);
    return total;
}

}  // namespace subduction
