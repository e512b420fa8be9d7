#include "subduction/splitbasis.hpp"

#include <algorithm>
#include <map>

#include "subduction/errors.hpp"

namespace subduction {

namespace {

void removal_vectors(const YoungDiagram& R, int row, int left, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (row == R.num_rows()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (int w = std::min(left, R.row(row)); w >= 0; --w) {
        cur[row] = w;
        removal_vectors(R, row + 1, left - w, cur, out);
    }
}

std::vector<int> removed_counts(const YoungDiagram& R, const YoungDiagram& rn) {
    if (!R.contains(rn)) throw InvalidShape(rn.to_string() + " is not contained in " + R.to_string());
    std::vector<int> w(R.num_rows());
    for (int i = 0; i < R.num_rows(); ++i) w[i] = R.row(i) - rn.row(i);
    return w;
}

bool separated(const YoungDiagram& R, const YoungDiagram& rn) {
    for (int i = 0; i + 1 < R.num_rows(); ++i) {
        if (rn.row(i) < R.row(i + 1)) return false;
    }
    return true;
}

}  // namespace

std::vector<SplitClass> enumerate_split_labels(const YoungDiagram& R, int m) {
    if (m < 0 || m > R.size()) throw InvalidQuery("m must lie between 0 and |R|");
    const int p = std::max(R.num_rows(), 1);
    std::vector<std::vector<int>> removals;
    std::vector<int> cur(R.num_rows(), 0);
    removal_vectors(R, 0, m, cur, removals);
    std::vector<SplitClass> out;
    for (const auto& w : removals) {
        std::vector<int> rows(R.num_rows());
        bool valid = true;
        for (int i = 0; i < R.num_rows(); ++i) {
            rows[i] = R.row(i) - w[i];
            if (i > 0 && rows[i] > rows[i - 1]) valid = false;
        }
        if (!valid) continue;
        YoungDiagram rn(rows);
        std::vector<int> occ = w;
        occ.resize(p, 0);
        std::vector<int> delta(occ.rbegin(), occ.rend());
        for (const auto& rm : partitions(m, p)) {
            SplitClass c{rn, rm, occ, delta, {}, {}, separated(R, rn)};
            const auto& pats = cached_patterns(rm.padded(p));
            for (std::size_t i = 0; i < pats.size(); ++i) {
                if (occupation(pats[i]) == occ) {
                    c.copy_indices.push_back(static_cast<int>(i));
                    c.copies.push_back(pats[i]);
                }
            }
            if (!c.copies.empty()) out.push_back(std::move(c));
        }
    }
    return out;
}

bool regime_warning(const YoungDiagram& R, int m) {
    for (int i = 0; i + 1 < R.num_rows(); ++i) {
        if (R.row(i) - R.row(i + 1) < 2 * m) return true;
    }
    return false;
}

StandardTableau RemovalWord::full_tableau() const {
    std::vector<int> seq = base.row_sequence();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) seq.push_back(*it - 1);
    return StandardTableau::from_row_sequence(seq);
}

RemovalWord RemovalWord::from_tableau(const StandardTableau& t, int n) {
    RemovalWord w{t.restricted(n), {}};
    for (int label = t.size(); label > n; --label) w.rows.push_back(t.row_of(label) + 1);
    return w;
}

SurdSum subduction_coefficient(const RemovalWord& yy, const SplitLabel& split) {
    if (yy.base != split.rn_tableau) return {};
    return composite_cg(split.rm_copy.tableau, split.rm_copy.pattern, yy.rows);
}

std::vector<SlotTerm> split_state_expansion(const SplitLabel& split) {
    return coupled_expansion(split.rm_copy.tableau, split.rm_copy.pattern);
}

TensorSlotState slot_permutation_action(const Permutation& sigma, const TensorSlotState& t) {
    const int m = static_cast<int>(t.size());
    if (sigma.size() != m) throw InvalidQuery("permutation size must equal the number of slots");
    TensorSlotState out(m);
    // Storage index of a_k is m - k.
    for (int k = 1; k <= m; ++k) out[m - sigma(k)] = t[m - k];
    return out;
}

std::vector<SlotTerm> slot_permutation_action(const Permutation& sigma, const std::vector<SlotTerm>& v) {
    std::map<TensorSlotState, SurdSum> acc;
    for (const auto& term : v) acc[slot_permutation_action(sigma, term.slots)] += term.coeff;
    std::vector<SlotTerm> out;
    for (auto& [slots, c] : acc) {
        if (!c.is_zero()) out.push_back({slots, c});
    }
    return out;
}

std::vector<TensorSlotState> slot_words(const std::vector<int>& occupation) {
    TensorSlotState w;
    for (std::size_t a = 0; a < occupation.size(); ++a) w.insert(w.end(), occupation[a], static_cast<int>(a) + 1);
    std::vector<TensorSlotState> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<SplitRow> sector_rows(const YoungDiagram& R, const YoungDiagram& rn) {
    const int p = std::max(R.num_rows(), 1);
    std::vector<int> occ = removed_counts(R, rn);
    occ.resize(p, 0);
    int m = 0;
    for (int x : occ) m += x;
    std::vector<SplitRow> rows;
    for (const auto& rm : partitions(m, p)) {
        const auto& pats = cached_patterns(rm.padded(p));
        const auto tabs = enumerate_standard_tableaux(rm);
        for (std::size_t i = 0; i < pats.size(); ++i) {
            if (occupation(pats[i]) != occ) continue;
            for (const auto& q : tabs) rows.push_back({rm, static_cast<int>(i), pats[i], q});
        }
    }
    return rows;
}

std::string slots_to_string(const TensorSlotState& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

CoeffMatrix transformation_matrix(const YoungDiagram& R, int m, const YoungDiagram& rn) {
    if (R.size() - rn.size() != m) throw InvalidQuery("r_n must have |R| - m boxes");
    if (!separated(R, rn)) {
        throw InvalidQuery("removed boxes of " + R.to_string() + "/" + rn.to_string() +
                           " share a column; the split sector is not square");
    }
    const int p = std::max(R.num_rows(), 1);
    std::vector<int> occ = removed_counts(R, rn);
    occ.resize(p, 0);
    const auto rows = sector_rows(R, rn);
    const auto words = slot_words(occ);
    CoeffMatrix t(rows.size(), words.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) t.at(i, j) = composite_cg(rows[i].q, rows[i].pattern, words[j]);
        t.row_labels().push_back(rows[i].rm.to_string() + " i=" + std::to_string(rows[i].pattern_index) + " " +
                                 rows[i].q.to_string());
    }
    for (const auto& w : words) t.col_labels().push_back(slots_to_string(w));
    return t;
}

}  // namespace subduction
