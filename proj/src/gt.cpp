#include "subduction/gt.hpp"

#include <algorithm>

#include <json.hpp>

#include "subduction/errors.hpp"

namespace subduction {

bool satisfies_betweenness(const std::vector<std::vector<int>>& rows) {
    const int p = static_cast<int>(rows.size());
    for (int t = 0; t < p; ++t) {
        if (static_cast<int>(rows[t].size()) != p - t) return false;
        for (int x : rows[t]) {
            if (x < 0) return false;
        }
    }
    for (int t = 0; t + 1 < p; ++t) {
        for (int k = 0; k + 1 < static_cast<int>(rows[t].size()); ++k) {
            if (!(rows[t][k] >= rows[t + 1][k] && rows[t + 1][k] >= rows[t][k + 1])) return false;
        }
    }
    return true;
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidShape("pattern needs at least one row");
    if (!satisfies_betweenness(rows_)) throw InvalidShape("pattern violates betweenness: " + to_string());
}

int GTPattern::level_sum(int l) const {
    if (l == 0) return 0;
    int s = 0;
    for (int x : level(l)) s += x;
    return s;
}

std::string GTPattern::to_string() const { return nlohmann::json(rows_).dump(); }

GTPattern GTPattern::parse(std::string_view text) {
    try {
        return GTPattern(nlohmann::json::parse(text).get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidShape("cannot parse pattern '" + std::string(text) + "': " + e.what());
    }
}

namespace {

void enumerate_below(std::vector<std::vector<int>>& rows, std::vector<GTPattern>& out) {
    const std::vector<int> upper = rows.back();
    if (upper.size() == 1) {
        out.emplace_back(rows);
        return;
    }
    const std::size_t len = upper.size() - 1;
    std::vector<int> next(len);
    // Odometer over next[k] in [upper[k+1], upper[k]], most significant first,
    // counting down so the result is in descending lexicographic order.
    for (std::size_t k = 0; k < len; ++k) next[k] = upper[k];
    while (true) {
        rows.push_back(next);
        enumerate_below(rows, out);
        rows.pop_back();
        std::size_t k = len;
        while (k > 0) {
            --k;
            if (next[k] > upper[k + 1]) {
                --next[k];
                for (std::size_t j = k + 1; j < len; ++j) next[j] = upper[j];
                break;
            }
            if (k == 0) return;
        }
    }
}

}  // namespace

std::vector<GTPattern> enumerate_gt_patterns(const std::vector<int>& weight) {
    if (weight.empty()) throw InvalidShape("weight must have at least one entry");
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (weight[i] < 0 || (i > 0 && weight[i] > weight[i - 1])) {
            throw InvalidShape("weight must be non-increasing and non-negative");
        }
    }
    std::vector<GTPattern> out;
    std::vector<std::vector<int>> rows{weight};
    enumerate_below(rows, out);
    return out;
}

std::vector<int> occupation(const GTPattern& m) {
    std::vector<int> w(m.p());
    for (int l = 1; l <= m.p(); ++l) w[l - 1] = m.level_sum(l) - m.level_sum(l - 1);
    return w;
}

std::vector<int> delta_weight(const GTPattern& m) {
    std::vector<int> w = occupation(m);
    std::reverse(w.begin(), w.end());
    return w;
}

int inner_multiplicity(const std::vector<int>& weight, const std::vector<int>& delta) {
    int count = 0;
    for (const auto& m : enumerate_gt_patterns(weight)) {
        if (delta_weight(m) == delta) ++count;
    }
    return count;
}

long dim_unitary(const std::vector<int>& weight) { return static_cast<long>(enumerate_gt_patterns(weight).size()); }

long weyl_dimension(const std::vector<int>& weight) {
    const int p = static_cast<int>(weight.size());
    Rational d(1);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) d *= Rational(weight[i] - weight[j] + j - i, j - i);
    }
    return static_cast<long>(d.num());
}

std::vector<YoungDiagram> tableau_to_removal_chain(const StandardTableau& t) {
    std::vector<YoungDiagram> chain;
    for (int k = 1; k <= t.size(); ++k) chain.push_back(t.restricted(k).shape());
    return chain;
}

GTPattern fundamental_pattern(int p, int a) {
    if (a < 1 || a > p) throw InvalidQuery("fundamental index out of range");
    std::vector<std::vector<int>> rows;
    for (int l = p; l >= 1; --l) {
        std::vector<int> row(l, 0);
        if (l >= a) row[0] = 1;
        rows.push_back(row);
    }
    return GTPattern(std::move(rows));
}

CopyLabel CopyLabel::make(const StandardTableau& t, int pattern_index, int p) {
    auto patterns = enumerate_gt_patterns(t.shape().padded(p));
    if (pattern_index < 0 || pattern_index >= static_cast<int>(patterns.size())) {
        throw InvalidQuery("pattern index out of range");
    }
    return CopyLabel{t, pattern_index, patterns[pattern_index]};
}

}  // namespace subduction
