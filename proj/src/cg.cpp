#include "subduction/cg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "subduction/errors.hpp"

namespace subduction {

namespace {

// Read-mostly memo table. Values are never erased, so references handed out
// stay valid for the lifetime of the process.
template <class Key, class Value>
class Memo {
public:
    template <class F>
    const Value& get(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> table_;
};

std::vector<Rational> shifted(const std::vector<int>& row) {
    std::vector<Rational> l;
    for (std::size_t s = 0; s < row.size(); ++s) l.emplace_back(row[s] - static_cast<int>(s) - 1);
    return l;
}

}  // namespace

SurdSum scalar_factor(const ScalarFactorQuery& q) {
    const int p = static_cast<int>(q.upper.size());
    if (static_cast<int>(q.lower.size()) != p - 1) throw InvalidQuery("lower row must be one shorter than upper row");
    if (q.i < 1 || q.i > p) throw InvalidQuery("upper index out of range");
    const auto l = shifted(q.upper);
    const auto L = shifted(q.lower);
    const int i = q.i - 1;
    Rational num(1);
    Rational den(1);
    int sign = 1;
    if (q.j) {
        const int j = *q.j - 1;
        if (j < 0 || j >= p - 1) throw InvalidQuery("lower index out of range");
        for (int k = 0; k < p - 1; ++k) {
            if (k == j) continue;
            num *= L[k] - l[i] - Rational(1);
            den *= L[k] - L[j] - Rational(1);
        }
        for (int k = 0; k < p; ++k) {
            if (k == i) continue;
            num *= l[k] - L[j];
            den *= l[k] - l[i];
        }
        sign = i <= j ? 1 : -1;
    } else {
        for (int k = 0; k < p - 1; ++k) num *= L[k] - l[i] - Rational(1);
        for (int k = 0; k < p; ++k) {
            if (k != i) den *= l[k] - l[i];
        }
    }
    if (den.is_zero()) throw InvalidQuery("scalar factor denominator vanishes");
    return SurdSum(Rational(sign)) * surd_sqrt((num / den).abs());
}

namespace {

SurdSum fundamental_cg_uncached(const GTPattern& parent, int a, const GTPattern& child) {
    const int p = parent.p();
    if (child.p() != p || a < 1 || a > p) throw InvalidQuery("pattern sizes do not match");
    auto occ = occupation(parent);
    occ[a - 1] += 1;
    if (occ != occupation(child)) return {};
    int sign = 1;
    Rational sq(1);
    for (int t = 0; t < p; ++t) {
        const int size = p - t;
        const auto& up = parent.rows()[t];
        std::vector<int> diff(size);
        int total = 0;
        for (int k = 0; k < size; ++k) {
            diff[k] = child.rows()[t][k] - up[k];
            total += diff[k];
        }
        if (total == 0) {
            if (std::any_of(diff.begin(), diff.end(), [](int x) { return x != 0; })) return {};
            continue;
        }
        if (total != 1 || *std::min_element(diff.begin(), diff.end()) < 0) return {};
        const int i = static_cast<int>(std::find(diff.begin(), diff.end(), 1) - diff.begin());
        if (size == 1) break;
        const auto& low = parent.rows()[t + 1];
        std::vector<int> ldiff(size - 1);
        for (int k = 0; k < size - 1; ++k) ldiff[k] = child.rows()[t + 1][k] - low[k];
        if (size - 1 >= a) {
            int lt = 0;
            for (int x : ldiff) lt += x;
            if (lt != 1 || *std::min_element(ldiff.begin(), ldiff.end()) < 0) return {};
            const int j = static_cast<int>(std::find(ldiff.begin(), ldiff.end(), 1) - ldiff.begin());
            SurdSum f = scalar_factor({up, low, i + 1, j + 1});
            if (f.is_zero()) return {};
            sign *= f.terms().front().coeff.sign();
            sq *= (f * f).as_rational();
        } else {
            if (std::any_of(ldiff.begin(), ldiff.end(), [](int x) { return x != 0; })) return {};
            for (int u = t + 2; u < p; ++u) {
                if (child.rows()[u] != parent.rows()[u]) return {};
            }
            SurdSum f = scalar_factor({up, low, i + 1, std::nullopt});
            sq *= (f * f).as_rational();
            break;
        }
    }
    return SurdSum(Rational(sign)) * surd_sqrt(sq);
}

Memo<std::tuple<GTPattern, int, GTPattern>, SurdSum>& fundamental_memo() {
    static Memo<std::tuple<GTPattern, int, GTPattern>, SurdSum> memo;
    return memo;
}

Memo<std::vector<int>, std::vector<GTPattern>>& pattern_memo() {
    static Memo<std::vector<int>, std::vector<GTPattern>> memo;
    return memo;
}

Memo<std::pair<StandardTableau, GTPattern>, std::vector<SlotTerm>>& expansion_memo() {
    static Memo<std::pair<StandardTableau, GTPattern>, std::vector<SlotTerm>> memo;
    return memo;
}

}  // namespace

SurdSum fundamental_cg(const GTPattern& parent, int a, const GTPattern& child) {
    return fundamental_memo().get({parent, a, child}, [&] { return fundamental_cg_uncached(parent, a, child); });
}

SurdSum fundamental_cg(const CopyLabel& parent, int a, const CopyLabel& child) {
    const int m = child.tableau.size();
    if (parent.tableau.size() != m - 1 || child.tableau.restricted(m - 1) != parent.tableau) return {};
    return fundamental_cg(parent.pattern, a, child.pattern);
}

const std::vector<GTPattern>& cached_patterns(const std::vector<int>& weight) {
    return pattern_memo().get(weight, [&] { return enumerate_gt_patterns(weight); });
}

namespace {

std::vector<SlotTerm> expand(const StandardTableau& s, const GTPattern& m) {
    const int p = m.p();
    const int size = s.size();
    if (m.top() != s.shape().padded(p)) throw InvalidQuery("pattern top row does not match the tableau shape");
    std::map<std::vector<int>, SurdSum> acc;
    if (size == 0) {
        acc[{}] = SurdSum(1);
    } else if (size == 1) {
        for (int a = 1; a <= p; ++a) {
            if (fundamental_pattern(p, a) == m) acc[{a}] = SurdSum(1);
        }
    } else {
        const StandardTableau parent = s.restricted(size - 1);
        const auto occ = occupation(m);
        for (int a = 1; a <= p; ++a) {
            if (occ[a - 1] == 0) continue;
            auto pocc = occ;
            pocc[a - 1] -= 1;
            for (const auto& pm : cached_patterns(parent.shape().padded(p))) {
                if (occupation(pm) != pocc) continue;
                SurdSum c = fundamental_cg(pm, a, m);
                if (c.is_zero()) continue;
                for (const auto& term : coupled_expansion(parent, pm)) {
                    auto slots = term.slots;
                    slots.push_back(a);
                    acc[slots].add_scaled(term.coeff, c);
                }
            }
        }
    }
    std::vector<SlotTerm> out;
    for (auto& [slots, c] : acc) {
        if (!c.is_zero()) out.push_back({slots, c});
    }
    return out;
}

}  // namespace

const std::vector<SlotTerm>& coupled_expansion(const StandardTableau& s, const GTPattern& m) {
    return expansion_memo().get({s, m}, [&] { return expand(s, m); });
}

SurdSum composite_cg(const StandardTableau& s, const GTPattern& m, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != s.size()) throw InvalidQuery("slot vector length must equal the tableau size");
    const auto& terms = coupled_expansion(s, m);
    auto it = std::lower_bound(terms.begin(), terms.end(), a,
                               [](const SlotTerm& t, const std::vector<int>& key) { return t.slots < key; });
    if (it != terms.end() && it->slots == a) return it->coeff;
    return {};
}

SurdSum composite_cg(const StandardTableau& s, int pattern_index, const std::vector<int>& a, int p) {
    return composite_cg(s, CopyLabel::make(s, pattern_index, p).pattern, a);
}

}  // namespace subduction
