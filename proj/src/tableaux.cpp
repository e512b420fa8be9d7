#include "subduction/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "subduction/errors.hpp"

namespace subduction {

YoungDiagram::YoungDiagram(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw InvalidShape("partition rows must be positive");
        if (i > 0 && rows[i] > rows[i - 1]) throw InvalidShape("partition rows must be non-increasing");
    }
    rows_ = std::move(rows);
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool YoungDiagram::contains(const YoungDiagram& other) const {
    if (other.num_rows() > num_rows()) return false;
    for (int i = 0; i < other.num_rows(); ++i) {
        if (other.row(i) > row(i)) return false;
    }
    return true;
}

std::optional<YoungDiagram> YoungDiagram::add_box(int r) const {
    if (r < 0 || r > num_rows()) return std::nullopt;
    if (r > 0 && row(r) + 1 > row(r - 1)) return std::nullopt;
    std::vector<int> rows = rows_;
    if (r == num_rows()) {
        rows.push_back(1);
    } else {
        ++rows[r];
    }
    return YoungDiagram(std::move(rows));
}

std::optional<YoungDiagram> YoungDiagram::remove_box(int r) const {
    if (r < 0 || r >= num_rows()) return std::nullopt;
    if (row(r) - 1 < row(r + 1)) return std::nullopt;
    std::vector<int> rows = rows_;
    --rows[r];
    return YoungDiagram(std::move(rows));
}

std::vector<int> YoungDiagram::padded(int p) const {
    if (num_rows() > p) throw InvalidShape("diagram " + to_string() + " has more than " + std::to_string(p) + " rows");
    std::vector<int> out = rows_;
    out.resize(p, 0);
    return out;
}

std::uint64_t YoungDiagram::hooks_product() const {
    std::uint64_t prod = 1;
    for (int i = 0; i < num_rows(); ++i) {
        for (int j = 0; j < row(i); ++j) {
            int arm = row(i) - j - 1;
            int leg = 0;
            for (int k = i + 1; k < num_rows() && row(k) > j; ++k) ++leg;
            std::uint64_t h = static_cast<std::uint64_t>(arm + leg + 1);
            if (__builtin_mul_overflow(prod, h, &prod)) throw std::overflow_error("hook product overflow");
        }
    }
    return prod;
}

namespace {

void add_prime_exponents(int n, int sign, std::vector<int>& exps) {
    for (int p = 2; n > 1; ++p) {
        while (n % p == 0) {
            exps[p] += sign;
            n /= p;
        }
    }
}

}  // namespace

std::int64_t YoungDiagram::dimension() const {
    const int n = size();
    std::vector<int> exps(n + 2, 0);
    for (int k = 2; k <= n; ++k) add_prime_exponents(k, 1, exps);
    for (int i = 0; i < num_rows(); ++i) {
        for (int j = 0; j < row(i); ++j) {
            int leg = 0;
            for (int k = i + 1; k < num_rows() && row(k) > j; ++k) ++leg;
            add_prime_exponents(row(i) - j + leg, -1, exps);
        }
    }
    std::int64_t d = 1;
    for (int p = 2; p < static_cast<int>(exps.size()); ++p) {
        for (int e = 0; e < exps[p]; ++e) {
            if (__builtin_mul_overflow(d, static_cast<std::int64_t>(p), &d)) {
                throw std::overflow_error("dimension overflow for " + to_string());
            }
        }
    }
    return d;
}

std::string YoungDiagram::to_string() const { return nlohmann::json(rows_).dump(); }

YoungDiagram YoungDiagram::parse(std::string_view text) {
    try {
        return YoungDiagram(nlohmann::json::parse(text).get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidShape("cannot parse partition '" + std::string(text) + "': " + e.what());
    }
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<int> lengths;
    int n = 0;
    for (const auto& r : rows) {
        lengths.push_back(static_cast<int>(r.size()));
        n += static_cast<int>(r.size());
    }
    shape_ = YoungDiagram(lengths);
    pos_.assign(n, {-1, -1});
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n || pos_[v - 1].first >= 0) throw InvalidShape("tableau labels must be 1..N, each once");
            pos_[v - 1] = {i, j};
            if (j > 0 && rows[i][j - 1] >= v) throw InvalidShape("tableau rows must increase");
            if (i > 0 && rows[i - 1][j] >= v) throw InvalidShape("tableau columns must increase");
        }
    }
    rows_ = std::move(rows);
}

StandardTableau StandardTableau::from_row_sequence(const std::vector<int>& row_of_label) {
    std::vector<std::vector<int>> rows;
    for (std::size_t k = 0; k < row_of_label.size(); ++k) {
        int r = row_of_label[k];
        if (r < 0 || r > static_cast<int>(rows.size())) throw InvalidShape("row sequence skips a row");
        if (r == static_cast<int>(rows.size())) rows.emplace_back();
        if (r > 0 && rows[r].size() + 1 > rows[r - 1].size()) throw InvalidShape("row sequence is not a lattice word");
        rows[r].push_back(static_cast<int>(k) + 1);
    }
    return StandardTableau(std::move(rows));
}

std::vector<int> StandardTableau::row_sequence() const {
    std::vector<int> out;
    out.reserve(pos_.size());
    for (const auto& p : pos_) out.push_back(p.first);
    return out;
}

StandardTableau StandardTableau::restricted(int k) const {
    std::vector<int> seq = row_sequence();
    seq.resize(std::min<std::size_t>(seq.size(), static_cast<std::size_t>(std::max(k, 0))));
    return from_row_sequence(seq);
}

std::optional<StandardTableau> StandardTableau::swapped(int k) const {
    if (k < 1 || k >= size()) throw std::out_of_range("transposition label out of range");
    auto [r1, c1] = pos_[k - 1];
    auto [r2, c2] = pos_[k];
    if (r1 == r2 || c1 == c2) return std::nullopt;
    std::vector<std::vector<int>> rows = rows_;
    rows[r1][c1] = k + 1;
    rows[r2][c2] = k;
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::to_string() const { return nlohmann::json(rows_).dump(); }

StandardTableau StandardTableau::parse(std::string_view text) {
    try {
        return StandardTableau(nlohmann::json::parse(text).get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidShape("cannot parse tableau '" + std::string(text) + "': " + e.what());
    }
}

namespace {

void last_letter(const YoungDiagram& shape, std::vector<int>& seq, int remaining,
                 std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.emplace_back(seq.begin(), seq.end());
        return;
    }
    // seq is filled from the back: seq[remaining-1] holds the row of label `remaining`.
    for (int r = shape.num_rows() - 1; r >= 0; --r) {
        auto smaller = shape.remove_box(r);
        if (!smaller) continue;
        seq[remaining - 1] = r;
        last_letter(*smaller, seq, remaining - 1, out);
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& shape) {
    std::vector<int> seq(shape.size());
    std::vector<std::vector<int>> seqs;
    last_letter(shape, seq, shape.size(), seqs);
    std::vector<StandardTableau> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) out.push_back(StandardTableau::from_row_sequence(s));
    return out;
}

namespace {

void partitions_rec(int n, int max_part, int rows_left, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions(int n, int max_rows) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    partitions_rec(n, n, max_rows, cur, out);
    return out;
}

std::vector<TableauTerm> yy_action_exact(const StandardTableau& t, int k) {
    if (k < 1 || k >= t.size()) throw std::out_of_range("transposition label out of range");
    const int rho = t.content(k + 1) - t.content(k);
    std::vector<TableauTerm> out;
    out.push_back({t, SurdSum(Rational(1, rho))});
    if (rho != 1 && rho != -1) {
        // sqrt(1 - 1/rho^2) = sqrt(rho^2 - 1) / |rho|
        out.push_back({*t.swapped(k), SurdSum::term(Rational(1, std::abs(rho)), static_cast<std::int64_t>(rho) * rho - 1)});
    }
    return out;
}

TableauTerm yy_action_limit(const StandardTableau& t, int k, LimitMode mode) {
    if (k < 1 || k >= t.size()) throw std::out_of_range("transposition label out of range");
    auto [r1, c1] = t.position(k);
    auto [r2, c2] = t.position(k + 1);
    if (mode == LimitMode::Row) {
        if (r1 == r2) return {t, SurdSum(1)};
        if (c1 == c2) throw InvalidQuery("labels share a column; the row limit does not apply");
        return {*t.swapped(k), SurdSum(1)};
    }
    if (c1 == c2) return {t, SurdSum(-1)};
    if (r1 == r2) throw InvalidQuery("labels share a row; the column limit does not apply");
    return {*t.swapped(k), SurdSum(1)};
}

CoeffMatrix yy_matrix(const YoungDiagram& shape, int k, bool exact) {
    auto basis = enumerate_standard_tableaux(shape);
    std::map<StandardTableau, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    CoeffMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (exact) {
            for (const auto& term : yy_action_exact(basis[j], k)) m.at(index.at(term.tableau), j) += term.coeff;
        } else {
            auto term = yy_action_limit(basis[j], k, LimitMode::Row);
            m.at(index.at(term.tableau), j) += term.coeff;
        }
        m.row_labels().push_back(basis[j].to_string());
    }
    m.col_labels() = m.row_labels();
    return m;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1]) throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.img_.at(i - 1), p.img_.at(j - 1));
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    Permutation result = identity(n);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle notation must start with '('");
        ++pos;
        std::vector<int> cycle;
        std::string num;
        for (; pos < text.size() && text[pos] != ')'; ++pos) {
            char c = text[pos];
            if (c >= '0' && c <= '9') {
                num.push_back(c);
            } else if (c == ',' || c == ' ') {
                if (!num.empty()) cycle.push_back(std::stoi(num));
                num.clear();
            } else {
                throw std::invalid_argument("unexpected character in cycle notation");
            }
        }
        if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
        if (!num.empty()) cycle.push_back(std::stoi(num));
        ++pos;
        std::vector<int> img = identity(n).img_;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % cycle.size()];
            if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("cycle entry out of range");
            img[a - 1] = b;
        }
        // Cycles are composed right to left, as written.
        result = result * Permutation(std::move(img));
        skip_space();
    }
    return result;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Permutation Permutation::conjugated(const std::vector<int>& f) const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[f[i] - 1] = f[img_[i] - 1];
    return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i) + 1) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = img_[j] - 1;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(a.size());
    for (int i = 1; i <= a.size(); ++i) img[i - 1] = a(b(i));
    return Permutation(std::move(img));
}

std::vector<int> permutation_to_adjacent_word(const Permutation& perm) {
    // Sorting the one-line form by adjacent swaps multiplies by s_k on the
    // right each time; the word is the swap sequence reversed.
    std::vector<int> w = perm.images();
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                swaps.push_back(static_cast<int>(k) + 1);
                changed = true;
                break;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

}  // namespace subduction
