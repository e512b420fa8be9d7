#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "subduction/errors.hpp"
#include "subduction/splitbasis.hpp"

using namespace subduction;

namespace {

SurdSum inv_sqrt2() { return surd_sqrt(Rational(1, 2)); }

std::map<TensorSlotState, SurdSum> as_map(const std::vector<SlotTerm>& v) {
    std::map<TensorSlotState, SurdSum> out;
    for (const auto& t : v) out[t.slots] += t.coeff;
    return out;
}

}  // namespace

TEST_CASE("split label enumeration") {
    auto two = enumerate_split_labels(YoungDiagram({9, 4}), 1);
    REQUIRE(two.size() == 2);
    for (const auto& c : two) CHECK(c.multiplicity() == 1);

    auto four = enumerate_split_labels(YoungDiagram({10, 8, 6, 4}), 4);
    int found = 0;
    for (const auto& c : four) {
        if (c.rn == YoungDiagram({9, 7, 5, 3}) && c.rm == YoungDiagram({3, 1})) {
            CHECK(c.multiplicity() == 3);
            CHECK(c.delta == std::vector<int>{1, 1, 1, 1});
            ++found;
        }
    }
    CHECK(found == 1);

    auto pair = enumerate_split_labels(YoungDiagram({12, 5}), 2);
    std::vector<YoungDiagram> shapes;
    for (const auto& c : pair) {
        if (c.rn == YoungDiagram({11, 4})) {
            CHECK(c.multiplicity() == 1);
            shapes.push_back(c.rm);
        }
    }
    CHECK(shapes == std::vector<YoungDiagram>{YoungDiagram({2}), YoungDiagram({1, 1})});
    CHECK(regime_warning(YoungDiagram({5, 4}), 1));
    CHECK_FALSE(regime_warning(YoungDiagram({9, 4}), 2));
}

TEST_CASE("multiplicities count the restriction dimension") {
    // sum over classes of multiplicity * d_rn * d_rm equals d_R when all sectors are separated
    for (const auto& R : {YoungDiagram({12, 6, 2}), YoungDiagram({9, 4}), YoungDiagram({11, 7, 4, 1})}) {
        for (int m = 1; m <= 3; ++m) {
            std::int64_t total = 0;
            for (const auto& c : enumerate_split_labels(R, m)) {
                CHECK(c.separated);
                total += c.multiplicity() * c.rn.dimension() * c.rm.dimension();
            }
            CHECK(total == R.dimension());
        }
    }
}

TEST_CASE("subduction coefficients") {
    YoungDiagram R({12, 5});
    StandardTableau base = enumerate_standard_tableaux(YoungDiagram({11, 4})).front();
    SplitLabel sym{R, base, CopyLabel::make(StandardTableau::parse("[[1,2]]"), 1, 2)};
    SplitLabel anti{R, base, CopyLabel::make(StandardTableau::parse("[[1],[2]]"), 0, 2)};
    REQUIRE(sym.rm_copy.pattern == GTPattern::parse("[[2,0],[1]]"));
    CHECK(subduction_coefficient({base, {1, 2}}, sym) == inv_sqrt2());
    CHECK(subduction_coefficient({base, {2, 1}}, anti) == -inv_sqrt2());
    auto other = enumerate_standard_tableaux(YoungDiagram({11, 4}))[1];
    CHECK(subduction_coefficient({other, {1, 2}}, sym).is_zero());
    SplitLabel one{YoungDiagram({9, 4}), enumerate_standard_tableaux(YoungDiagram({8, 4})).front(),
                   CopyLabel::make(StandardTableau::parse("[[1]]"), 0, 2)};
    REQUIRE(one.rm_copy.pattern == fundamental_pattern(2, 1));
    CHECK(subduction_coefficient({one.rn_tableau, {1}}, one) == SurdSum(1));
    CHECK(subduction_coefficient({one.rn_tableau, {2}}, one).is_zero());

    auto e = as_map(split_state_expansion(sym));
    CHECK(e.size() == 2);
    CHECK(e[{1, 2}] == inv_sqrt2());
    CHECK(e[{2, 1}] == inv_sqrt2());
    auto f = as_map(split_state_expansion(anti));
    CHECK(f[{1, 2}] == inv_sqrt2());
    CHECK(f[{2, 1}] == -inv_sqrt2());
}

TEST_CASE("removal words round trip") {
    auto t = StandardTableau::parse("[[1,2,5],[3,4,6]]");
    auto w = RemovalWord::from_tableau(t, 4);
    CHECK(w.rows == std::vector<int>{2, 1});
    CHECK(w.full_tableau() == t);
}

TEST_CASE("slot permutation action") {
    CHECK(slot_permutation_action(Permutation::identity(3), {1, 2, 3}) == TensorSlotState{1, 2, 3});
    CHECK(slot_permutation_action(Permutation::parse_cycles("(1,2)", 2), {1, 2}) == TensorSlotState{2, 1});
    auto cyc = Permutation::parse_cycles("(1,2,3)", 3);
    auto s1 = Permutation::parse_cycles("(1,2)", 3);
    auto s2 = Permutation::parse_cycles("(2,3)", 3);
    REQUIRE(cyc == s1 * s2);
    TensorSlotState v{1, 2, 3};
    CHECK(slot_permutation_action(cyc, v) == slot_permutation_action(s1, slot_permutation_action(s2, v)));
    // Left action on every pair of S_4 elements.
    std::vector<int> a{1, 2, 3, 4};
    TensorSlotState w{1, 2, 2, 3};
    do {
        std::vector<int> b{1, 2, 3, 4};
        do {
            Permutation pa(a);
            Permutation pb(b);
            CHECK(slot_permutation_action(pa * pb, w) ==
                  slot_permutation_action(pa, slot_permutation_action(pb, w)));
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("slot permutations commute with per-slot linear maps") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int p = 2; p <= 3; ++p) {
        for (int m = 2; m <= 4; ++m) {
            std::vector<std::vector<Rational>> u(p, std::vector<Rational>(p));
            for (auto& row : u) {
                for (auto& x : row) x = Rational(entry(rng), 1 + (entry(rng) + 5) % 4);
            }
            // U^{(x)m} on a basis word: product of column entries.
            auto apply_u = [&](const std::map<TensorSlotState, Rational>& v) {
                std::map<TensorSlotState, Rational> out;
                for (const auto& [word, c] : v) {
                    std::vector<TensorSlotState> images{{}};
                    std::vector<Rational> coeffs{c};
                    for (int a : word) {
                        std::vector<TensorSlotState> ni;
                        std::vector<Rational> nc;
                        for (std::size_t k = 0; k < images.size(); ++k) {
                            for (int b = 1; b <= p; ++b) {
                                auto w = images[k];
                                w.push_back(b);
                                ni.push_back(w);
                                nc.push_back(coeffs[k] * u[b - 1][a - 1]);
                            }
                        }
                        images = std::move(ni);
                        coeffs = std::move(nc);
                    }
                    for (std::size_t k = 0; k < images.size(); ++k) out[images[k]] += coeffs[k];
                }
                return out;
            };
            auto apply_sigma = [&](const Permutation& s, const std::map<TensorSlotState, Rational>& v) {
                std::map<TensorSlotState, Rational> out;
                for (const auto& [word, c] : v) out[slot_permutation_action(s, word)] += c;
                return out;
            };
            std::vector<int> occ(p, 0);
            for (int k = 0; k < m; ++k) ++occ[k % p];
            for (const auto& word : slot_words(occ)) {
                std::map<TensorSlotState, Rational> v{{word, Rational(1)}};
                for (int k = 1; k < m; ++k) {
                    auto s = Permutation::transposition(m, k, k + 1);
                    auto lhs = apply_sigma(s, apply_u(v));
                    auto rhs = apply_u(apply_sigma(s, v));
                    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("split states carry Young's form of r_m under slot transpositions") {
    for (int p = 1; p <= 3; ++p) {
        for (int m = 2; m <= 4; ++m) {
            for (const auto& shape : partitions(m, p)) {
                const auto tabs = enumerate_standard_tableaux(shape);
                for (const auto& pat : cached_patterns(shape.padded(p))) {
                    for (const auto& q : tabs) {
                        const auto& state = coupled_expansion(q, pat);
                        for (int k = 1; k < m; ++k) {
                            auto lhs = as_map(slot_permutation_action(Permutation::transposition(m, k, k + 1), state));
                            std::map<TensorSlotState, SurdSum> rhs;
                            for (const auto& term : yy_action_exact(q, m - k)) {
                                for (const auto& t : coupled_expansion(term.tableau, pat)) rhs[t.slots].add_scaled(t.coeff, term.coeff);
                            }
                            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("transformation matrices") {
    auto one = transformation_matrix(YoungDiagram({9, 4}), 1, YoungDiagram({8, 4}));
    CHECK(one.is_identity());
    auto two = transformation_matrix(YoungDiagram({12, 5}), 2, YoungDiagram({11, 4}));
    REQUIRE(two.rows() == 2);
    CHECK(two.at(0, 0) == inv_sqrt2());
    CHECK(two.at(0, 1) == inv_sqrt2());
    CHECK(two.at(1, 0) == inv_sqrt2());
    CHECK(two.at(1, 1) == -inv_sqrt2());
    auto big = transformation_matrix(YoungDiagram({10, 8, 6, 4}), 4, YoungDiagram({9, 7, 5, 3}));
    CHECK(big.rows() == 24);
    CHECK((big * big.transpose()).is_identity());
    auto empty = transformation_matrix(YoungDiagram({3, 1}), 0, YoungDiagram({3, 1}));
    CHECK(empty.is_identity());
    for (const auto& R : {YoungDiagram({9, 5, 1}), YoungDiagram({11, 7, 3})}) {
        for (int m = 1; m <= 4; ++m) {
            std::set<YoungDiagram> sectors;
            for (const auto& c : enumerate_split_labels(R, m)) {
                if (c.separated) sectors.insert(c.rn);
            }
            for (const auto& rn : sectors) {
                auto t = transformation_matrix(R, m, rn);
                CHECK(t.rows() == t.cols());
                CHECK((t * t.transpose()).is_identity());
            }
        }
    }
    CHECK_THROWS_AS(transformation_matrix(YoungDiagram({2, 2}), 2, YoungDiagram({1, 1})), InvalidQuery);
}
