#include <doctest.h>

#include <map>

#include "subduction/cg.hpp"
#include "subduction/errors.hpp"

using namespace subduction;

namespace {

SurdSum inv_sqrt(std::int64_t n) { return surd_sqrt(Rational(1, n)); }

}  // namespace

TEST_CASE("scalar factor forms") {
    CHECK(scalar_factor({{1, 0}, {1}, 1, std::nullopt}) == surd_sqrt(Rational(1, 2)));
    for (int m = 0; m <= 6; ++m) {
        CHECK(scalar_factor({{m, 0}, {m}, 1, std::nullopt}) == surd_sqrt(Rational(1, m + 1)));
        CHECK(scalar_factor({{m, 0}, {m}, 2, std::nullopt}) == surd_sqrt(Rational(m, m + 1)));
    }
    CHECK(scalar_factor({{2, 0, 0}, {1, 0}, 2, 1}).to_double() < 0);
    CHECK(scalar_factor({{2, 1, 0}, {2, 0}, 1, 2}) == SurdSum(Rational(1, 4)));
    CHECK_THROWS_AS(scalar_factor({{0, 1}, {0}, 1, std::nullopt}), InvalidQuery);
}

TEST_CASE("section 4.1 fundamental CGs") {
    auto p1 = GTPattern::parse("[[2,1,0,0],[2,0,0],[1,0],[0]]");
    auto p2 = GTPattern::parse("[[2,1,0,0],[1,1,0],[1,0],[0]]");
    auto c1 = GTPattern::parse("[[3,1,0,0],[3,0,0],[2,0],[1]]");
    auto c2 = GTPattern::parse("[[3,1,0,0],[2,1,0],[2,0],[1]]");
    auto c3 = GTPattern::parse("[[3,1,0,0],[2,1,0],[1,1],[1]]");
    CHECK(fundamental_cg(p1, 1, c1) == inv_sqrt(3));
    CHECK(fundamental_cg(p1, 1, c2) == SurdSum(-1) / (SurdSum(4) * surd_sqrt(6)));
    CHECK(fundamental_cg(p2, 1, c2) == SurdSum(3) / (SurdSum(4) * surd_sqrt(2)));
    CHECK(fundamental_cg(p1, 1, c3) == SurdSum(-1) / (SurdSum(4) * surd_sqrt(2)));
    CHECK(fundamental_cg(p2, 1, c3) == -surd_sqrt(3) / (SurdSum(4) * surd_sqrt(2)));
    CHECK(fundamental_cg(p2, 1, c1).is_zero());
    // Selection rule: a different fundamental changes the occupation.
    CHECK(fundamental_cg(p1, 2, c1).is_zero());
}

TEST_CASE("copy-label compatibility") {
    auto child = CopyLabel::make(StandardTableau::parse("[[1,2],[3]]"), 0, 2);
    auto good = CopyLabel::make(StandardTableau::parse("[[1,2]]"), 0, 2);
    auto bad = CopyLabel::make(StandardTableau::parse("[[1],[2]]"), 0, 2);
    CHECK(fundamental_cg(bad, 2, child).is_zero());
    CHECK(fundamental_cg(good, 2, child) == fundamental_cg(good.pattern, 2, child.pattern));
}

TEST_CASE("two-slot composite CGs") {
    auto sym = StandardTableau::parse("[[1,2]]");
    auto anti = StandardTableau::parse("[[1],[2]]");
    auto msym = GTPattern::parse("[[2,0],[1]]");
    auto manti = GTPattern::parse("[[1,1],[1]]");
    CHECK(composite_cg(sym, msym, {1, 2}) == inv_sqrt(2));
    CHECK(composite_cg(sym, msym, {2, 1}) == inv_sqrt(2));
    CHECK(composite_cg(anti, manti, {1, 2}) == inv_sqrt(2));
    CHECK(composite_cg(anti, manti, {2, 1}) == -inv_sqrt(2));
    CHECK(composite_cg(sym, msym, {1, 1}).is_zero());
    CHECK(composite_cg(StandardTableau::parse("[[1]]"), fundamental_pattern(3, 2), {2}) == SurdSum(1));
    CHECK(composite_cg(StandardTableau::parse("[[1]]"), fundamental_pattern(3, 2), {3}).is_zero());
}

TEST_CASE("composite CG orthonormality and completeness per occupation class") {
    for (int p = 1; p <= 3; ++p) {
        for (int m = 1; m <= 4; ++m) {
            // Group copies by occupation; each class must be an orthogonal square matrix.
            std::map<std::vector<int>, std::vector<const std::vector<SlotTerm>*>> classes;
            for (const auto& shape : partitions(m, p)) {
                for (const auto& s : enumerate_standard_tableaux(shape)) {
                    for (const auto& pat : cached_patterns(shape.padded(p))) {
                        const auto& e = coupled_expansion(s, pat);
                        for (const auto& t : e) {
                            std::vector<int> occ(p, 0);
                            for (int a : t.slots) ++occ[a - 1];
                            CHECK(occ == occupation(pat));
                        }
                        classes[occupation(pat)].push_back(&e);
                    }
                }
            }
            for (const auto& [occ, states] : classes) {
                std::size_t words = 1;
                // multinomial count of slot words with this occupation
                int remaining = m;
                for (int c : occ) {
                    std::size_t binom = 1;
                    for (int k = 1; k <= c; ++k) binom = binom * (remaining - c + k) / k;
                    words *= binom;
                    remaining -= c;
                }
                CHECK(states.size() == words);
                for (std::size_t x = 0; x < states.size(); ++x) {
                    for (std::size_t y = x; y < states.size(); ++y) {
                        std::map<std::vector<int>, SurdSum> vx;
                        for (const auto& t : *states[x]) vx[t.slots] = t.coeff;
                        SurdSum dot;
                        for (const auto& t : *states[y]) {
                            auto it = vx.find(t.slots);
                            if (it != vx.end()) dot.add_scaled(it->second, t.coeff);
                        }
                        CHECK(dot == SurdSum(x == y ? 1 : 0));
                    }
                }
            }
        }
    }
}
