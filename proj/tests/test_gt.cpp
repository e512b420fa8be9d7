#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "subduction/errors.hpp"
#include "subduction/gt.hpp"

using namespace subduction;

TEST_CASE("pattern enumeration") {
    CHECK(enumerate_gt_patterns({1, 0}).size() == 2);
    CHECK(enumerate_gt_patterns({2, 0}).size() == 3);
    std::vector<GTPattern> section41;
    for (const auto& m : enumerate_gt_patterns({3, 1, 0, 0})) {
        if (delta_weight(m) == std::vector<int>{1, 1, 1, 1}) section41.push_back(m);
    }
    REQUIRE(section41.size() == 3);
    CHECK(section41[0] == GTPattern::parse("[[3,1,0,0],[3,0,0],[2,0],[1]]"));
    CHECK(section41[1] == GTPattern::parse("[[3,1,0,0],[2,1,0],[2,0],[1]]"));
    CHECK(section41[2] == GTPattern::parse("[[3,1,0,0],[2,1,0],[1,1],[1]]"));
    CHECK_THROWS_AS(GTPattern::parse("[[2,0],[3]]"), InvalidShape);
}

TEST_CASE("delta weights") {
    CHECK(delta_weight(GTPattern::parse("[[3,1,0,0],[3,0,0],[2,0],[1]]")) == std::vector<int>{1, 1, 1, 1});
    CHECK(delta_weight(GTPattern::parse("[[1,0,0,0],[1,0,0],[1,0],[1]]")) == std::vector<int>{0, 0, 0, 1});
    CHECK(delta_weight(GTPattern::parse("[[2,1,0,0],[2,0,0],[1,0],[0]]")) == std::vector<int>{1, 1, 1, 0});
    CHECK(fundamental_pattern(4, 1) == GTPattern::parse("[[1,0,0,0],[1,0,0],[1,0],[1]]"));
    CHECK(fundamental_pattern(4, 4) == GTPattern::parse("[[1,0,0,0],[0,0,0],[0,0],[0]]"));
    CHECK(occupation(fundamental_pattern(3, 2)) == std::vector<int>{0, 1, 0});
}

TEST_CASE("inner multiplicity") {
    CHECK(inner_multiplicity({3, 1, 0, 0}, {1, 1, 1, 1}) == 3);
    CHECK(inner_multiplicity({4, 0, 0}, {4, 0, 0}) == 1);
    CHECK(inner_multiplicity({2, 1}, {2, 1}) == 1);
    for (int n = 0; n <= 6; ++n) {
        for (int p = 1; p <= 4; ++p) {
            for (const auto& shape : partitions(n, p)) {
                auto w = shape.padded(p);
                std::map<std::vector<int>, int> by_delta;
                for (const auto& m : enumerate_gt_patterns(w)) {
                    CHECK(satisfies_betweenness(m.rows()));
                    ++by_delta[delta_weight(m)];
                }
                long total = 0;
                for (const auto& [delta, count] : by_delta) {
                    CHECK(inner_multiplicity(w, delta) == count);
                    total += count;
                }
                CHECK(total == dim_unitary(w));
                CHECK(dim_unitary(w) == weyl_dimension(w));
            }
        }
    }
}

TEST_CASE("Schur-Weyl dimension count") {
    CHECK(dim_unitary({1, 0}) == 2);
    for (int p = 1; p <= 4; ++p) {
        for (int m = 1; m <= 5; ++m) {
            long total = 0;
            for (const auto& s : partitions(m, p)) total += dim_unitary(s.padded(p)) * s.dimension();
            CHECK(total == static_cast<long>(std::lround(std::pow(p, m))));
        }
    }
}

TEST_CASE("removal chains") {
    auto chain = tableau_to_removal_chain(StandardTableau::parse("[[1,3],[2]]"));
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == YoungDiagram({1}));
    CHECK(chain[1] == YoungDiagram({1, 1}));
    CHECK(chain[2] == YoungDiagram({2, 1}));
    auto chain2 = tableau_to_removal_chain(StandardTableau::parse("[[1,2],[3]]"));
    CHECK(chain2[1] == YoungDiagram({2}));
    CHECK(tableau_to_removal_chain(StandardTableau::parse("[[1]]")).size() == 1);
    for (const auto& shape : partitions(5, 5)) {
        std::set<std::vector<YoungDiagram>> seen;
        for (const auto& t : enumerate_standard_tableaux(shape)) CHECK(seen.insert(tableau_to_removal_chain(t)).second);
    }
}
