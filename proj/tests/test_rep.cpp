#include <doctest.h>

#include <cmath>

#include "subduction/errors.hpp"
#include "subduction/rep.hpp"

using namespace subduction;

namespace {

SurdSum s(const char* text) { return SurdSum::parse(text); }

std::vector<std::size_t> find_states(const SectorBasis& b, const YoungDiagram& rn, int row, const StandardTableau& q) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& st = b.states()[i];
        if (st.rn == rn && st.straddle_row() == row && st.split.q == q) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_CASE("four-row straddling block") {
    Sector sec{YoungDiagram({10, 8, 6, 4}), 4, YoungDiagram({8, 7, 5, 3})};
    auto basis = SectorBasis::build(sec);
    auto block = straddling_block(basis);
    auto idx = find_states(basis, YoungDiagram({9, 7, 5, 3}), 1, StandardTableau::parse("[[1,2,4],[3]]"));
    REQUIRE(idx.size() == 3);
    CHECK(basis.states()[idx[0]].split.pattern == GTPattern::parse("[[3,1,0,0],[3,0,0],[2,0],[1]]"));
    CHECK(basis.states()[idx[1]].split.pattern == GTPattern::parse("[[3,1,0,0],[2,1,0],[2,0],[1]]"));
    CHECK(basis.states()[idx[2]].split.pattern == GTPattern::parse("[[3,1,0,0],[2,1,0],[1,1],[1]]"));
    CHECK(block.at(idx[0], idx[0]) == s("1/3"));
    CHECK(block.at(idx[1], idx[1]) == s("28/96"));
    CHECK(block.at(idx[2], idx[2]) == s("1/8"));
    CHECK(block.at(idx[0], idx[1]) == SurdSum(-1) / (SurdSum(4) * surd_sqrt(18)));
    CHECK(block.at(idx[0], idx[2]) == SurdSum(-1) / (SurdSum(4) * surd_sqrt(6)));
    CHECK(block.at(idx[1], idx[2]) == SurdSum(-1) / (SurdSum(4) * surd_sqrt(3)));
    CHECK(block.is_symmetric());
    CHECK((block * block).is_identity());
}

TEST_CASE("straddling element selection rules") {
    Sector sec{YoungDiagram({9, 4}), 2, YoungDiagram({7, 3})};
    auto basis = SectorBasis::build(sec);
    auto g = straddling_block(basis);
    CHECK(g.is_symmetric());
    CHECK((g * g).is_identity());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& a = basis.states()[i];
            const auto& b = basis.states()[j];
            if (a.split.q.restricted(1) != b.split.q.restricted(1)) CHECK(g.at(i, j).is_zero());
        }
    }
    // m = 1 and a single row: the straddle acts as the identity.
    auto row = SectorBasis::build(Sector{YoungDiagram({6}), 1, YoungDiagram({4})});
    CHECK(straddling_block(row).is_identity());
    CHECK_THROWS_AS(straddling_block(SectorBasis::build(Sector{YoungDiagram({6}), 0, YoungDiagram({4})})), InvalidQuery);
}

TEST_CASE("generators satisfy the Coxeter relations on the window") {
    for (const auto& [R, m, frozen] : std::vector<std::tuple<YoungDiagram, int, YoungDiagram>>{
             {YoungDiagram({12, 7, 2}), 3, YoungDiagram({10, 6, 1})},
             {YoungDiagram({11, 6}), 4, YoungDiagram({8, 4})},
             {YoungDiagram({9, 5, 2}), 2, YoungDiagram({7, 4, 2})}}) {
        const int n = R.size() - m;
        REQUIRE(frozen.size() == n - 1);
        auto basis = SectorBasis::build(Sector{R, m, frozen});
        std::vector<CoeffMatrix> g;
        for (int k = n; k < R.size(); ++k) g.push_back(generator_matrix(basis, k));
        for (std::size_t a = 0; a < g.size(); ++a) {
            CHECK((g[a] * g[a]).is_identity());
            CHECK(g[a].is_symmetric());
            if (a + 1 < g.size()) CHECK(g[a] * g[a + 1] * g[a] == g[a + 1] * g[a] * g[a + 1]);
            for (std::size_t b = a + 2; b < g.size(); ++b) CHECK(g[a] * g[b] == g[b] * g[a]);
        }
    }
}

TEST_CASE("element matrices follow the adjacent word") {
    Sector sec{YoungDiagram({10, 5}), 2, YoungDiagram({8, 4})};
    auto basis = SectorBasis::build(sec);
    const int N = 15;
    auto s13 = generator_matrix(basis, 13);
    auto s14 = generator_matrix(basis, 14);
    auto sigma = Permutation::parse_cycles("(13,14,15)", N);
    CHECK(element_matrix(basis, sigma) == s13 * s14);
    CHECK(element_matrix(basis, Permutation::identity(N)).is_identity());
    CHECK_THROWS_AS(element_matrix(basis, Permutation::parse_cycles("(1,2)", N)), InvalidQuery);
    Budget tiny;
    tiny.max_states = 1;
    CHECK_THROWS_AS(SectorBasis::build(sec, tiny), BudgetExceeded);
}

TEST_CASE("closed form for alpha (n,n+1) beta") {
    for (const auto& [R, m, frozen] : std::vector<std::tuple<YoungDiagram, int, YoungDiagram>>{
             {YoungDiagram({10, 5}), 2, YoungDiagram({7, 4})},
             {YoungDiagram({9, 5, 2}), 3, YoungDiagram({6, 4, 1})},
             {YoungDiagram({11, 6}), 3, YoungDiagram({7, 5})}}) {
        auto basis = SectorBasis::build(Sector{R, m, frozen});
        const int N = R.size();
        const int n = N - m;
        const int f = frozen.size();
        std::vector<std::pair<std::string, std::string>> cases{
            {"()", "()"},
            {"(" + std::to_string(n - 1) + "," + std::to_string(n) + ")", "()"},
            {"()", "(" + std::to_string(n + 1) + "," + std::to_string(N) + ")"},
            {"(" + std::to_string(f + 1) + "," + std::to_string(n) + ")",
             "(" + std::to_string(N) + "," + std::to_string(n + 1) + "," + std::to_string(N - 1) + ")"},
        };
        for (const auto& [a, b] : cases) {
            auto alpha = Permutation::parse_cycles(a, N);
            auto beta = Permutation::parse_cycles(b, N);
            auto sigma = alpha * Permutation::transposition(N, n, n + 1) * beta;
            CHECK(straddle_closed_form(basis, alpha, beta) == element_matrix(basis, sigma));
        }
    }
}

TEST_CASE("restricted trace routes") {
    for (const auto& [R, rn, rm] : std::vector<std::tuple<YoungDiagram, YoungDiagram, YoungDiagram>>{
             {YoungDiagram({12, 5}), YoungDiagram({11, 4}), YoungDiagram({2})},
             {YoungDiagram({12, 5}), YoungDiagram({11, 4}), YoungDiagram({1, 1})},
             {YoungDiagram({10, 6, 3}), YoungDiagram({9, 5, 2}), YoungDiagram({2, 1})},
             {YoungDiagram({10, 8, 6, 4}), YoungDiagram({9, 7, 5, 3}), YoungDiagram({3, 1})}}) {
        CHECK(restricted_trace_straddling(R, rn, rm) == restricted_trace_by_tableaux(R, rn, rm));
    }
    // Trace of the straddling block over an explicit window with every t_n.
    Sector sec{YoungDiagram({9, 3}), 2, YoungDiagram()};
    auto basis = SectorBasis::build(sec);
    auto g = straddling_block(basis);
    for (const auto& rm : {YoungDiagram({2}), YoungDiagram({1, 1})}) {
        Rational t;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& st = basis.states()[i];
            if (st.rn == YoungDiagram({8, 2}) && st.split.rm == rm) t += g.at(i, i).as_rational();
        }
        CHECK(t == restricted_trace_straddling(sec.R, YoungDiagram({8, 2}), rm));
    }
}

TEST_CASE("two-row closed forms") {
    TwoRowParams p{6, 2, 1, 1, 1, 1};
    auto f = two_row_closed_forms(p);
    CHECK(f.lambda_m == -1);
    CHECK(f.leading == restricted_trace_leading(p.R(), p.rn(), p.rm()));
    CHECK(f.exact_as_printed - f.exact ==
          Rational(p.rn().dimension() * p.rm().dimension() * p.n2, p.m() * p.n()));
    REQUIRE(f.bound);
    CHECK(*f.bound == Rational(6, 2 * (4 + 4)));
    CHECK_FALSE(two_row_closed_forms(TwoRowParams{3, 0, 0, 1, 1, 0}).bound);
    CHECK(lambda_pairs(YoungDiagram({3, 1})) == 2);
    CHECK(lambda_pairs(YoungDiagram({1, 1, 1})) == -3);
    CHECK_THROWS_AS(two_row_closed_forms(TwoRowParams{2, 3, 1, 0, 1, 0}), InvalidShape);
    CHECK_THROWS_AS(two_row_closed_forms(TwoRowParams{5, 2, 2, 0, 1, 1}), InvalidQuery);
    for (int q2 = 0; q2 <= 4; ++q2) {
        for (int d = 0; d <= 6; ++d) {
            for (int n1 = 0; n1 <= 3; ++n1) {
                for (int n2 = 0; n1 + n2 <= 3; ++n2) {
                    const int m = n1 + n2;
                    if (m == 0 || q2 + d == 0 || q2 + n2 > q2 + d + n1) continue;
                    for (int r2 = 0; 2 * r2 <= m; ++r2) {
                        TwoRowParams t{q2 + d, q2, n1, n2, m - r2, r2};
                        if (n1 > t.r1 || n1 < r2) continue;
                        auto g = two_row_closed_forms(t);
                        CHECK(g.leading == restricted_trace_leading(t.R(), t.rn(), t.rm()));
                    }
                }
            }
        }
    }
}

TEST_CASE("split-basis trace approaches the exact character") {
    // Leading-order construction: the relative gap closes like 1/d.
    double prev = 1.0;
    for (int d : {10, 40, 160}) {
        TwoRowParams t{3 + d, 3, 1, 1, 2, 0};
        const double exact = two_row_closed_forms(t).exact.to_double();
        const double split = restricted_trace_straddling(t.R(), t.rn(), t.rm()).to_double();
        const double gap = std::abs(split / exact - 1.0);
        CHECK(gap < prev);
        CHECK(gap < 4.0 / d);
        prev = gap;
    }
}

TEST_CASE("tableau counts agree with the hook formula") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& shape : partitions(n, n)) CHECK(count_tableaux(shape) == shape.dimension());
    }
}
