#include <doctest.h>

#include <cmath>

#include "subduction/corrections.hpp"
#include "subduction/errors.hpp"

using namespace subduction;

namespace {

std::map<TensorSlotState, SurdSum> collect(const std::vector<FirstOrderTerm>& v, RowPair pair) {
    std::map<TensorSlotState, SurdSum> out;
    for (const auto& t : v) {
        auto it = t.coeff.find(pair);
        if (it != t.coeff.end()) out[t.slots] += it->second;
    }
    return out;
}

}  // namespace

TEST_CASE("first-order action of the slot transposition") {
    const SurdSum h = surd_sqrt(Rational(1, 2));
    std::vector<SlotTerm> sym{{{1, 2}, h}, {{2, 1}, h}};
    std::vector<SlotTerm> anti{{{1, 2}, h}, {{2, 1}, -h}};
    // delta S |[2]> = (1/d) |[1,1]> and delta S |[1,1]> = (1/d) |[2]>.
    auto a = collect(delta_s_action(sym, 1), {1, 2});
    CHECK(a[{1, 2}] == h);
    CHECK(a[{2, 1}] == -h);
    auto b = collect(delta_s_action(anti, 1), {1, 2});
    CHECK(b[{1, 2}] == h);
    CHECK(b[{2, 1}] == h);
    CHECK(delta_s_action({{{1, 1, 1}, SurdSum(1)}}, 2).empty());

    auto exact = delta_s_action_exact(YoungDiagram({9, 4}), YoungDiagram({8, 3}), sym, 1);
    REQUIRE(exact.size() == 2);
    CHECK(axial_distance(YoungDiagram({8, 3}), {1, 2}, 1) == 6);
    CHECK(exact[0].coeff == h / Rational(6));
    CHECK(exact[1].coeff == -h / Rational(6));
}

TEST_CASE("two-row m = 2 corrections") {
    auto sol = first_order_corrections(YoungDiagram({9, 4}), YoungDiagram({8, 3}));
    REQUIRE(sol.states.size() == 2);
    CHECK(sol.states[0].rm == YoungDiagram({2}));
    CHECK(sol.states[1].rm == YoungDiagram({1, 1}));
    CHECK(sol.symbols == std::vector<RowPair>{{1, 2}});
    CHECK(sol.antisymmetric);
    CHECK(sol.solved);
    CHECK(sol.gauge_dimension == 0);
    CHECK(sol.cross_sector_terms == 0);
    // delta|[2]> = (1/2d)|[1,1]>, delta|[1,1]> = -(1/2d)|[2]>, no diagonal part.
    CHECK(sol.x.at({1, 2}).at(1, 0) == SurdSum(Rational(1, 2)));
    CHECK(sol.x.at({1, 2}).at(0, 1) == SurdSum(Rational(-1, 2)));
    CHECK(sol.x.at({1, 2}).at(0, 0).is_zero());
    CHECK(sol.x.at({1, 2}).at(1, 1).is_zero());
    CHECK(first_order_to_string(sol.coefficient(1, 0)) == "(1/2)/d_12");
    CHECK(first_order_to_string(sol.coefficient(0, 0)) == "0");
}

TEST_CASE("first-order corrections on larger sectors") {
    for (const auto& [R, rn] : std::vector<std::pair<YoungDiagram, YoungDiagram>>{
             {YoungDiagram({12, 6}), YoungDiagram({10, 5})},
             {YoungDiagram({12, 6}), YoungDiagram({9, 5})},
             {YoungDiagram({11, 6, 2}), YoungDiagram({10, 5, 1})},
             {YoungDiagram({12, 7, 3}), YoungDiagram({11, 5, 2})},
             {YoungDiagram({10, 8, 6, 4}), YoungDiagram({9, 7, 5, 3})}}) {
        auto sol = first_order_corrections(R, rn);
        CHECK(sol.antisymmetric);
        CHECK(sol.solved);
        CHECK(sol.cross_sector_terms == 0);
        std::map<RowPair, Rational> d;
        for (const auto& s : sol.symbols) d[s] = Rational(R.row(s.first - 1) - R.row(s.second - 1));
        auto x = sol.evaluate(d);
        CHECK((x + x.transpose()).is_zero());
    }
    auto multi = first_order_corrections(YoungDiagram({10, 8, 6, 4}), YoungDiagram({9, 7, 5, 3}));
    // [3,1] three times, [2,2] twice, [2,1,1] three times: 3 + 1 + 3 free directions.
    CHECK(multi.gauge_dimension == 7);
    CHECK_THROWS_AS(first_order_corrections(YoungDiagram({2, 2}), YoungDiagram({1, 1})), InvalidQuery);
    CHECK_THROWS_AS(first_order_corrections(YoungDiagram({12, 6}), YoungDiagram({10, 5}), 1), BudgetExceeded);
}

TEST_CASE("exact two-row states") {
    auto s2 = two_row_exact_states(2);
    CHECK(s2.symmetric[0] == surd_sqrt(Rational(3)) / Rational(2));
    CHECK(s2.symmetric[1] == SurdSum(Rational(1, 2)));
    for (int d = 2; d <= 40; ++d) {
        auto s = two_row_exact_states(d);
        CHECK(s.symmetric[0] * s.symmetric[0] + s.symmetric[1] * s.symmetric[1] == SurdSum(1));
        CHECK(s.antisymmetric[0] * s.antisymmetric[0] + s.antisymmetric[1] * s.antisymmetric[1] == SurdSum(1));
        CHECK((s.symmetric[0] * s.antisymmetric[0] + s.symmetric[1] * s.antisymmetric[1]).is_zero());
    }
    auto far = two_row_exact_states(1000000);
    CHECK(far.symmetric[0].to_double() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));
    CHECK_THROWS_AS(two_row_exact_states(1), InvalidQuery);
}

TEST_CASE("second-order decay of the corrected states") {
    auto fit = two_row_decay({4, 8, 16, 32});
    CHECK(fit.exponent >= 1.8);
    CHECK(fit.exponent <= 2.2);
    CHECK(fit_decay_exponent({1, 2, 4}, {1.0, 0.5, 0.25}) == doctest::Approx(1.0));
}
