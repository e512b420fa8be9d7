#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "subduction/cg.hpp"
#include "subduction/corrections.hpp"
#include "subduction/errors.hpp"
#include "subduction/gt.hpp"
#include "subduction/oracle.hpp"
#include "subduction/rep.hpp"
#include "subduction/splitbasis.hpp"
#include "subduction/verify.hpp"

using namespace subduction;
using cli::Format;
using cli::Json;

namespace {

struct Globals {
    bool with_float = false;
    std::size_t budget = Budget{}.max_states;
    std::string out;
};

Json parse_json(const std::string& text, const char* flag) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidShape(std::string(flag) + ": " + e.what());
    }
}

YoungDiagram diagram_from(const Json& j) { return YoungDiagram::parse(j.dump()); }
StandardTableau tableau_from(const Json& j) { return StandardTableau::parse(j.dump()); }

Json header(const char* command) { return Json{{"schema", 1}, {"command", command}}; }

// Finite row differences: everything from the split construction is leading order.
void mark_regime(Json& out, const YoungDiagram& R, int m) {
    const bool warn = regime_warning(R, m);
    out["approx"] = "leading-order";
    out["regime_warning"] = warn;
    if (warn) std::cerr << "warning: some row-length difference of " << R.to_string() << " is below 2m\n";
}

void emit(const Json& j, const Globals& g) {
    const std::string text = j.dump(2) + "\n";
    if (g.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + g.out);
    f << text;
}

Json split_row_json(const SplitRow& r) {
    return Json{{"rm", cli::diagram_json(r.rm)},
                {"i", r.pattern_index},
                {"pattern", cli::pattern_json(r.pattern)},
                {"q", cli::tableau_json(r.q)}};
}

// subduce ------------------------------------------------------------------

struct SubduceArgs {
    std::string R;
    int m = 0;
    std::string sector;
};

Json run_subduce(const SubduceArgs& a, const Globals& g) {
    const auto R = YoungDiagram::parse(a.R);
    if (a.m < 0 || a.m > R.size()) throw InvalidQuery("need 0 <= m <= |R|");
    std::optional<YoungDiagram> only;
    if (!a.sector.empty()) {
        const auto s = parse_json(a.sector, "--sector");
        if (s.contains("rn")) only = diagram_from(s.at("rn"));
    }
    const Format f{g.with_float};
    Json out = header("subduce");
    out["R"] = cli::diagram_json(R);
    out["m"] = a.m;
    mark_regime(out, R, a.m);

    // Preserve enumeration order of r_n; a sector is separated when all its classes are.
    std::vector<YoungDiagram> order;
    std::map<YoungDiagram, std::pair<bool, std::int64_t>> info;
    if (a.m == 0) {
        order.push_back(R);
        info[R] = {true, 1};
    } else {
        for (const auto& c : enumerate_split_labels(R, a.m)) {
            auto [it, fresh] = info.try_emplace(c.rn, true, 0);
            if (fresh) order.push_back(c.rn);
            it->second.first = it->second.first && c.separated;
            it->second.second += c.multiplicity() * c.rm.dimension();
        }
    }
    Json sectors = Json::array();
    for (const auto& rn : order) {
        if (only && rn != *only) continue;
        const auto [separated, rows] = info.at(rn);
        Json s{{"rn", cli::diagram_json(rn)}, {"separated", separated}};
        if (!separated) {
            s["skipped"] = "removed boxes share a column";
        } else {
            if (static_cast<std::size_t>(rows) > g.budget) {
                throw BudgetExceeded("sector " + rn.to_string() + " has " + std::to_string(rows) + " states");
            }
            s["matrix"] = cli::matrix_json(transformation_matrix(R, a.m, rn), f);
        }
        sectors.push_back(std::move(s));
    }
    if (only && sectors.empty()) throw InvalidQuery("r_n " + only->to_string() + " does not occur");
    out["sectors"] = std::move(sectors);
    return out;
}

// matrix -------------------------------------------------------------------

struct MatrixArgs {
    std::string R;
    int m = 0;
    std::string sigma;
    std::string sector;
};

bool state_matches(const SectorBasis& basis, const SectorState& st, const Json& sel) {
    if (sel.contains("rn") && st.rn != diagram_from(sel.at("rn"))) return false;
    if (sel.contains("rm") && st.split.rm != diagram_from(sel.at("rm"))) return false;
    if (sel.contains("straddle_row") && st.straddle_row() != sel.at("straddle_row").get<int>()) return false;
    if (sel.contains("i") && st.split.pattern_index != sel.at("i").get<int>()) return false;
    if (sel.contains("q") && st.split.q != tableau_from(sel.at("q"))) return false;
    if (sel.contains("t") && basis.tn_tableau(st) != tableau_from(sel.at("t"))) return false;
    return true;
}

Json run_matrix(const MatrixArgs& a, const Globals& g) {
    const auto R = YoungDiagram::parse(a.R);
    const Json sel = a.sector.empty() ? Json::object() : parse_json(a.sector, "--sector");
    const auto frozen = sel.contains("frozen") ? diagram_from(sel.at("frozen")) : YoungDiagram();
    Budget budget;
    budget.max_states = g.budget;
    const auto basis = SectorBasis::build(Sector{R, a.m, frozen}, budget);

    // Labels arrive in the reversed convention; l maps to N + 1 - l.
    const int N = R.size();
    const auto given = Permutation::parse_cycles(a.sigma, N);
    std::vector<int> flip(N);
    for (int i = 1; i <= N; ++i) flip[i - 1] = N + 1 - i;
    const auto sigma = given.conjugated(flip);
    const auto full = element_matrix(basis, sigma, budget);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (state_matches(basis, basis.states()[i], sel)) keep.push_back(i);
    }
    Json out = header("matrix");
    out["R"] = cli::diagram_json(R);
    out["m"] = a.m;
    out["frozen"] = cli::diagram_json(frozen);
    out["sigma"] = given.to_cycles();
    out["sigma_standard"] = sigma.to_cycles();
    mark_regime(out, R, a.m);
    Json states = Json::array();
    for (std::size_t i : keep) {
        const auto& st = basis.states()[i];
        Json s{{"label", basis.label(i)},
               {"rn", cli::diagram_json(st.rn)},
               {"t", cli::tableau_json(basis.tn_tableau(st))},
               {"straddle_row", st.straddle_row()}};
        s.update(split_row_json(st.split));
        states.push_back(std::move(s));
    }
    out["states"] = std::move(states);
    out["matrix"] = cli::matrix_json(full.select(keep, keep), Format{g.with_float});
    return out;
}

// trace --------------------------------------------------------------------

struct TraceArgs {
    std::vector<int> two_row;
    int m = -1;
    std::string R, rn, rm;
    bool oracle = false;
};

Json run_trace(const TraceArgs& a, const Globals& g) {
    const Format f{g.with_float};
    Json out = header("trace");
    if (!a.two_row.empty()) {
        if (a.m < 1) throw InvalidQuery("--two-row needs --m >= 1");
        TwoRowParams t{a.two_row[0], a.two_row[1], a.two_row[2], a.m - a.two_row[2], a.two_row[3], a.m - a.two_row[3]};
        const auto forms = two_row_closed_forms(t);
        out["params"] = Json{{"q1", t.q1}, {"q2", t.q2}, {"n1", t.n1}, {"n2", t.n2}, {"r1", t.r1}, {"r2", t.r2}, {"d", t.d()}};
        out["R"] = cli::diagram_json(t.R());
        out["rn"] = cli::diagram_json(t.rn());
        out["rm"] = cli::diagram_json(t.rm());
        mark_regime(out, t.R(), t.m());
        out["leading"] = cli::rational_json(forms.leading, f);
        out["exact"] = cli::rational_json(forms.exact, f);
        out["exact_as_printed"] = cli::rational_json(forms.exact_as_printed, f);
        out["bound"] = forms.bound ? cli::rational_json(*forms.bound, f) : Json(nullptr);
        out["lambda_m"] = forms.lambda_m;
        out["split_trace"] = cli::rational_json(restricted_trace_straddling(t.R(), t.rn(), t.rm()), f);
        if (a.oracle) out["oracle"] = cli::rational_json(exact_restricted_trace(t.R(), t.rn(), t.rm()), f);
        return out;
    }
    if (a.R.empty() || a.rn.empty() || a.rm.empty()) throw InvalidQuery("trace needs --two-row or all of --R, --rn, --rm");
    const auto R = YoungDiagram::parse(a.R);
    const auto rn = YoungDiagram::parse(a.rn);
    const auto rm = YoungDiagram::parse(a.rm);
    out["R"] = cli::diagram_json(R);
    out["rn"] = cli::diagram_json(rn);
    out["rm"] = cli::diagram_json(rm);
    mark_regime(out, R, rm.size());
    out["split_trace"] = cli::rational_json(restricted_trace_straddling(R, rn, rm), f);
    out["by_tableaux"] = cli::rational_json(restricted_trace_by_tableaux(R, rn, rm), f);
    out["leading"] = cli::rational_json(restricted_trace_leading(R, rn, rm), f);
    if (a.oracle) out["oracle"] = cli::rational_json(exact_restricted_trace(R, rn, rm), f);
    return out;
}

// cg -----------------------------------------------------------------------

struct CgArgs {
    std::string parent, child, tableau, pattern, slots, upper, lower;
    int a = 0;
    int i = 0;
    std::optional<int> j;
};

Json run_cg(const CgArgs& a, const Globals& g) {
    const Format f{g.with_float};
    Json out = header("cg");
    if (!a.parent.empty() || !a.child.empty()) {
        const auto parent = GTPattern::parse(a.parent);
        const auto child = GTPattern::parse(a.child);
        out["kind"] = "fundamental";
        out["parent"] = cli::pattern_json(parent);
        out["a"] = a.a;
        out["child"] = cli::pattern_json(child);
        out["value"] = cli::surd_json(fundamental_cg(parent, a.a, child), f);
    } else if (!a.tableau.empty()) {
        const auto s = StandardTableau::parse(a.tableau);
        const auto m = GTPattern::parse(a.pattern);
        const auto slots = parse_json(a.slots, "--slots").get<std::vector<int>>();
        out["kind"] = "composite";
        out["tableau"] = cli::tableau_json(s);
        out["pattern"] = cli::pattern_json(m);
        out["slots"] = slots;
        out["value"] = cli::surd_json(composite_cg(s, m, slots), f);
    } else if (!a.upper.empty()) {
        ScalarFactorQuery q{parse_json(a.upper, "--upper").get<std::vector<int>>(),
                            parse_json(a.lower, "--lower").get<std::vector<int>>(), a.i, a.j};
        out["kind"] = "scalar";
        out["upper"] = q.upper;
        out["lower"] = q.lower;
        out["i"] = q.i;
        out["j"] = q.j ? Json(*q.j) : Json(nullptr);
        out["value"] = cli::surd_json(scalar_factor(q), f);
    } else {
        throw InvalidQuery("cg needs --parent/--child, --tableau/--pattern/--slots or --upper/--lower");
    }
    return out;
}

// enumerate ----------------------------------------------------------------

struct EnumerateArgs {
    std::string gt, delta, tableaux, R;
    bool split = false;
    int m = -1;
};

Json run_enumerate(const EnumerateArgs& a, const Globals& g) {
    Json out = header("enumerate");
    if (!a.gt.empty()) {
        const auto weight = parse_json(a.gt, "--gt").get<std::vector<int>>();
        std::optional<std::vector<int>> delta;
        if (!a.delta.empty()) delta = parse_json(a.delta, "--delta").get<std::vector<int>>();
        Json pats = Json::array();
        for (const auto& p : enumerate_gt_patterns(weight)) {
            const auto dw = delta_weight(p);
            if (delta && dw != *delta) continue;
            pats.push_back(Json{{"pattern", cli::pattern_json(p)}, {"delta", dw}, {"occupation", occupation(p)}});
        }
        out["weight"] = weight;
        if (delta) out["delta"] = *delta;
        out["count"] = pats.size();
        out["patterns"] = std::move(pats);
    } else if (!a.tableaux.empty()) {
        const auto shape = YoungDiagram::parse(a.tableaux);
        const auto tabs = enumerate_standard_tableaux(shape);
        if (tabs.size() > g.budget) throw BudgetExceeded(std::to_string(tabs.size()) + " tableaux");
        Json list = Json::array();
        for (const auto& t : tabs) list.push_back(cli::tableau_json(t));
        out["shape"] = cli::diagram_json(shape);
        out["count"] = tabs.size();
        out["hook_dimension"] = shape.dimension();
        out["tableaux"] = std::move(list);
    } else if (a.split) {
        if (a.R.empty() || a.m < 0) throw InvalidQuery("--split needs --R and --m");
        const auto R = YoungDiagram::parse(a.R);
        Json classes = Json::array();
        for (const auto& c : enumerate_split_labels(R, a.m)) {
            Json copies = Json::array();
            for (std::size_t k = 0; k < c.copies.size(); ++k) {
                copies.push_back(Json{{"i", c.copy_indices[k]}, {"pattern", cli::pattern_json(c.copies[k])}});
            }
            classes.push_back(Json{{"rn", cli::diagram_json(c.rn)},
                                   {"rm", cli::diagram_json(c.rm)},
                                   {"removed", c.removed},
                                   {"delta", c.delta},
                                   {"multiplicity", c.multiplicity()},
                                   {"separated", c.separated},
                                   {"copies", std::move(copies)}});
        }
        out["R"] = cli::diagram_json(R);
        out["m"] = a.m;
        out["regime_warning"] = regime_warning(R, a.m);
        out["classes"] = std::move(classes);
    } else {
        throw InvalidQuery("enumerate needs --gt, --tableaux or --split");
    }
    return out;
}

// correct ------------------------------------------------------------------

struct CorrectArgs {
    bool two_row = false;
    int d = 0;
    std::string R, rn;
};

std::string symbol_name(const RowPair& rp) { return "d_" + std::to_string(rp.first) + std::to_string(rp.second); }

Json solution_json(const FirstOrderSolution& sol, const Format& f) {
    Json states = Json::array();
    for (const auto& s : sol.states) states.push_back(split_row_json(s));
    Json symbols = Json::array();
    for (const auto& s : sol.symbols) symbols.push_back(symbol_name(s));
    Json terms = Json::array();
    for (std::size_t r = 0; r < sol.states.size(); ++r) {
        for (std::size_t u = 0; u < sol.states.size(); ++u) {
            const auto c = sol.coefficient(u, r);
            bool nonzero = false;
            Json parts = Json::array();
            for (const auto& [rp, v] : c) {
                if (v.is_zero()) continue;
                nonzero = true;
                parts.push_back(Json{{"symbol", symbol_name(rp)}, {"coeff", cli::surd_json(v, f)}});
            }
            if (!nonzero) continue;
            terms.push_back(Json{{"state", r}, {"component", u}, {"text", first_order_to_string(c)}, {"terms", parts}});
        }
    }
    return Json{{"states", states},
                {"symbols", symbols},
                {"solved", sol.solved},
                {"antisymmetric", sol.antisymmetric},
                {"gauge_dimension", sol.gauge_dimension},
                {"cross_sector_terms", sol.cross_sector_terms},
                {"corrections", terms}};
}

Json run_correct(const CorrectArgs& a, const Globals& g) {
    const Format f{g.with_float};
    Json out = header("correct");
    if (a.two_row) {
        if (a.d < 2) throw InvalidQuery("--d must be at least 2");
        // Axial distance d between the two removed boxes.
        const YoungDiagram R({a.d, 1});
        const YoungDiagram rn({a.d - 1});
        const auto sol = first_order_corrections(R, rn);
        out["R"] = cli::diagram_json(R);
        out["rn"] = cli::diagram_json(rn);
        out["d"] = a.d;
        out["solution"] = solution_json(sol, f);
        const auto x = sol.evaluate({{{1, 2}, Rational(a.d)}});
        out["evaluated"] = cli::matrix_json(x, f);
        const auto exact = two_row_exact_states(a.d);
        Json ex{{"symmetric", Json::array()}, {"antisymmetric", Json::array()}};
        for (const auto& v : exact.symmetric) ex["symmetric"].push_back(cli::surd_json(v, f));
        for (const auto& v : exact.antisymmetric) ex["antisymmetric"].push_back(cli::surd_json(v, f));
        out["exact_states"] = std::move(ex);
        const auto fit = two_row_decay({a.d});
        out["deviation"] = fit.deviation.front();
        return out;
    }
    if (a.R.empty() || a.rn.empty()) throw InvalidQuery("correct needs --two-row --d or --R and --rn");
    const auto R = YoungDiagram::parse(a.R);
    const auto rn = YoungDiagram::parse(a.rn);
    out["R"] = cli::diagram_json(R);
    out["rn"] = cli::diagram_json(rn);
    out["solution"] = solution_json(first_order_corrections(R, rn), f);
    return out;
}

// check --------------------------------------------------------------------

Json run_check(const std::string& suite, bool& all_passed) {
    Json out = header("check");
    out["suite"] = suite;
    Json list = Json::array();
    all_passed = true;
    for (const auto& c : run_suite(suite)) {
        all_passed = all_passed && c.passed();
        Json checks = Json::array();
        for (const auto& k : c.checks) {
            checks.push_back(Json{{"name", k.name}, {"passed", k.passed}, {"required", k.required}, {"detail", k.detail}});
        }
        list.push_back(Json{{"id", c.id},
                            {"title", c.title},
                            {"passed", c.passed()},
                            {"within_time_limit", c.time_limit <= 0 || c.seconds <= c.time_limit},
                            {"checks", std::move(checks)}});
    }
    out["criteria"] = std::move(list);
    out["passed"] = all_passed;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split-basis representations of the symmetric group in the long-row limit"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--float,!--exact", g.with_float, "Add float renderings next to exact values");
    app.add_option("--budget", g.budget, "Maximum number of basis states")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write JSON to this file instead of stdout");

    SubduceArgs sub;
    auto* subduce = app.add_subcommand("subduce", "Subduction coefficients of each split sector");
    subduce->add_option("R,--R", sub.R, "Young diagram, e.g. [4,2]")->required();
    subduce->add_option("--m", sub.m, "Boxes in the S_m factor")->required();
    subduce->add_option("--sector", sub.sector, R"(Restrict to {"rn":[...]})");

    MatrixArgs mat;
    auto* matrix = app.add_subcommand("matrix", "Split-basis matrix of a permutation");
    matrix->add_option("--R", mat.R)->required();
    matrix->add_option("--m", mat.m)->required();
    matrix->add_option("--sigma", mat.sigma, "Cycle notation in reversed labels, e.g. (4,5)")->required();
    matrix->add_option("--sector", mat.sector,
                       R"({"frozen":[...]} plus optional filters rn, rm, straddle_row, i, q, t)");

    TraceArgs tr;
    auto* trace = app.add_subcommand("trace", "Restricted trace of the straddling transposition");
    trace->add_option("--two-row", tr.two_row, "q1 q2 n1 r1")->expected(4);
    trace->add_option("--m", tr.m);
    trace->add_option("--R", tr.R);
    trace->add_option("--rn", tr.rn);
    trace->add_option("--rm", tr.rm);
    trace->add_flag("--oracle", tr.oracle, "Also compute the exact trace by brute force");

    CgArgs cg;
    auto* cgcmd = app.add_subcommand("cg", "Clebsch-Gordan coefficients and scalar factors");
    cgcmd->add_option("--parent", cg.parent);
    cgcmd->add_option("--a", cg.a, "Fundamental index 1..p");
    cgcmd->add_option("--child", cg.child);
    cgcmd->add_option("--tableau", cg.tableau);
    cgcmd->add_option("--pattern", cg.pattern);
    cgcmd->add_option("--slots", cg.slots, "[a_m,...,a_1]");
    cgcmd->add_option("--upper", cg.upper);
    cgcmd->add_option("--lower", cg.lower);
    cgcmd->add_option("--i", cg.i);
    cgcmd->add_option("--j", cg.j);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "Patterns, tableaux or split labels");
    enumerate->add_option("--gt", en.gt, "Top row of the patterns");
    enumerate->add_option("--delta", en.delta, "Keep patterns with this Delta weight");
    enumerate->add_option("--tableaux", en.tableaux, "Shape");
    enumerate->add_flag("--split", en.split, "Split labels of --R with --m");
    enumerate->add_option("--R", en.R);
    enumerate->add_option("--m", en.m);

    CorrectArgs co;
    auto* correct = app.add_subcommand("correct", "First-order corrections to the split basis");
    correct->add_flag("--two-row", co.two_row, "Two-row m = 2 benchmark");
    correct->add_option("--d", co.d, "Axial distance");
    correct->add_option("--R", co.R);
    correct->add_option("--rn", co.rn);

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "Run verification suites");
    check->add_option("--suite", suite)->check(CLI::IsMember({"paper", "dims", "convergence", "all"}));

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        bool passed = true;
        Json out;
        if (*subduce) out = run_subduce(sub, g);
        else if (*matrix) out = run_matrix(mat, g);
        else if (*trace) out = run_trace(tr, g);
        else if (*cgcmd) out = run_cg(cg, g);
        else if (*enumerate) out = run_enumerate(en, g);
        else if (*correct) out = run_correct(co, g);
        else out = run_check(suite, passed);
        emit(out, g);
        return passed ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
