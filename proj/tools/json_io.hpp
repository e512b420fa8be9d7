#pragma once

#include <string>

#include <json.hpp>

#include "subduction/gt.hpp"
#include "subduction/matrix.hpp"
#include "subduction/tableaux.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

struct Format {
    bool with_float = false;
};

inline Json surd_json(const subduction::SurdSum& s, const Format& f) {
    Json terms = Json::array();
    for (const auto& t : s.terms()) {
        terms.push_back({{"num", t.coeff.num()}, {"den", t.coeff.den()}, {"radicand", t.radicand}});
    }
    Json out{{"exact", s.to_string()}, {"terms", terms}};
    if (f.with_float) out["float"] = s.to_double();
    return out;
}

inline Json rational_json(const subduction::Rational& r, const Format& f) {
    Json out{{"exact", r.to_string()}, {"num", r.num()}, {"den", r.den()}};
    if (f.with_float) out["float"] = r.to_double();
    return out;
}

inline Json matrix_json(const subduction::CoeffMatrix& m, const Format& f) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(surd_json(m.at(i, j), f));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", entries}};
}

inline Json diagram_json(const subduction::YoungDiagram& d) { return Json(d.rows()); }
inline Json tableau_json(const subduction::StandardTableau& t) { return Json(t.rows()); }
inline Json pattern_json(const subduction::GTPattern& p) { return Json(p.rows()); }

}  // namespace cli
