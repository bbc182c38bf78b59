#include "pjack/json_io.hpp"

namespace pjack {

using nlohmann::json;

json partition_json(const Partition& la) {
    json a = json::array();
    for (int p : la.parts()) a.push_back(p);
    return a;
}

json qseries_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [key, c] : s.terms())
        terms.push_back(json::array({key.first, rat_str(key.second), c.get_str()}));
    json out;
    out["terms"] = terms;
    out["truncation"] = s.truncation() ? json(rat_str(*s.truncation())) : json(nullptr);
    return out;
}

json symfunc_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [la, c] : f.terms())
        terms.push_back(json::array({partition_json(la), rat_str(c)}));
    json out;
    out["basis"] = f.basis() == Basis::Monomial ? "monomial" : "powersum";
    out["terms"] = terms;
    return out;
}

}  // namespace pjack
