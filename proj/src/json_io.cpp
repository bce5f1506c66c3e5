#include "skewkit/json_io.hpp"

namespace skewkit {

namespace {

Partition partition_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    Partition p;
    for (auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " entries must be integers");
        int v = x.get<int>();
        if (v < 0) throw InvalidInput(std::string(what) + " entries must be nonnegative");
        if (v > 0) p.push_back(v);
    }
    if (!is_partition(p)) throw InvalidInput(std::string(what) + " is not weakly decreasing");
    return p;
}

}  // namespace

CellList cells_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("cells must be an array of [row, col] pairs");
    CellList out;
    for (auto& c : j) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw InvalidInput("each cell must be a [row, col] integer pair");
        out.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return sorted_unique(std::move(out));
}

json cells_to_json(const CellList& cells) {
    json j = json::array();
    for (auto x : cells) j.push_back({x.r, x.c});
    return j;
}

SkewDiagram diagram_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("diagram must be a JSON object");
    if (j.contains("cells")) return SkewDiagram::from_cells(cells_from_json(j["cells"]));
    if (!j.contains("lambda")) throw InvalidInput("diagram needs \"lambda\" or \"cells\"");
    Partition lam = partition_from_json(j["lambda"], "lambda");
    Partition mu = j.contains("mu") ? partition_from_json(j["mu"], "mu") : Partition{};
    return make_skew(lam, mu);
}

SkewDiagram diagram_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return diagram_from_json(j);
}

json diagram_to_json(const SkewDiagram& d) {
    return json{{"lambda", d.lambda()}, {"mu", d.mu()}};
}

json schur_to_json(const SchurPoly& f) {
    json j = json::array();
    for (auto& [p, c] : f.terms()) j.push_back(json{{"partition", p}, {"coeff", c}});
    return j;
}

SchurPoly schur_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expansion must be an array");
    SchurPoly f;
    for (auto& t : j) {
        if (!t.is_object() || !t.contains("partition") || !t.contains("coeff"))
            throw InvalidInput("expansion terms need \"partition\" and \"coeff\"");
        f.add(partition_from_json(t["partition"], "partition"), t["coeff"].get<Coeff>());
    }
    return f;
}

WPlacement placement_from_json(const SkewDiagram& E, const json& a) {
    if (a.is_null() || (a.is_string() && a.get<std::string>() == "empty") ||
        (a.is_array() && a.empty()) || (a.is_object() && a.empty()))
        return empty_placement(E);
    if (a.is_object() && (a.contains("ne") || a.contains("sw"))) {
        if (!a.contains("ne") || !a.contains("sw"))
            throw InvalidInput("anchor spec needs both \"ne\" and \"sw\"");
        return placement_from_cells(E, cells_from_json(a["ne"]), cells_from_json(a["sw"]));
    }
    if (a.is_object()) {
        SkewDiagram W = diagram_from_json(a);
        auto pl = make_placement(E, W);
        if (!pl) throw InvalidInput("W does not lie in both the top and bottom of E");
        return *pl;
    }
    throw InvalidInput("unrecognised anchor spec");
}

WPlacement placement_from_string(const SkewDiagram& E, const std::string& text) {
    json j;
    if (text == "empty" || text.empty()) return empty_placement(E);
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed anchor JSON: ") + e.what());
    }
    return placement_from_json(E, j);
}

json placement_to_json(const WPlacement& pl) {
    return json{{"E", diagram_to_json(pl.E)},
                {"W", diagram_to_json(pl.W)},
                {"ne", cells_to_json(pl.ne)},
                {"sw", cells_to_json(pl.sw)},
                {"shift", {pl.shift.r, pl.shift.c}},
                {"case", std::string(1, case_letter(pl.kase))}};
}

json hypotheses_to_json(const HypothesisReport& rep) {
    static const char* names[5] = {"I", "II", "III", "IV", "V"};
    json j = json::object();
    for (int i = 0; i < 5; ++i) j[names[i]] = json{{"holds", rep.h[i]}, {"witness", rep.why[i]}};
    j["V_required"] = rep.h5_required;
    j["I_to_IV"] = rep.overall_I_to_IV();
    j["I_to_V"] = rep.overall_I_to_V();
    return j;
}

json class_to_json(const EquivalenceClass& cls) {
    json members = json::array();
    for (auto& m : cls.members) members.push_back(diagram_to_json(m));
    return json{{"members", members},
                {"fingerprint", schur_to_json(cls.fingerprint)},
                {"invariants",
                 {{"cells", cls.invariants.cells},
                  {"rows", cls.invariants.rows},
                  {"row_lengths", cls.invariants.row_lengths},
                  {"nw_body", cls.invariants.nw_body}}},
                {"power_of_two", is_power_of_two(cls.members.size())}};
}

json strip_interval_to_json(const StripInterval& s) {
    const char* kind = s.kind == StripInterval::Kind::Ribbon  ? "ribbon"
                       : s.kind == StripInterval::Kind::Empty ? "empty"
                                                              : "undefined";
    json j{{"p", s.p}, {"q", s.q}, {"kind", kind}};
    if (s.kind == StripInterval::Kind::Ribbon)
        j["shape"] = diagram_to_json(SkewDiagram::from_cells(s.cells));
    return j;
}

}  // namespace skewkit
