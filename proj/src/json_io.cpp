#include "altlink/json_io.hpp"

#include "altlink/ata.hpp"

namespace altlink {

namespace {
constexpr int kSchema = 1;
} // namespace

ordered_json diagram_json(const LinkDiagram& d) {
    ordered_json j;
    j["schema"] = kSchema;
    j["crossings"] = ordered_json::array();
    for (int c = 0; c < d.num_crossings(); ++c) {
        const Crossing& x = d.crossings()[static_cast<std::size_t>(c)];
        j["crossings"].push_back({{"id", c}, {"slots", x.arcs}, {"sign", x.sign}});
    }
    j["arcs"] = d.arc_labels();
    j["faces"] = ordered_json::array();
    for (int f = 0; f < d.num_faces(); ++f) {
        ordered_json boundary = ordered_json::array();
        for (const Corner& corner : d.faces()[static_cast<std::size_t>(f)])
            boundary.push_back({corner.crossing, corner.quadrant});
        j["faces"].push_back(
            {{"id", f}, {"boundary", boundary}, {"color", d.is_black(f) ? "black" : "white"}});
    }
    j["components"] = d.num_components();
    ordered_json signs = ordered_json::array();
    for (int c = 0; c < d.num_crossings(); ++c) signs.push_back(d.sign(c));
    j["signs"] = signs;
    return j;
}

ordered_json census_json(const SpaceCensus& census) {
    ordered_json j;
    j["schema"] = kSchema;
    j["s"] = census.s;
    j["c"] = census.c;
    j["c_plus"] = census.c_plus;
    j["c_minus"] = census.c_minus;
    j["r"] = census.r;
    j["r_plus"] = census.r_plus;
    j["r_minus"] = census.r_minus;
    j["alternative"] = census.alternative;
    j["spaces"] = ordered_json::array();
    for (const SeifertSpace& sp : census.spaces)
        j["spaces"].push_back(
            {{"regions", sp.regions}, {"crossings", sp.crossings}, {"sign", to_string(sp.sign)}});
    return j;
}

ordered_json states_json(const std::vector<KauffmanState>& states) {
    ordered_json arr = ordered_json::array();
    for (const KauffmanState& st : states) {
        ordered_json assignment = ordered_json::array();
        for (std::size_t c = 0; c < st.assignment.size(); ++c)
            assignment.push_back(
                {static_cast<int>(c), st.assignment[c].region, st.assignment[c].quadrant});
        arr.push_back({{"assignment", assignment}, {"fil", st.fil.str()}, {"gr", st.gr.str()}});
    }
    return arr;
}

ordered_json enumeration_json(const DecoratedDiagram& dd,
                              const std::vector<KauffmanState>& states) {
    ordered_json j;
    j["schema"] = kSchema;
    j["edge"] = dd.marked_edge;
    j["count"] = states.size();
    j["states"] = states_json(states);
    return j;
}

ordered_json top_states_json(const DecoratedDiagram& dd,
                             const std::vector<KauffmanState>& states, bool alternative) {
    ordered_json report;
    report["fil_max"] = states.empty() ? ordered_json() : ordered_json(states.front().fil.str());
    bool uniform = !states.empty();
    for (const KauffmanState& st : states) uniform = uniform && st.gr == states.front().gr;
    report["gr_max"] = uniform ? ordered_json(states.front().gr.str()) : ordered_json();
    report["count"] = states.size();
    if (alternative) {
        const SpaceCensus census = seifert_spaces(dd.diagram);
        const int n = dd.diagram.num_components();
        report["formula_fil_max"] = fil_max_formula(census, n).str();
        report["formula_gr_max"] = gr_max_formula(census, n).str();
    } else {
        report["formula_fil_max"] = nullptr;
        report["formula_gr_max"] = nullptr;
    }
    ordered_json j;
    j["schema"] = kSchema;
    j["edge"] = dd.marked_edge;
    j["alternative"] = alternative;
    j["report"] = report;
    j["states"] = states_json(states);
    return j;
}

ordered_json report_json(const TopReport& r) {
    ordered_json checks = ordered_json::array();
    for (const NamedCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    ordered_json j;
    j["schema"] = kSchema;
    j["alternative"] = r.alternative;
    j["components"] = r.components;
    j["chi"] = r.chi;
    j["fil_max"] = r.fil_max.str();
    j["gr_max"] = r.gr_max ? ordered_json(r.gr_max->str()) : ordered_json();
    j["rank"] = r.rank;
    j["genus_bound"] = r.genus_bound.str();
    j["fibred"] = r.fibred ? ordered_json(*r.fibred) : ordered_json();
    j["alexander"] = r.alexander.str();
    j["monic"] = r.monic ? ordered_json(*r.monic) : ordered_json();
    j["checks"] = checks;
    j["all_checks_passed"] = r.all_checks_passed();
    return j;
}

ordered_json verification_json(const TopLevelVerification& v) {
    ordered_json checks = ordered_json::array();
    for (const NamedCheck& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    ordered_json j;
    j["schema"] = kSchema;
    j["checks"] = checks;
    j["all_passed"] = v.all_passed();
    if (v.link_state_sum_agrees) j["link_state_sum_agrees"] = *v.link_state_sum_agrees;
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace altlink
