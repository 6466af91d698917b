#include "parityflow/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace parityflow {

using Json = nlohmann::ordered_json;

namespace {

Json tableau_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) rows.push_back(Json::array({r.kappa, r.xi.to_string(), r.zeta.to_string()}));
    return Json{{"n", t.n()}, {"kind", kind_name(t.kind())}, {"rows", std::move(rows)}};
}

Tableau tableau_from(const Json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "flow" && kind != "clifford") throw std::invalid_argument("unknown tableau kind '" + kind + "'");
    const Json& rows = j.at("rows");
    if (rows.size() != 2 * n + 1) throw std::invalid_argument("tableau dump must have 2n+1 rows");
    std::vector<PauliVec> gen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& r = rows[i];
        unsigned k = r.at(0).get<unsigned>();
        if (k > 3) throw std::invalid_argument("phase exponent must be 0..3");
        PauliVec p = PauliVec::from_bits(k, r.at(1).get<std::string>(), r.at(2).get<std::string>());
        if (p.n() != n) throw std::invalid_argument("row bit string length differs from n");
        if (i == 0) {
            if (!(p == PauliVec(n, 1))) throw std::invalid_argument("row 0 must be (1|0|0)");
            continue;
        }
        gen.push_back(std::move(p));
    }
    return Tableau::from_rows(kind == "flow" ? Kind::Flow : Kind::Clifford, std::move(gen));
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string tableau_to_json(const Tableau& t, int indent) { return dump(tableau_json(t), indent); }

Tableau tableau_from_json(std::string_view text) { return tableau_from(Json::parse(text)); }

namespace {

Json combined_json(const CombinedTableau& ct) {
    Json j = tableau_json(ct.flow());
    Json push = Json::array();
    for (auto k : ct.push_phases()) push.push_back(k);
    j["push_phases"] = std::move(push);
    return j;
}

}  // namespace

std::string combined_to_json(const CombinedTableau& ct, int indent) { return dump(combined_json(ct), indent); }

CombinedTableau combined_from_json(std::string_view text) {
    Json j = Json::parse(text);
    Tableau flow = tableau_from(j);
    std::vector<std::uint8_t> push;
    for (const auto& k : j.at("push_phases")) {
        unsigned v = k.get<unsigned>();
        if (v > 3) throw std::invalid_argument("phase exponent must be 0..3");
        push.push_back(static_cast<std::uint8_t>(v));
    }
    return CombinedTableau::from_parts(std::move(flow), std::move(push));
}

std::string timeline_to_json(const Circuit& c, const Timeline& tl, int indent) {
    LabelStyle st = tl.marks.style(c.names);
    LabelStyle physical;
    physical.names = c.names;
    LabelStyle logical;
    for (std::size_t q = 0; q < c.names.size(); ++q)
        if (!tl.marks.is_aux(q)) logical.names.push_back(c.names[q]);

    Json reports = Json::array();
    for (const auto& e : tl.reports) {
        Json r{{"step", e.step},
               {"angle", e.angle},
               {"axis", render_label(e.axis, &physical)},
               {"raw", render_label(e.report.raw, &st)},
               {"allowed", e.report.allowed}};
        if (e.report.logical) r["logical"] = render_label(*e.report.logical, &logical);
        Json viol = Json::array();
        for (auto a : e.report.violating_aux) viol.push_back(c.names[a]);
        r["violating_aux"] = std::move(viol);
        reports.push_back(std::move(r));
    }
    Json snaps = Json::array();
    for (const auto& s : tl.snapshots) {
        snaps.push_back(Json{{"reason", s.reason},
                             {"step", s.step},
                             {"gates", s.gates},
                             {"header", render_header(s.state)},
                             {"tableau", combined_json(s.state)}});
    }
    Json j{{"qubits", c.names}, {"reports", std::move(reports)}, {"snapshots", std::move(snaps)}};
    return dump(j, indent);
}

}  // namespace parityflow
