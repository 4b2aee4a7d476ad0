#include "powersum/certificate.hpp"

#include <json.hpp>

namespace powersum::dissect {

namespace {

using json = nlohmann::ordered_json;

json rect_json(const Rect& r) {
    return json{{"x", r.x.to_string()}, {"y", r.y.to_string()}, {"w", r.w.to_string()},
                {"h", r.h.to_string()}};
}

json region_json(const Region& r) {
    json rects = json::array();
    for (const auto& rect : r.rects) rects.push_back(rect_json(rect));
    return json{{"label", r.label}, {"rects", std::move(rects)}};
}

json layer_json(const LayerRegion& lr) {
    json j = region_json(lr.region);
    return json{{"layer", lr.layer}, {"label", j["label"]}, {"rects", j["rects"]}};
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw MalformedCertificate(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw MalformedCertificate(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

QuadExt number(const json& j, const char* key) {
    const std::string s = text(j, key);
    try {
        return QuadExt::parse(s);
    } catch (const std::exception& e) {
        throw MalformedCertificate(std::string("field '") + key + "': " + e.what());
    }
}

const json& array(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw MalformedCertificate(std::string("field '") + key + "' must be an array");
    return v;
}

Region read_region(const json& j) {
    Region r;
    r.label = text(j, "label");
    for (const auto& rj : array(j, "rects"))
        r.rects.push_back({number(rj, "x"), number(rj, "y"), number(rj, "w"), number(rj, "h")});
    return r;
}

std::vector<LayerRegion> read_layers(const json& j, const char* key) {
    std::vector<LayerRegion> out;
    for (const auto& lj : array(j, key)) out.push_back({text(lj, "layer"), read_region(lj)});
    return out;
}

}  // namespace

std::string to_json(const DissectionCertificate& c) {
    json placements = json::array();
    for (const auto& p : c.placements) {
        placements.push_back(json{
            {"piece_id", p.piece_id},
            {"source_layer", p.source_layer},
            {"source", region_json(p.source)},
            {"transform",
             json{{"quarter_turns", p.transform.quarter_turns},
                  {"reflect", p.transform.reflect},
                  {"dx", p.transform.dx.to_string()},
                  {"dy", p.transform.dy.to_string()}}},
            {"destination_layer", p.destination_layer},
        });
    }
    json targets = json::array();
    for (const auto& t : c.targets) targets.push_back(layer_json(t));
    json leftovers = json::array();
    for (const auto& t : c.leftovers) leftovers.push_back(layer_json(t));
    json doc{{"construction", std::string(construction_name(c.construction))},
             {"n", c.n},
             {"placements", std::move(placements)},
             {"targets", std::move(targets)},
             {"leftovers", std::move(leftovers)}};
    return doc.dump(1) + "\n";
}

DissectionCertificate from_json(std::string_view input) {
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::parse_error& e) {
        throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
    }
    DissectionCertificate c;
    const auto name = text(doc, "construction");
    const auto kind = construction_from_name(name);
    if (!kind) throw MalformedCertificate("unknown construction '" + name + "'");
    c.construction = *kind;
    const json& n = field(doc, "n");
    if (!n.is_number_integer()) throw MalformedCertificate("field 'n' must be an integer");
    c.n = n.get<long>();

    for (const auto& pj : array(doc, "placements")) {
        Placement p;
        p.piece_id = text(pj, "piece_id");
        p.source_layer = text(pj, "source_layer");
        p.source = read_region(field(pj, "source"));
        const json& tj = field(pj, "transform");
        const json& q = field(tj, "quarter_turns");
        const json& refl = field(tj, "reflect");
        if (!q.is_number_integer() || !refl.is_boolean())
            throw MalformedCertificate("transform needs integer quarter_turns and boolean reflect");
        p.transform.quarter_turns = q.get<int>();
        if (!p.transform.valid()) throw MalformedCertificate("quarter_turns outside 0..3");
        p.transform.reflect = refl.get<bool>();
        p.transform.dx = number(tj, "dx");
        p.transform.dy = number(tj, "dy");
        p.destination_layer = text(pj, "destination_layer");
        c.placements.push_back(std::move(p));
    }
    c.targets = read_layers(doc, "targets");
    c.leftovers = read_layers(doc, "leftovers");
    return c;
}

}  // namespace powersum::dissect
