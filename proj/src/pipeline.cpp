#include "powersum/pipeline.hpp"

#include <map>
#include <set>

#include "powersum/constructions.hpp"

namespace powersum::dissect {

namespace {

// Layers a stage may take from outside the chain: the two copies of the
// top layer and the two pyramids of squares of the doubling.
const std::set<std::string> kExternal{"copyA", "copyB", "squaresA", "squaresB"};

CheckReport handover_failure(const std::string& layer, std::string message) {
    CheckReport r;
    r.status = CheckStatus::Uncovered;
    r.layer = layer;
    r.message = std::move(message);
    return r;
}

}  // namespace

PipelineFailure::PipelineFailure(std::string stage, CheckReport report)
    : std::runtime_error(stage + ": " + report.to_string()), stage_(std::move(stage)), report_(std::move(report)) {}

figurate::IdentityReport full_theorem_report(long n, std::vector<StageResult>* stages) {
    using figurate::Identity;
    const std::vector<Construction> order{Construction::FivePyrLayers, Construction::Step2Reshape,
                                          Construction::Step3Scissor, Construction::Step4Top};
    std::map<std::string, std::vector<Rect>> available;
    std::map<Construction, DissectionCertificate> certs;

    for (auto c : order) {
        const std::string stage(construction_name(c));
        auto cert = generate(c, n);
        auto report = check_certificate(cert);
        if (stages) stages->push_back({c, report, cert.source_area(), cert.target_area(), cert.leftover_area()});
        if (!report.passed()) throw PipelineFailure(stage, report);

        std::map<std::string, std::vector<Rect>> consumed;
        for (const auto& p : cert.placements)
            for (const auto& r : p.source.rects) consumed[p.source_layer].push_back(r);
        for (const auto& [layer, rects] : consumed) {
            if (kExternal.count(layer)) continue;
            auto it = available.find(layer);
            if (it == available.end()) {
                if (c == order.front()) continue;
                throw PipelineFailure(stage, handover_failure(layer, "source layer not produced by an earlier stage"));
            }
            auto cover = check_cover(rects, it->second);
            if (!cover.passed()) {
                cover.layer = layer;
                cover.message = "pieces do not use up the layer handed over";
                throw PipelineFailure(stage, cover);
            }
            available.erase(it);
        }
        for (const auto* list : {&cert.targets, &cert.leftovers})
            for (const auto& lr : *list) available[lr.layer] = lr.region.rects;
        certs.emplace(c, std::move(cert));
    }

    // Both copies of the top layer have the shape of the excess layer.
    const auto& five = certs.at(Construction::FivePyrLayers);
    std::vector<Rect> excess;
    for (const auto& t : five.targets)
        if (t.layer == "excess") excess = t.region.rects;
    const auto& top = certs.at(Construction::Step4Top);
    for (const char* copy : {"copyA", "copyB"}) {
        std::vector<Rect> rects;
        for (const auto& p : top.placements)
            if (p.source_layer == copy) rects.insert(rects.end(), p.source.rects.begin(), p.source.rects.end());
        auto cover = check_cover(rects, excess);
        if (!cover.passed()) {
            cover.layer = copy;
            cover.message = "copy differs from the excess layer";
            throw PipelineFailure(std::string(construction_name(Construction::Step4Top)), cover);
        }
    }

    // Area bookkeeping on the certificates: the scissored rectangles plus
    // half of (twice the top layer plus twice the leftovers).
    const auto& scissor = certs.at(Construction::Step3Scissor);
    QuadExt excess_area;
    for (const auto& r : excess) excess_area += r.area();
    const QuadExt layer = QuadExt(2) * (excess_area + scissor.leftover_area());
    const QuadExt x = exact::strip_root();
    const QuadExt N(n);
    const QuadExt adjusted = N * (N + QuadExt(1)) * (N - x) * (N + QuadExt(1) + x);
    if (layer != adjusted) {
        CheckReport r;
        r.status = CheckStatus::AreaMismatch;
        r.message = "doubled top layer " + layer.to_string() + " != " + adjusted.to_string();
        throw PipelineFailure(std::string(construction_name(Construction::Step4Top)), r);
    }

    figurate::IdentityReport out;
    out.identity = Identity::FinalAssembly;
    out.parameters = {{"n", n}};
    out.lhs = QuadExt(5) * QuadExt(Rat(figurate::sum_powers_bruteforce(4, n)));
    const QuadExt assembled = scissor.target_area() + layer / QuadExt(2);
    out.rhs = (N + QuadExt(Rat(1, 2))) * adjusted;
    out.holds = out.lhs == out.rhs && assembled == out.lhs && five.source_area() == out.lhs;
    if (!out.holds) {
        CheckReport r;
        r.status = CheckStatus::AreaMismatch;
        r.message = "5 S_4 = " + out.lhs.to_string() + ", assembled " + assembled.to_string() + ", formula "
                  + out.rhs.to_string();
        throw PipelineFailure("FINAL_ASSEMBLY", r);
    }
    return out;
}

}  // namespace powersum::dissect
