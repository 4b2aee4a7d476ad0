#include "powersum/certificate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace powersum::dissect {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 7> kNames{{
    {Construction::GaussRect, "GAUSS_RECT"},
    {Construction::ThreePyr2D, "THREE_PYR_2D"},
    {Construction::Nicomachus4D2D, "NICOMACHUS_4D_2D"},
    {Construction::FivePyrLayers, "FIVE_PYR_LAYERS"},
    {Construction::Step2Reshape, "STEP2_RESHAPE"},
    {Construction::Step3Scissor, "STEP3_SCISSOR"},
    {Construction::Step4Top, "STEP4_TOP"},
}};

struct Axis {
    std::vector<QuadExt> coords;

    void add(const QuadExt& v) { coords.push_back(v); }
    void finish() {
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    }
    std::size_t index(const QuadExt& v) const {
        return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), v) - coords.begin());
    }
    std::size_t cells() const { return coords.empty() ? 0 : coords.size() - 1; }
};

// Cover counts over the compressed grid, filled with a 2D difference array.
class Coverage {
public:
    Coverage(const Axis& xs, const Axis& ys)
        : xs_(xs), ys_(ys), w_(xs.cells()), h_(ys.cells()), diff_((w_ + 1) * (h_ + 1), 0) {}

    void add(const Rect& r) {
        const auto x0 = xs_.index(r.x), x1 = xs_.index(r.right());
        const auto y0 = ys_.index(r.y), y1 = ys_.index(r.top());
        at(x0, y0) += 1;
        at(x1, y0) -= 1;
        at(x0, y1) -= 1;
        at(x1, y1) += 1;
    }

    std::vector<int> counts() const {
        std::vector<int> out(w_ * h_, 0);
        std::vector<int> acc = diff_;
        for (std::size_t j = 0; j <= h_; ++j)
            for (std::size_t i = 0; i <= w_; ++i) {
                int v = acc[j * (w_ + 1) + i];
                if (i > 0) v += acc[j * (w_ + 1) + i - 1];
                if (j > 0) v += acc[(j - 1) * (w_ + 1) + i];
                if (i > 0 && j > 0) v -= acc[(j - 1) * (w_ + 1) + i - 1];
                acc[j * (w_ + 1) + i] = v;
                if (i < w_ && j < h_) out[j * w_ + i] = v;
            }
        return out;
    }

private:
    int& at(std::size_t i, std::size_t j) { return diff_[j * (w_ + 1) + i]; }

    const Axis& xs_;
    const Axis& ys_;
    std::size_t w_, h_;
    std::vector<int> diff_;
};

bool positive(const Rect& r) { return r.w.sign() > 0 && r.h.sign() > 0; }

CheckReport fail(CheckStatus s, std::string message) {
    CheckReport r;
    r.status = s;
    r.message = std::move(message);
    return r;
}

bool contains(const Rect& outer, const Rect& inner) {
    return outer.x <= inner.x && inner.right() <= outer.right() && outer.y <= inner.y
        && inner.top() <= outer.top();
}

std::string describe(const Rect& r) {
    return "[" + r.x.to_string() + ", " + r.right().to_string() + "] x [" + r.y.to_string() + ", "
         + r.top().to_string() + "]";
}

}  // namespace

std::string_view construction_name(Construction c) {
    for (const auto& [k, v] : kNames)
        if (k == c) return v;
    return "UNKNOWN";
}

std::optional<Construction> construction_from_name(std::string_view name) {
    for (const auto& [k, v] : kNames)
        if (v == name) return k;
    return std::nullopt;
}

const std::vector<Construction>& all_constructions() {
    static const std::vector<Construction> all = [] {
        std::vector<Construction> v;
        for (const auto& [k, name] : kNames) v.push_back(k);
        return v;
    }();
    return all;
}

std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Overlap: return "overlap";
    case CheckStatus::Uncovered: return "uncovered";
    case CheckStatus::OutsideTarget: return "outside-target";
    case CheckStatus::SourceOverlap: return "source-overlap";
    case CheckStatus::LeftoverMismatch: return "leftover-mismatch";
    case CheckStatus::AreaMismatch: return "area-mismatch";
    case CheckStatus::Malformed: return "malformed";
    }
    return "unknown";
}

std::string CheckReport::to_string() const {
    if (passed()) return "PASS";
    std::ostringstream os;
    os << "FAIL " << status_name(status);
    if (!layer.empty()) os << " in layer " << layer;
    if (interval) os << " at " << describe(*interval);
    if (!piece_id.empty()) os << " (piece " << piece_id << ")";
    if (!message.empty()) os << ": " << message;
    return os.str();
}

QuadExt DissectionCertificate::source_area() const {
    QuadExt total;
    for (const auto& p : placements) total += p.source.area();
    return total;
}

QuadExt DissectionCertificate::target_area() const {
    QuadExt total;
    for (const auto& t : targets) total += t.region.area();
    return total;
}

QuadExt DissectionCertificate::leftover_area() const {
    QuadExt total;
    for (const auto& t : leftovers) total += t.region.area();
    return total;
}

CheckReport check_cover(const std::vector<Rect>& pieces, const std::vector<Rect>& region) {
    for (const auto* set : {&pieces, &region})
        for (const auto& r : *set)
            if (!positive(r)) return fail(CheckStatus::Malformed, "rect with non-positive size " + describe(r));

    Axis xs, ys;
    for (const auto* set : {&pieces, &region})
        for (const auto& r : *set) {
            xs.add(r.x);
            xs.add(r.right());
            ys.add(r.y);
            ys.add(r.top());
        }
    xs.finish();
    ys.finish();

    Coverage piece_cover(xs, ys), region_cover(xs, ys);
    for (const auto& r : pieces) piece_cover.add(r);
    for (const auto& r : region) region_cover.add(r);
    const auto pc = piece_cover.counts();
    const auto rc = region_cover.counts();

    // Worst kind of failure wins; within a kind, the first cell scanning
    // rows upward from the bottom-left.
    constexpr std::array<CheckStatus, 4> rank{CheckStatus::Malformed, CheckStatus::Overlap,
                                              CheckStatus::OutsideTarget, CheckStatus::Uncovered};
    std::array<std::optional<std::pair<std::size_t, std::size_t>>, 4> first;
    const std::size_t w = xs.cells();
    for (std::size_t j = 0; j < ys.cells(); ++j)
        for (std::size_t i = 0; i < w; ++i) {
            const int p = pc[j * w + i];
            const int t = rc[j * w + i];
            std::size_t k = rank.size();
            if (t > 1) k = 0;
            else if (p > 1) k = 1;
            else if (p == 1 && t == 0) k = 2;
            else if (p == 0 && t == 1) k = 3;
            if (k < rank.size() && !first[k]) first[k] = std::make_pair(i, j);
        }
    for (std::size_t k = 0; k < rank.size(); ++k) {
        if (!first[k]) continue;
        const auto [i, j] = *first[k];
        CheckReport r = fail(rank[k], rank[k] == CheckStatus::Malformed ? "declared region overlaps itself" : "");
        r.interval = Rect{xs.coords[i], ys.coords[j], xs.coords[i + 1] - xs.coords[i],
                          ys.coords[j + 1] - ys.coords[j]};
        return r;
    }
    return {};
}

bool interior_disjoint(const std::vector<Rect>& rects) {
    const auto r = check_cover(rects, {});
    return r.status == CheckStatus::Pass || r.status == CheckStatus::OutsideTarget;
}

CheckReport check_certificate(const DissectionCertificate& c) {
    // (a) transforms are rigid motions; all geometry well-formed.
    for (const auto& p : c.placements) {
        if (!p.transform.valid()) {
            auto r = fail(CheckStatus::Malformed, "quarter_turns outside 0..3");
            r.piece_id = p.piece_id;
            return r;
        }
        if (p.source.rects.empty()) {
            auto r = fail(CheckStatus::Malformed, "empty piece");
            r.piece_id = p.piece_id;
            return r;
        }
        for (const auto& rect : p.source.rects)
            if (!positive(rect)) {
                auto r = fail(CheckStatus::Malformed, "rect with non-positive size " + describe(rect));
                r.piece_id = p.piece_id;
                return r;
            }
    }

    std::map<std::string, std::vector<Rect>> declared;
    std::set<std::string> leftover_layers;
    for (const auto* list : {&c.targets, &c.leftovers})
        for (const auto& lr : *list) {
            if (declared.count(lr.layer) != 0) {
                auto r = fail(CheckStatus::Malformed, "layer declared twice");
                r.layer = lr.layer;
                return r;
            }
            declared[lr.layer] = lr.region.rects;
            if (list == &c.leftovers) leftover_layers.insert(lr.layer);
        }

    // (c) pieces partition their source material.
    std::map<std::string, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < c.placements.size(); ++i)
        by_source[c.placements[i].source_layer].push_back(i);
    for (const auto& [layer, idx] : by_source) {
        std::vector<Rect> rects;
        for (auto i : idx)
            for (const auto& r : c.placements[i].source.rects) rects.push_back(r);
        auto rep = check_cover(rects, {});
        if (rep.status == CheckStatus::Overlap) {
            rep.status = CheckStatus::SourceOverlap;
            rep.layer = layer;
            for (auto i : idx)
                for (const auto& r : c.placements[i].source.rects)
                    if (rep.interval && contains(r, *rep.interval)) rep.piece_id = c.placements[i].piece_id;
            rep.message = "pieces cut from the same source overlap";
            return rep;
        }
    }

    // (b), (d) moved pieces tile each declared layer exactly.
    std::map<std::string, std::vector<std::size_t>> by_destination;
    for (std::size_t i = 0; i < c.placements.size(); ++i) {
        const auto& p = c.placements[i];
        if (declared.count(p.destination_layer) == 0) {
            auto r = fail(CheckStatus::OutsideTarget, "destination layer is not declared");
            r.layer = p.destination_layer;
            r.piece_id = p.piece_id;
            return r;
        }
        by_destination[p.destination_layer].push_back(i);
    }
    for (const auto* list : {&c.targets, &c.leftovers})
        for (const auto& lr : *list) {
            std::vector<Rect> images;
            std::vector<std::pair<Rect, std::size_t>> owners;
            for (auto i : by_destination[lr.layer])
                for (const auto& r : c.placements[i].image().rects) {
                    images.push_back(r);
                    owners.emplace_back(r, i);
                }
            auto rep = check_cover(images, lr.region.rects);
            if (rep.passed()) continue;
            rep.layer = lr.layer;
            if (rep.interval)
                for (const auto& [r, i] : owners)
                    if (contains(r, *rep.interval)) {
                        rep.piece_id = c.placements[i].piece_id;
                        break;
                    }
            if (list == &c.leftovers && rep.status != CheckStatus::Malformed) {
                rep.message = std::string(status_name(rep.status)) + " against declared leftover";
                rep.status = CheckStatus::LeftoverMismatch;
            }
            return rep;
        }

    const QuadExt src = c.source_area();
    const QuadExt dst = c.target_area() + c.leftover_area();
    if (src != dst)
        return fail(CheckStatus::AreaMismatch,
                    "source area " + src.to_string() + " != target + leftover area " + dst.to_string());
    return {};
}

}  // namespace powersum::dissect
