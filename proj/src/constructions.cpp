#include "powersum/constructions.hpp"

#include <map>

namespace powersum::dissect {

namespace {

const QuadExt kHalf{Rat(1, 2)};

QuadExt Q(long v) { return QuadExt(v); }

Rect rect(QuadExt x, QuadExt y, QuadExt w, QuadExt h) {
    return {std::move(x), std::move(y), std::move(w), std::move(h)};
}

Region square(long side, std::string label) {
    return {{rect(Q(0), Q(0), Q(side), Q(side))}, std::move(label)};
}

std::string cell_id(long row, long col) { return std::to_string(row) + "," + std::to_string(col); }

void require_n(Construction c, long n) {
    if (n < 1 || n > max_supported_n(c))
        throw UnsupportedN(std::string(construction_name(c)) + ": n must be in 1.."
                           + std::to_string(max_supported_n(c)) + ", got " + std::to_string(n));
}

class Builder {
public:
    Builder(Construction c, long n) {
        cert_.construction = c;
        cert_.n = n;
    }

    void place(std::string id, std::string source_layer, Region source, RigidTransform t,
               std::string destination) {
        cert_.placements.push_back(
            {std::move(id), std::move(source_layer), std::move(source), std::move(t), std::move(destination)});
    }
    void target(std::string layer, Region r) { cert_.targets.push_back({std::move(layer), std::move(r)}); }
    void leftover(std::string layer, Region r) { cert_.leftovers.push_back({std::move(layer), std::move(r)}); }

    DissectionCertificate take() { return std::move(cert_); }

private:
    DissectionCertificate cert_;
};

// Staircase with steps q..n mirrored into the right columns of the frame:
// column n-j holds y in [j, n).
RigidTransform red_staircase_motion(long n) { return {1, true, Q(n + 1), Q(n)}; }

// The almost-square frame of side n+1 built from a q x q square (top-left)
// and two staircases with steps q..n. Leaves the top-row cells x = q..n
// empty.
struct FrameSources {
    std::string square_layer, square_label;
    std::string blue_layer, red_layer;
};

void frame_pieces(Builder& b, const std::string& id_prefix, const std::string& dest, long n, long q,
                  const FrameSources& src, int& k) {
    b.place(id_prefix + std::to_string(k++), src.square_layer, square(q, src.square_label),
            RigidTransform::translation(Q(0), Q(n + 1 - q)), dest);
    b.place(id_prefix + std::to_string(k++), src.blue_layer, staircase(n, q, "blue"), RigidTransform{}, dest);
    b.place(id_prefix + std::to_string(k++), src.red_layer, staircase(n, q, "red"), red_staircase_motion(n),
            dest);
}

Region full_square(long side, std::string label = "frame") { return square(side, std::move(label)); }

// Position of entry e (0..2t-2) of the corner of a t x t grid: the top
// row from the left, then the right column downward.
std::pair<long, long> corner_entry(long t, long e) {
    if (e < t) return {e, t - 1};
    return {t - 1, 2 * t - 2 - e};
}

// Corner of t x t squares: [0, t^2)^2 minus [0, t(t-1))^2.
std::vector<Rect> corner_of_squares(long t) {
    std::vector<Rect> rs{rect(Q(0), Q(t * (t - 1)), Q(t * t), Q(t))};
    if (t > 1) rs.push_back(rect(Q(t * (t - 1)), Q(0), Q(t), Q(t * (t - 1))));
    return rs;
}

Region nested_corners(long n, std::string label) {
    Region r{{}, std::move(label)};
    for (long t = 1; t <= n; ++t)
        for (auto& rc : corner_of_squares(t)) r.rects.push_back(std::move(rc));
    return r;
}

// Three-pyramid layers; with `split` false the squares stay whole and
// nothing moves between layers.
DissectionCertificate three_pyramids_impl(long n, bool split) {
    Builder b(Construction::ThreePyr2D, n);
    const std::string name(construction_name(Construction::ThreePyr2D));
    for (long m = 1; m <= n; ++m) {
        const std::string layer = "L" + std::to_string(m);
        const std::string prefix = name + "/" + layer + "/0,0/";
        int k = 0;
        const std::string sq_layer = "yellow/" + std::to_string(m);
        if (!split) {
            frame_pieces(b, prefix, layer, n, m,
                         {sq_layer, "yellow", "blue/" + std::to_string(m), "red/" + std::to_string(m)}, k);
            b.target(layer, full_square(n + 1));
            continue;
        }
        b.place(prefix + std::to_string(k++), "blue/" + std::to_string(m), staircase(n, m, "blue"),
                RigidTransform{}, layer);
        b.place(prefix + std::to_string(k++), "red/" + std::to_string(m), staircase(n, m, "red"),
                red_staircase_motion(n), layer);
        // The square sits at (0, n+1-m); its top row is the frame's top row.
        const auto lift = RigidTransform::translation(Q(0), Q(n + 1 - m));
        if (m > 1)
            b.place(prefix + std::to_string(k++), sq_layer,
                    {{rect(Q(0), Q(0), Q(m), Q(m - 1))}, "yellow"}, lift, layer);
        b.place(prefix + std::to_string(k++), sq_layer,
                {{rect(Q(0), Q(m - 1), Q(m), kHalf)}, "yellow"}, lift, layer);
        // Upper half of the top row goes to the gap of layer n+1-m, which
        // is exactly m long.
        const long partner = n + 1 - m;
        b.place(prefix + std::to_string(k++), sq_layer,
                {{rect(Q(0), Q(m) - kHalf, Q(m), kHalf)}, "yellow"},
                RigidTransform::translation(Q(partner), Q(n - m) + kHalf), "L" + std::to_string(partner));
        b.target(layer, {{rect(Q(0), Q(0), Q(n + 1), Q(n) + kHalf)}, "frame"});
    }
    return b.take();
}

// Green row-0 squares j x j, cut into unit cells, fill cell x = j of the
// top row in every frame whose gap starts at or before j.
struct GreenFill {
    std::string source_prefix;  // e.g. "" or "L3/"
    std::string dest_prefix;
    std::string id_prefix;
};

void fill_top_gaps(Builder& b, long n, long first_j, const GreenFill& g) {
    for (long j = first_j; j <= n; ++j) {
        const std::string source = g.source_prefix + "green/" + std::to_string(j) + "/0";
        long idx = 0;
        for (long k = 1; k <= j; ++k)
            for (long s = 1; s <= j; ++s, ++idx) {
                const long a = idx % j, c = idx / j;
                b.place(g.id_prefix + "extra," + std::to_string(j - 1) + "/" + std::to_string(idx), source,
                        {{unit_cell(a, c)}, "green"}, RigidTransform::translation(Q(j - a), Q(n - c)),
                        g.dest_prefix + cell_id(k - 1, s - 1));
            }
    }
}

DissectionCertificate nicomachus_impl(long n, bool fill) {
    Builder b(Construction::Nicomachus4D2D, n);
    const std::string name(construction_name(Construction::Nicomachus4D2D));
    for (long k = 1; k <= n; ++k)
        for (long s = 1; s <= n; ++s) {
            const std::string layer = cell_id(k - 1, s - 1);
            const long q = std::max(k, s);
            const std::string tag = std::to_string(s) + "/" + std::to_string(k);
            const bool green = k < s;
            int idx = 0;
            frame_pieces(b, name + "/" + layer + "/", layer, n, q,
                         {(green ? "green/" : "orange/") + tag, green ? "green" : "orange", "blue/" + tag,
                          "red/" + tag},
                         idx);
            b.target(layer, full_square(n + 1));
        }
    if (fill) {
        fill_top_gaps(b, n, 1, {"", "", name + "/"});
    } else {
        for (long j = 1; j <= n; ++j) {
            const std::string layer = "extra," + std::to_string(j - 1);
            b.place(name + "/" + layer + "/0", "green/" + std::to_string(j) + "/0", square(j, "green"),
                    RigidTransform{}, layer);
            b.target(layer, full_square(j, "none"));
        }
    }
    return b.take();
}

}  // namespace

long max_supported_n(Construction c) {
    switch (c) {
    case Construction::GaussRect: return 100;
    case Construction::ThreePyr2D: return 50;
    case Construction::Nicomachus4D2D: return 20;
    case Construction::FivePyrLayers:
    case Construction::Step2Reshape:
    case Construction::Step3Scissor: return 10;
    case Construction::Step4Top: return 12;
    }
    return 0;
}

DissectionCertificate gauss_rectangle(long n) {
    require_n(Construction::GaussRect, n);
    Builder b(Construction::GaussRect, n);
    const std::string prefix = std::string(construction_name(Construction::GaussRect)) + "/rect/0,0/";
    b.place(prefix + "0", "tri/1", staircase(n, 1, "blue"), RigidTransform{}, "rect");
    b.place(prefix + "1", "tri/2", staircase(n, 1, "red"), RigidTransform{2, false, Q(n + 1), Q(n)}, "rect");
    b.target("rect", {{rect(Q(0), Q(0), Q(n + 1), Q(n))}, "frame"});
    return b.take();
}

DissectionCertificate three_pyramids_2d(long n) {
    require_n(Construction::ThreePyr2D, n);
    return three_pyramids_impl(n, true);
}

DissectionCertificate nicomachus_4d_2d(long n) {
    require_n(Construction::Nicomachus4D2D, n);
    return nicomachus_impl(n, true);
}

DissectionCertificate five_pyramids_layers(long n) {
    require_n(Construction::FivePyrLayers, n);
    Builder b(Construction::FivePyrLayers, n);
    const std::string name(construction_name(Construction::FivePyrLayers));
    for (long t = 1; t <= n; ++t) {
        const std::string lt = "L" + std::to_string(t) + "/";
        long pink = 0;
        for (long k = 1; k <= n; ++k)
            for (long s = 1; s <= n; ++s) {
                const std::string layer = lt + cell_id(k - 1, s - 1);
                const long q = std::max({k, s, t});
                const std::string tag = std::to_string(s) + "/" + std::to_string(k);
                FrameSources src{"", "", lt + "blue/" + tag, lt + "red/" + tag};
                if (std::max(k, s) >= t) {
                    src.square_layer = lt + (k < s ? "green/" : "orange/") + tag;
                    src.square_label = k < s ? "green" : "orange";
                } else {
                    src.square_layer = lt + "pink/" + std::to_string(pink++);
                    src.square_label = "pink";
                }
                int idx = 0;
                frame_pieces(b, name + "/" + layer + "/", layer, n, q, src, idx);
                b.target(layer, full_square(n + 1));
            }
        fill_top_gaps(b, n, t, {lt, lt, name + "/" + lt});
        // The rest of the fifth pyramid's t^2 squares form corner t of the
        // excess layer.
        for (long e = 0; e < 2 * t - 1; ++e, ++pink) {
            const auto [i, j] = corner_entry(t, e);
            b.place(name + "/excess/" + cell_id(t - 1, e) + "/0", lt + "pink/" + std::to_string(pink),
                    square(t, "pink"), RigidTransform::translation(Q(i * t), Q(j * t)), "excess");
        }
    }
    b.target("excess", nested_corners(n, "frame"));
    return b.take();
}

DissectionCertificate step2_reshape(long n) {
    require_n(Construction::Step2Reshape, n);
    Builder b(Construction::Step2Reshape, n);
    const std::string name(construction_name(Construction::Step2Reshape));
    for (long t = 1; t <= n; ++t) {
        const std::string lt = "L" + std::to_string(t) + "/";
        for (long k = 0; k < n; ++k)
            for (long s = 0; s < n; ++s) {
                const std::string src = lt + cell_id(k, s);
                const std::string id = name + "/" + src + "/";
                b.place(id + "0", src, {{rect(Q(0), Q(0), Q(n + 1), Q(n))}, "body"}, RigidTransform{},
                        lt + cell_id(k, s));
                // Top rows of row k restack into the new rectangle at column n.
                b.place(id + "1", src, {{rect(Q(0), Q(n), Q(n + 1), Q(1))}, "row"},
                        RigidTransform::translation(Q(0), Q(s - n)), lt + cell_id(k, n));
            }
        for (long r = 0; r < n; ++r)
            for (long c = 0; c <= n; ++c)
                b.target(lt + cell_id(r, c), {{rect(Q(0), Q(0), Q(n + 1), Q(n))}, "frame"});
    }
    return b.take();
}

DissectionCertificate step3_scissor(long n) {
    require_n(Construction::Step3Scissor, n);
    Builder b(Construction::Step3Scissor, n);
    const std::string name(construction_name(Construction::Step3Scissor));
    const QuadExt& x = exact::strip_root();
    const QuadExt strip_y = Q(n) - x;
    for (long t = 1; t <= n; ++t) {
        const std::string lt = "L" + std::to_string(t) + "/";
        for (long r = 0; r < n; ++r)
            for (long c = 0; c <= n; ++c) {
                const std::string layer = lt + cell_id(r, c);
                const std::string rest = layer + "/R";
                const std::string id = name + "/" + layer + "/";
                b.place(id + "0", layer, {{rect(Q(0), Q(0), Q(n + 1), strip_y)}, "body"}, RigidTransform{}, layer);
                b.place(id + "1", layer, {{rect(Q(0), strip_y, strip_y, x)}, "strip-a"},
                        RigidTransform{1, false, Q(2 * n + 1), Q(0)}, layer);
                const auto drop = RigidTransform::translation(x - Q(n), x - Q(n));
                b.place(id + "2", layer, {{rect(strip_y, strip_y, Q(1), x)}, "strip-b"}, drop, rest);
                b.place(id + "3", layer, {{rect(strip_y + Q(1), strip_y, x, x)}, "strip-c"}, drop, rest);
                b.target(layer, {{rect(Q(0), Q(0), Q(n + 1) + x, strip_y)}, "frame"});
                b.leftover(rest, {{rect(Q(0), Q(0), Q(1), x), rect(Q(1), Q(0), x, x)}, "leftover"});
            }
    }
    return b.take();
}

TopLayerResult step4_top_layer(long n) {
    require_n(Construction::Step4Top, n);
    Builder b(Construction::Step4Top, n);
    const std::string name(construction_name(Construction::Step4Top));

    // Corner of k x k squares -> k x k array of corners: the cell at
    // position (a, b) of corner entry e moves to corner cell e of box (a, b).
    for (long k = 1; k <= n; ++k) {
        const std::string layer = "dual/" + std::to_string(k);
        Region dual{{}, "frame"};
        for (long a = 0; a < k; ++a)
            for (long c = 0; c < k; ++c)
            {
                dual.rects.push_back(rect(Q(a * k), Q(c * k + k - 1), Q(k), Q(1)));
                if (k > 1) dual.rects.push_back(rect(Q(a * k + k - 1), Q(c * k), Q(1), Q(k - 1)));
            }
        for (long e = 0; e < 2 * k - 1; ++e) {
            const auto [i, j] = corner_entry(k, e);
            for (long c = 0; c < k; ++c)
                for (long a = 0; a < k; ++a)
                    b.place(name + "/" + layer + "/" + cell_id(c, a) + "/" + std::to_string(e), "excess",
                            {{unit_cell(i * k + a, j * k + c)}, "pink"},
                            RigidTransform::translation(Q(a * k + i - i * k - a), Q(c * k + j - j * k - c)),
                            layer);
        }
        b.target(layer, std::move(dual));
    }

    // Two copies of the top layer and two pyramids of squares tile the
    // square of side n(n+1) ring by ring: ring k is the k-grid cells (i, j)
    // with max(i, j) in {k-1, k}, 4k squares of side k.
    for (long k = 1; k <= n; ++k) {
        std::vector<std::pair<long, long>> ring;
        for (long i = 0; i < k; ++i) ring.emplace_back(i, k);
        for (long j = 0; j < k; ++j) ring.emplace_back(k, j);
        for (long i = 0; i + 1 < k; ++i) ring.emplace_back(i, k - 1);
        for (long j = 0; j + 1 < k; ++j) ring.emplace_back(k - 1, j);
        std::size_t slot = 0;
        for (const char* copy : {"A", "B"})
            for (long e = 0; e < 2 * k - 1; ++e, ++slot) {
                const auto [i, j] = corner_entry(k, e);
                const auto [ti, tj] = ring[slot];
                b.place(name + "/double/" + cell_id(k - 1, e) + "/" + copy, std::string("copy") + copy,
                        {{rect(Q(i * k), Q(j * k), Q(k), Q(k))}, std::string("copy-") + copy},
                        RigidTransform::translation(Q((ti - i) * k), Q((tj - j) * k)), "double");
            }
        const long offset = k * (k - 1) / 2;
        b.place(name + "/double/" + cell_id(k - 1, 0) + "/SA", "squaresA",
                {{rect(Q(offset), Q(0), Q(k), Q(k))}, "squares"},
                RigidTransform::translation(Q(k * k - offset), Q(k * k)), "double");
        b.place(name + "/double/" + cell_id(k - 1, 0) + "/SB", "squaresB",
                {{rect(Q(offset), Q(0), Q(k), Q(k))}, "squares"},
                RigidTransform::translation(Q((k - 1) * k - offset), Q((k - 1) * k)), "double");
    }
    const long side = n * (n + 1);
    b.target("double", {{rect(Q(0), Q(0), Q(side), Q(side))}, "frame"});

    return {b.take(), figurate::evaluate_identity(figurate::Identity::RBalance, {{"n", n}})};
}

DissectionCertificate generate(Construction c, long n) {
    switch (c) {
    case Construction::GaussRect: return gauss_rectangle(n);
    case Construction::ThreePyr2D: return three_pyramids_2d(n);
    case Construction::Nicomachus4D2D: return nicomachus_4d_2d(n);
    case Construction::FivePyrLayers: return five_pyramids_layers(n);
    case Construction::Step2Reshape: return step2_reshape(n);
    case Construction::Step3Scissor: return step3_scissor(n);
    case Construction::Step4Top: return step4_top_layer(n).certificate;
    }
    throw std::logic_error("unknown construction");
}

std::vector<Panel> assembled_view(const DissectionCertificate& c) {
    std::vector<Panel> panels;
    std::map<std::string, std::size_t> index;
    for (const auto* list : {&c.targets, &c.leftovers})
        for (const auto& lr : *list) {
            index[lr.layer] = panels.size();
            panels.push_back({lr.layer, {}, lr.region});
        }
    for (const auto& p : c.placements) {
        auto it = index.find(p.destination_layer);
        if (it != index.end()) panels[it->second].pieces.push_back(p.image());
    }
    return panels;
}

std::vector<Panel> source_view(const DissectionCertificate& c) {
    std::vector<Panel> panels;
    std::map<std::string, std::size_t> index;
    for (const auto& p : c.placements) {
        auto [it, fresh] = index.try_emplace(p.source_layer, panels.size());
        if (fresh) panels.push_back({p.source_layer, {}, {}});
        panels[it->second].pieces.push_back(p.source);
    }
    return panels;
}

std::vector<Panel> three_pyramids_before_diy(long n) {
    require_n(Construction::ThreePyr2D, n);
    return assembled_view(three_pyramids_impl(n, false));
}

std::vector<Panel> nicomachus_before_diy(long n) {
    require_n(Construction::Nicomachus4D2D, n);
    return assembled_view(nicomachus_impl(n, false));
}

std::optional<std::pair<long, long>> grid_position(const std::string& layer) {
    const auto comma = layer.rfind(',');
    if (comma == std::string::npos) return std::nullopt;
    auto start = layer.rfind('/', comma);
    start = (start == std::string::npos) ? 0 : start + 1;
    try {
        const std::string row = layer.substr(start, comma - start);
        const long r = row == "extra" ? -1 : std::stol(row);
        return std::make_pair(r, std::stol(layer.substr(comma + 1)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace powersum::dissect
