#include "powersum/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "powersum/pyramid.hpp"

namespace powersum::render {

namespace {

using dissect::Region;
using dissect::UnsupportedN;

constexpr std::array<std::pair<Figure, std::string_view>, 14> kFigures{{
    {Figure::OddNumbers, "ODD_NUMBERS"},
    {Figure::Gauss, "GAUSS"},
    {Figure::MainSections, "MAIN_SECTIONS"},
    {Figure::SecondarySections, "SECONDARY_SECTIONS"},
    {Figure::Puzzle3D, "PUZZLE_3D"},
    {Figure::Puzzle3DDiy, "PUZZLE_3D_DIY"},
    {Figure::NicomachusGrid, "NICOMACHUS_GRID"},
    {Figure::NicomachusGridDiy, "NICOMACHUS_GRID_DIY"},
    {Figure::FivePyrSection, "FIVE_PYR_SECTION"},
    {Figure::ConvolutionExcess, "CONVOLUTION_EXCESS"},
    {Figure::Step2, "STEP2"},
    {Figure::Step3Scissor, "STEP3_SCISSOR"},
    {Figure::TopDual, "TOP_DUAL"},
    {Figure::TwoCopies, "TWO_COPIES"},
}};

const std::vector<std::pair<std::string_view, Color>> kPalette{
    {"orange", {"ps-orange", "F39C34"}},
    {"green", {"ps-green", "6ABF4B"}},
    {"red", {"ps-red", "D9534F"}},
    {"blue", {"ps-blue", "4A90D9"}},
    {"pink", {"ps-pink", "F2A2C0"}},
    {"yellow", {"ps-yellow", "F4D03F"}},
    {"body", {"ps-body", "B8C7D9"}},
    {"row", {"ps-row", "8E7CC3"}},
    {"strip-a", {"ps-strip-a", "E67E22"}},
    {"strip-b", {"ps-strip-b", "95A5A6"}},
    {"strip-c", {"ps-strip-c", "5D6D7E"}},
    {"copy-A", {"ps-copy-a", "F2A2C0"}},
    {"copy-B", {"ps-copy-b", "C39BD3"}},
    {"squares", {"ps-squares", "F4D03F"}},
};

QuadExt Q(long v) { return QuadExt(v); }

struct Box {
    QuadExt x0, y0, x1, y1;
};

void add_piece(ScenePanel& p, const Rect& r, const std::string& label) {
    const auto cells = dissect::unit_cells(Region{{r}, label});
    if (cells.empty()) {
        p.shapes.push_back({r, label, false});
        return;
    }
    for (const auto& c : cells) p.shapes.push_back({c, label, true});
}

ScenePanel from_panel(const dissect::Panel& in) {
    ScenePanel out;
    out.title = in.layer;
    for (const auto& piece : in.pieces)
        for (const auto& r : piece.rects) add_piece(out, r, piece.label);
    out.outline = in.outline.rects;
    return out;
}

std::optional<Box> bounds(const ScenePanel& p) {
    std::optional<Box> b;
    auto grow = [&](const Rect& r) {
        if (!b) {
            b = Box{r.x, r.y, r.right(), r.top()};
            return;
        }
        b->x0 = std::min(b->x0, r.x);
        b->y0 = std::min(b->y0, r.y);
        b->x1 = std::max(b->x1, r.right());
        b->y1 = std::max(b->y1, r.top());
    };
    for (const auto& s : p.shapes) grow(s.rect);
    for (const auto& r : p.outline) grow(r);
    return b;
}

void shift(ScenePanel& p, const QuadExt& dx, const QuadExt& dy) {
    for (auto& s : p.shapes) {
        s.rect.x += dx;
        s.rect.y += dy;
    }
    for (auto& r : p.outline) {
        r.x += dx;
        r.y += dy;
    }
    for (auto& a : p.notes) {
        a.x += dx;
        a.y += dy;
    }
}

// Irrational lengths get one "x ~ 0.2638" label at the panel's top right.
void annotate(ScenePanel& p) {
    const auto b = bounds(p);
    if (!b) return;
    for (const auto& s : p.shapes)
        if (!s.rect.x.is_rational() || !s.rect.y.is_rational() || !s.rect.w.is_rational()
            || !s.rect.h.is_rational()) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "x \u2248 %.4f", exact::quad_to_float(exact::strip_root()));
            p.notes.push_back({b->x1, b->y1, buf});
            return;
        }
}

// Panels side by side from x = 0, bottoms aligned, one unit apart.
std::vector<ScenePanel> in_a_row(std::vector<ScenePanel> panels, const QuadExt& gap = Q(1)) {
    QuadExt x;
    for (auto& p : panels) {
        const auto b = bounds(p);
        if (!b) continue;
        shift(p, x - b->x0, -b->y0);
        x += b->x1 - b->x0 + gap;
    }
    return panels;
}

// Panels on the grid given by their "<row>,<col>" layer ids, row 0 at the
// bottom; ids without a position go in a final row on top.
std::vector<ScenePanel> on_grid(std::vector<ScenePanel> panels) {
    QuadExt pitch_x = Q(0), pitch_y = Q(0);
    for (const auto& p : panels)
        if (auto b = bounds(p)) {
            pitch_x = std::max(pitch_x, b->x1 - b->x0);
            pitch_y = std::max(pitch_y, b->y1 - b->y0);
        }
    pitch_x += Q(1);
    pitch_y += Q(1);
    long min_row = 0, max_row = 0;
    for (const auto& p : panels)
        if (auto g = dissect::grid_position(p.title)) {
            min_row = std::min(min_row, g->first);
            max_row = std::max(max_row, g->first);
        }
    long loose = 0;
    for (auto& p : panels) {
        const auto b = bounds(p);
        if (!b) continue;
        long row = max_row + 1, col = loose;
        if (auto g = dissect::grid_position(p.title)) {
            row = g->first;
            col = g->second;
        } else {
            ++loose;
        }
        shift(p, Q(col) * pitch_x - b->x0, Q(row - min_row) * pitch_y - b->y0);
    }
    return panels;
}

// Places group b to the right of group a, two units apart.
std::vector<ScenePanel> beside(std::vector<ScenePanel> a, std::vector<ScenePanel> b) {
    QuadExt right = Q(0);
    for (const auto& p : a)
        if (auto bb = bounds(p)) right = std::max(right, bb->x1);
    QuadExt left;
    bool first = true;
    for (const auto& p : b)
        if (auto bb = bounds(p)) {
            left = first ? bb->x0 : std::min(left, bb->x0);
            first = false;
        }
    for (auto& p : b) shift(p, right + Q(2) - left, Q(0));
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<ScenePanel> convert(const std::vector<dissect::Panel>& in, const std::string& prefix = "") {
    std::vector<ScenePanel> out;
    for (const auto& p : in)
        if (p.layer.compare(0, prefix.size(), prefix) == 0) out.push_back(from_panel(p));
    return out;
}

ScenePanel only(const std::vector<dissect::Panel>& in, const std::string& layer) {
    for (const auto& p : in)
        if (p.layer == layer) return from_panel(p);
    throw std::logic_error("no layer " + layer);
}

ScenePanel cells_panel(std::string title, const pyramid::CellSet& cells, int xi, int yi, int y_base,
                       const std::string& label) {
    ScenePanel p;
    p.title = std::move(title);
    for (const auto& c : cells)
        p.shapes.push_back({dissect::unit_cell(c.coords[xi], c.coords[yi] - y_base), label, true});
    return p;
}

std::vector<ScenePanel> odd_numbers(long n) {
    ScenePanel p;
    p.title = "odd";
    for (long k = 1; k <= n; ++k) {
        const std::string label = k % 2 ? "orange" : "blue";
        for (long i = 0; i < k; ++i) p.shapes.push_back({dissect::unit_cell(i, k - 1), label, true});
        for (long j = 0; j + 1 < k; ++j) p.shapes.push_back({dissect::unit_cell(k - 1, j), label, true});
    }
    p.outline.push_back({Q(0), Q(0), Q(n), Q(n)});
    return {p};
}

std::vector<ScenePanel> sections(long n, bool secondary) {
    const auto P = pyramid::build_pyramid(3, static_cast<int>(n));
    std::vector<ScenePanel> out;
    if (!secondary) {
        const auto main = pyramid::main_sections(P);
        for (std::size_t k = 0; k < main.size(); ++k)
            out.push_back(cells_panel("k=" + std::to_string(k + 1), main[k], 0, 1, 0, "orange"));
    } else {
        const auto sec = pyramid::secondary_sections(P, 2);
        for (std::size_t m = 0; m < sec.size(); ++m)
            out.push_back(cells_panel("m=" + std::to_string(m + 1), sec[m], 1, 0, static_cast<int>(m + 1), "blue"));
    }
    return out;
}

std::vector<ScenePanel> step3(long n) {
    const auto cert = dissect::step3_scissor(n);
    ScenePanel before = only(dissect::source_view(cert), "L1/0,0");
    before.title = "before";
    const auto assembled = dissect::assembled_view(cert);
    ScenePanel after = only(assembled, "L1/0,0");
    after.title = "after";
    ScenePanel rest = only(assembled, "L1/0,0/R");
    shift(rest, Q(n + 2) + exact::strip_root(), Q(0));
    after.shapes.insert(after.shapes.end(), rest.shapes.begin(), rest.shapes.end());
    after.outline.insert(after.outline.end(), rest.outline.begin(), rest.outline.end());
    return in_a_row({before, after}, Q(2));
}

std::vector<ScenePanel> panels_for(const FigureSpec& s) {
    const long n = s.n;
    switch (s.figure) {
    case Figure::OddNumbers: return odd_numbers(n);
    case Figure::Gauss: return in_a_row(convert(dissect::assembled_view(dissect::gauss_rectangle(n))));
    case Figure::MainSections: return in_a_row(sections(n, false));
    case Figure::SecondarySections: return in_a_row(sections(n, true));
    case Figure::Puzzle3D: return in_a_row(convert(dissect::three_pyramids_before_diy(n)));
    case Figure::Puzzle3DDiy: return in_a_row(convert(dissect::assembled_view(dissect::three_pyramids_2d(n))));
    case Figure::NicomachusGrid: return on_grid(convert(dissect::nicomachus_before_diy(n)));
    case Figure::NicomachusGridDiy:
        return on_grid(convert(dissect::assembled_view(dissect::nicomachus_4d_2d(n))));
    case Figure::FivePyrSection:
        return on_grid(
            convert(dissect::assembled_view(dissect::five_pyramids_layers(n)), "L" + std::to_string(s.t) + "/"));
    case Figure::ConvolutionExcess:
        return in_a_row({only(dissect::assembled_view(dissect::five_pyramids_layers(n)), "excess")});
    case Figure::Step2: {
        const auto cert = dissect::step2_reshape(n);
        return beside(on_grid(convert(dissect::source_view(cert), "L1/")),
                      on_grid(convert(dissect::assembled_view(cert), "L1/")));
    }
    case Figure::Step3Scissor: return step3(n);
    case Figure::TopDual: {
        const auto cert = dissect::step4_top_layer(n).certificate;
        return beside(in_a_row({only(dissect::source_view(cert), "excess")}),
                      in_a_row(convert(dissect::assembled_view(cert), "dual/")));
    }
    case Figure::TwoCopies:
        return in_a_row({only(dissect::assembled_view(dissect::step4_top_layer(n).certificate), "double")});
    }
    throw std::logic_error("unknown figure");
}

std::string num(const QuadExt& v) {
    double d = exact::quad_to_float(v);
    if (std::fabs(d) < 5e-5) d = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", d);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string_view figure_name(Figure f) {
    for (const auto& [k, v] : kFigures)
        if (k == f) return v;
    return "UNKNOWN";
}

std::optional<Figure> figure_from_name(std::string_view name) {
    for (const auto& [k, v] : kFigures)
        if (v == name) return k;
    return std::nullopt;
}

const std::vector<Figure>& all_figures() {
    static const std::vector<Figure> all = [] {
        std::vector<Figure> v;
        for (const auto& [k, name] : kFigures) v.push_back(k);
        return v;
    }();
    return all;
}

std::string_view format_name(Format f) { return f == Format::Svg ? "svg" : "tikz"; }

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "svg") return Format::Svg;
    if (name == "tikz") return Format::Tikz;
    return std::nullopt;
}

long max_figure_n(Figure f) {
    using dissect::Construction;
    using dissect::max_supported_n;
    switch (f) {
    case Figure::OddNumbers: return 30;
    case Figure::Gauss: return max_supported_n(Construction::GaussRect);
    case Figure::MainSections:
    case Figure::SecondarySections: return 12;
    case Figure::Puzzle3D:
    case Figure::Puzzle3DDiy: return max_supported_n(Construction::ThreePyr2D);
    case Figure::NicomachusGrid:
    case Figure::NicomachusGridDiy: return max_supported_n(Construction::Nicomachus4D2D);
    case Figure::FivePyrSection:
    case Figure::ConvolutionExcess: return max_supported_n(Construction::FivePyrLayers);
    case Figure::Step2: return max_supported_n(Construction::Step2Reshape);
    case Figure::Step3Scissor: return max_supported_n(Construction::Step3Scissor);
    case Figure::TopDual:
    case Figure::TwoCopies: return max_supported_n(Construction::Step4Top);
    }
    return 0;
}

std::size_t Scene::cell_count() const {
    std::size_t total = 0;
    for (const auto& p : panels)
        total += static_cast<std::size_t>(std::count_if(p.shapes.begin(), p.shapes.end(),
                                                        [](const Shape& s) { return s.cell; }));
    return total;
}

QuadExt Scene::width() const {
    QuadExt w;
    for (const auto& p : panels)
        if (auto b = bounds(p)) w = std::max(w, b->x1);
    return w;
}

QuadExt Scene::height() const {
    QuadExt h;
    for (const auto& p : panels)
        if (auto b = bounds(p)) h = std::max(h, b->y1);
    return h;
}

Scene build_scene(const FigureSpec& spec) {
    const std::string name(figure_name(spec.figure));
    if (spec.n < 1 || spec.n > max_figure_n(spec.figure))
        throw UnsupportedN(name + ": n must be in 1.." + std::to_string(max_figure_n(spec.figure)) + ", got "
                           + std::to_string(spec.n));
    if (spec.figure == Figure::FivePyrSection && (spec.t < 1 || spec.t > spec.n))
        throw UnsupportedN(name + ": t must be in 1.." + std::to_string(spec.n) + ", got " + std::to_string(spec.t));
    if (spec.unit_px < 1) throw std::invalid_argument("unit_px must be positive");
    Scene scene{panels_for(spec)};
    for (auto& p : scene.panels) annotate(p);
    return scene;
}

const std::vector<std::pair<std::string_view, Color>>& palette() { return kPalette; }

const Color& color_for(std::string_view label) {
    for (const auto& [k, c] : kPalette)
        if (k == label) return c;
    throw std::out_of_range("no colour for label '" + std::string(label) + "'");
}

std::string emit_svg(const Scene& scene, int unit_px) {
    const QuadExt unit(static_cast<long>(unit_px));
    const QuadExt W = scene.width() + Q(2), H = scene.height() + Q(2);
    auto px = [&](const QuadExt& v) { return num((v + Q(1)) * unit); };
    auto py = [&](const QuadExt& top) { return num((H - Q(1) - top) * unit); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W * unit) << "\" height=\"" << num(H * unit)
       << "\" viewBox=\"0 0 " << num(W * unit) << " " << num(H * unit) << "\">\n";
    for (const auto& p : scene.panels) {
        os << "<g class=\"panel\">\n<title>" << escape(p.title) << "</title>\n";
        for (const auto& s : p.shapes) {
            os << "<rect class=\"" << (s.cell ? "cell" : "piece") << "\" x=\"" << px(s.rect.x) << "\" y=\""
               << py(s.rect.top()) << "\" width=\"" << num(s.rect.w * unit) << "\" height=\""
               << num(s.rect.h * unit) << "\" fill=\"#" << color_for(s.label).hex
               << "\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
        }
        for (const auto& r : p.outline)
            os << "<rect class=\"outline\" x=\"" << px(r.x) << "\" y=\"" << py(r.top()) << "\" width=\""
               << num(r.w * unit) << "\" height=\"" << num(r.h * unit)
               << "\" fill=\"none\" stroke=\"#000000\" stroke-dasharray=\"4 2\"/>\n";
        for (const auto& a : p.notes)
            os << "<text x=\"" << px(a.x) << "\" y=\"" << py(a.y) << "\" font-size=\"" << unit_px / 2
               << "\" text-anchor=\"end\">" << escape(a.text) << "</text>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string emit_tikz(const Scene& scene) {
    std::set<std::string_view> used;
    for (const auto& p : scene.panels)
        for (const auto& s : p.shapes) used.insert(s.label);

    std::ostringstream os;
    os << "\\begin{tikzpicture}[x=0.5cm,y=0.5cm]\n";
    for (const auto& [label, c] : kPalette)
        if (used.count(label)) os << "\\definecolor{" << c.name << "}{HTML}{" << c.hex << "}\n";
    for (const auto& p : scene.panels) {
        os << "% " << p.title << "\n";
        for (const auto& s : p.shapes)
            os << "\\filldraw[fill=" << color_for(s.label).name << ",draw=black!80,line width=0.2pt] ("
               << num(s.rect.x) << "," << num(s.rect.y) << ") rectangle (" << num(s.rect.right()) << ","
               << num(s.rect.top()) << ");\n";
        for (const auto& r : p.outline)
            os << "\\draw[dashed] (" << num(r.x) << "," << num(r.y) << ") rectangle (" << num(r.right()) << ","
               << num(r.top()) << ");\n";
        for (const auto& a : p.notes) {
            std::string text = a.text;
            const std::string approx = "\u2248";
            if (auto at = text.find(approx); at != std::string::npos) text.replace(at, approx.size(), "\\approx");
            os << "\\node[anchor=south east,font=\\small] at (" << num(a.x) << "," << num(a.y) << ") {$" << text
               << "$};\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string emit_figure(const FigureSpec& spec) {
    const Scene scene = build_scene(spec);
    return spec.format == Format::Svg ? emit_svg(scene, spec.unit_px) : emit_tikz(scene);
}

}  // namespace powersum::render
