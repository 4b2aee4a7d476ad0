#pragma once

// Figures rebuilt from the exact models and written as SVG or TikZ.
//
// Layout is done in exact coordinates; floats appear only when a number is
// printed. Rects with integer corners are drawn as unit cells.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/constructions.hpp"

namespace powersum::render {

using dissect::QuadExt;
using dissect::Rect;

enum class Figure {
    OddNumbers,
    Gauss,
    MainSections,
    SecondarySections,
    Puzzle3D,
    Puzzle3DDiy,
    NicomachusGrid,
    NicomachusGridDiy,
    FivePyrSection,
    ConvolutionExcess,
    Step2,
    Step3Scissor,
    TopDual,
    TwoCopies,
};

enum class Format { Svg, Tikz };

std::string_view figure_name(Figure f);
std::optional<Figure> figure_from_name(std::string_view name);
const std::vector<Figure>& all_figures();

std::string_view format_name(Format f);
std::optional<Format> format_from_name(std::string_view name);

struct FigureSpec {
    Figure figure = Figure::Gauss;
    long n = 1;
    long t = 1;  // section index for FIVE_PYR_SECTION
    Format format = Format::Svg;
    int unit_px = 20;
};

/// Largest n accepted for a figure.
long max_figure_n(Figure f);

struct Shape {
    Rect rect;
    std::string label;
    bool cell = false;
};

struct Annotation {
    QuadExt x, y;
    std::string text;
};

struct ScenePanel {
    std::string title;
    std::vector<Shape> shapes;
    std::vector<Rect> outline;
    std::vector<Annotation> notes;
};

/// Everything in absolute exact coordinates, y pointing up.
struct Scene {
    std::vector<ScenePanel> panels;

    std::size_t cell_count() const;
    QuadExt width() const;
    QuadExt height() const;
};

/// Throws dissect::UnsupportedN when n (or t) is out of range.
Scene build_scene(const FigureSpec& spec);

std::string emit_figure(const FigureSpec& spec);
std::string emit_svg(const Scene& scene, int unit_px);
std::string emit_tikz(const Scene& scene);

struct Color {
    std::string_view name;
    std::string_view hex;
};

/// Fill colour of a piece label; throws std::out_of_range for a label
/// missing from the table.
const Color& color_for(std::string_view label);
const std::vector<std::pair<std::string_view, Color>>& palette();

}  // namespace powersum::render
