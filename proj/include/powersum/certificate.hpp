#pragma once

// Dissection certificates and the exact-cover checker.
//
// A certificate lists pieces cut from named source layers, each carried by
// a rigid motion into a destination layer. Every destination layer is
// declared either as a target or as a leftover, with its region. The
// checker accepts when, for every layer, the moved pieces tile the declared
// region exactly once and nothing outside it, and when the pieces cut from
// each source layer are pairwise interior-disjoint.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/geometry.hpp"

namespace powersum::dissect {

enum class Construction {
    GaussRect,
    ThreePyr2D,
    Nicomachus4D2D,
    FivePyrLayers,
    Step2Reshape,
    Step3Scissor,
    Step4Top,
};

std::string_view construction_name(Construction c);
std::optional<Construction> construction_from_name(std::string_view name);
const std::vector<Construction>& all_constructions();

struct Placement {
    std::string piece_id;
    std::string source_layer;
    Region source;
    RigidTransform transform;
    std::string destination_layer;

    Region image() const { return transform.apply(source); }
};

struct LayerRegion {
    std::string layer;
    Region region;
};

struct DissectionCertificate {
    Construction construction = Construction::GaussRect;
    long n = 0;
    std::vector<Placement> placements;
    std::vector<LayerRegion> targets;
    std::vector<LayerRegion> leftovers;

    QuadExt source_area() const;
    QuadExt target_area() const;
    QuadExt leftover_area() const;
};

enum class CheckStatus {
    Pass,
    Overlap,          // two pieces share interior in a destination layer
    Uncovered,        // part of a declared region is not covered
    OutsideTarget,    // a piece reaches outside its layer's region
    SourceOverlap,    // two pieces were cut from the same source material
    LeftoverMismatch, // leftover layer not tiled exactly by its pieces
    AreaMismatch,
    Malformed,
};

std::string_view status_name(CheckStatus s);

struct CheckReport {
    CheckStatus status = CheckStatus::Pass;
    std::string layer;
    std::string piece_id;
    /// First offending cell of the compressed grid, as exact text.
    std::optional<Rect> interval;
    std::string message;

    bool passed() const { return status == CheckStatus::Pass; }
    bool is_cover_failure() const { return !passed() && status != CheckStatus::Malformed; }
    std::string to_string() const;
};

CheckReport check_certificate(const DissectionCertificate& c);

/// Exact-cover test of pieces against a region in one plane: every cell of
/// the coordinate-compressed grid inside the region is covered by exactly
/// one piece, and no piece reaches outside it.
CheckReport check_cover(const std::vector<Rect>& pieces, const std::vector<Rect>& region);

/// True iff the rects are pairwise interior-disjoint.
bool interior_disjoint(const std::vector<Rect>& rects);

class MalformedCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON text form: {construction, n, placements[], targets[], leftovers[]}
/// with every coordinate in the exact text serialization.
std::string to_json(const DissectionCertificate& c);
/// Throws MalformedCertificate on any syntactic or schema error.
DissectionCertificate from_json(std::string_view text);

}  // namespace powersum::dissect
