#pragma once

// Generators for the cut-and-paste constructions. Each returns a
// certificate that check_certificate accepts.
//
// Layer ids. Sub-puzzles inside a layer are addressed "<row>,<col>",
// row-major from the bottom-left, 0-based; the sections of the five-pyramid
// pipeline are prefixed "L<t>/". Piece ids read
// "<construction>/<layer>/<row>,<col>/<k>".

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powersum/certificate.hpp"
#include "powersum/figurate.hpp"

namespace powersum::dissect {

class UnsupportedN : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Largest n generated cell by cell; beyond it only the arithmetic
/// identities are checked.
long max_supported_n(Construction c);

/// Two staircases of t_n cells filling an (n+1) x n rectangle.
DissectionCertificate gauss_rectangle(long n);

/// n layers of the square pyramid X-ray: each layer m starts as an m x m
/// main section plus two truncated staircases (steps m..n), missing a
/// 1 x (n+1-m) strip at the right end of its top row. The top row is cut
/// into half-height strips and the upper halves of layers m and n+1-m are
/// swapped, leaving n rectangles (n+1) x (n+1/2).
DissectionCertificate three_pyramids_2d(long n);

/// The 4D sum-of-cubes puzzle in 2D: an extra row of green squares 1..n
/// fills the top-row gaps of an n x n array of almost-square frames,
/// giving n^2 squares of side n+1.
DissectionCertificate nicomachus_4d_2d(long n);

/// Sections t = 1..n of five assembled 5D pyramids, each an n x n array of
/// (n+1) x (n+1) squares, plus the nested corner arrangement of the excess.
DissectionCertificate five_pyramids_layers(long n);

/// Per section: the top row of each (n+1)-square is restacked into n new
/// rectangles, giving n x (n+1) rectangles of width n+1 and height n.
DissectionCertificate step2_reshape(long n);

/// Per rectangle: the top strip of height x is cut into A (n-x), B (1) and
/// C (x); A turns upright at the right edge and B, C are left over.
DissectionCertificate step3_scissor(long n);

struct TopLayerResult {
    /// Layers "dual/<k>" hold the cell bijection between the corner of k x k
    /// squares and the k x k array of corners; layer "double" holds two
    /// copies of the top layer plus two pyramids of squares tiling the
    /// n(n+1) square.
    DissectionCertificate certificate;
    figurate::IdentityReport balance;
};

TopLayerResult step4_top_layer(long n);

DissectionCertificate generate(Construction c, long n);

/// Pieces of one layer as drawn.
struct Panel {
    std::string layer;
    std::vector<Region> pieces;
    Region outline;
};

/// Moved pieces grouped by destination layer, in declaration order.
std::vector<Panel> assembled_view(const DissectionCertificate& c);
/// Pieces grouped by source layer at their source positions.
std::vector<Panel> source_view(const DissectionCertificate& c);

/// Three-pyramid layers before the half-row swap.
std::vector<Panel> three_pyramids_before_diy(long n);
/// The extra green row ("extra,<j>") and the gapped frames, before filling.
std::vector<Panel> nicomachus_before_diy(long n);

/// (row, col) from a "...<row>,<col>" layer id, if present.
std::optional<std::pair<long, long>> grid_position(const std::string& layer);

}  // namespace powersum::dissect
