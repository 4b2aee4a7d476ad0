#pragma once

// The acceptance checks, shared by the acceptance binary and `verify-all`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "powersum/certificate.hpp"

namespace powersum::verify {

struct Options {
    /// Caps every n range; 0 keeps the full ranges.
    long max_n = 0;
    /// Directory holding the reference figures; criterion 10 fails if unset.
    std::string golden_dir;
    std::uint64_t seed = 20240611;
    int mutations = 100;
};

struct Result {
    int criterion = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;

    /// "PASS [3] faulhaber-vs-oracle (0.412 s / 10 s): ..."
    std::string to_line() const;
};

inline constexpr int kCriteria = 10;

/// Runs one criterion (1..10); a run over its time limit fails.
Result run(int criterion, const Options& opts);
std::vector<Result> run_all(const Options& opts);

std::string report_json(const std::vector<Result>& results);

enum class MutationKind { Translate, QuarterTurn, Reflect };

struct Mutation {
    std::size_t placement = 0;
    MutationKind kind = MutationKind::Translate;
    int dx = 0, dy = 0;
};

/// One random single-placement change: a unit translation, one more
/// quarter turn, or a toggled reflection.
Mutation random_mutation(const dissect::DissectionCertificate& c, std::mt19937_64& rng);
dissect::DissectionCertificate apply(dissect::DissectionCertificate c, const Mutation& m);

/// Figures kept as golden files: {file name, figure, n, format}.
struct GoldenFigure {
    std::string file;
    std::string figure;
    long n;
    std::string format;
};
const std::vector<GoldenFigure>& golden_figures();

}  // namespace powersum::verify
