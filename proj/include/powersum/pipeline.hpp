#pragma once

// The five-pyramid pipeline: layers, reshape, scissor cut and top layer,
// chained and checked stage by stage.

#include <stdexcept>
#include <string>
#include <vector>

#include "powersum/certificate.hpp"
#include "powersum/figurate.hpp"

namespace powersum::dissect {

class PipelineFailure : public std::runtime_error {
public:
    PipelineFailure(std::string stage, CheckReport report);

    const std::string& stage() const { return stage_; }
    const CheckReport& report() const { return report_; }

private:
    std::string stage_;
    CheckReport report_;
};

struct StageResult {
    Construction construction;
    CheckReport check;
    QuadExt source_area, target_area, leftover_area;
};

/// Runs every stage for n, checks each certificate and the hand-over of
/// layers between stages, and returns FINAL_ASSEMBLY(n) with the left side
/// 5 S_4(n) and the right side (n + 1/2) n(n+1) (n - x)(n + 1 + x).
/// Throws PipelineFailure naming the first stage that fails.
figurate::IdentityReport full_theorem_report(long n, std::vector<StageResult>* stages = nullptr);

}  // namespace powersum::dissect
