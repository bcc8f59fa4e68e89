#pragma once

#include <json.hpp>

#include "cr/mapdef.hpp"

namespace cr {

struct PipelineOptions {
    bool ahlfors = false;
    bool rank = false;
    bool isometry = false;
    int order_override = 0;                    // series order when > 0
    std::vector<std::vector<Gaussian>> extra_points;  // tangential coords (z.., t)
    uint64_t seed = 20260815ull;
    int sample_count = 4;
};

struct PipelineOutcome {
    int exit_code = 0;  // 0 pass, 1 requested check failed
    nlohmann::ordered_json report;
};

// Runs check plus the requested stages on one map definition.  Input problems
// (bad models, wrong component counts, malformed points) throw; the caller
// maps those to exit code 2.
PipelineOutcome run_pipeline(const MapDef& def, const PipelineOptions& opt);

// "3/2, -1/2, 0" -> coordinates; used for --points files (one point per line)
std::vector<std::vector<Gaussian>> parse_points_file(const std::string& text, const ParamMap& params);

}  // namespace cr
