#pragma once

#include "corrnet/panel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace corrnet {

struct PipelineConfig {
    std::string input_path;
    FillPolicy fill = FillPolicy::forward_fill;
    std::vector<double> delta_ts{0.25, 0.5, 1.0, 2.0, 5.0}; // surface axis
    std::string reference_label; // empty: first series
    int community_runs = 100;
    std::uint64_t seed = 42;
    std::string output_dir;
    std::string events_path; // optional

    void validate() const;
};

/// Flat "key = value" config: input, fill, dts, ref, runs, seed,
/// output_dir, events. Unknown keys are an error.
PipelineConfig load_config_file(const std::string& path);

struct PipelineReport {
    std::vector<YearMonth> months;     // months with a 3-month correlation matrix
    std::vector<std::string> warnings; // e.g. near-singular windows
    std::vector<std::string> failures; // "YYYY-MM: reason"
    std::vector<std::string> files;    // emitted, relative to output_dir
};

/// Full monthly analysis at dt = 0.25 plus the requested surface:
/// per-month correlation matrices and MST/PMFG edge lists, mean-correlation
/// and rolling-MI series, Welch MST-vs-PMFG p-values, spectral tables, the
/// degree profile ordered by the unconditional-PMFG communities, and the
/// unconditional PMFG with its partition. Individual bad months are skipped
/// and reported in the manifest.
PipelineReport run_pipeline(const PipelineConfig& config);

} // namespace corrnet
