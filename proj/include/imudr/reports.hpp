#pragma once

#include <string>

#include "imudr/pipeline.hpp"
#include "imudr/simulator.hpp"

namespace imudr {

/// Writes trajectory.csv, diagnostics.csv, segments.csv and summary.txt
/// into `out_dir` (created if absent). Floats use shortest round-trip
/// formatting so identical runs produce byte-identical files. Throws
/// IoError when the directory cannot be created or written.
void emit_reports(const PipelineResult& result, const std::string& out_dir);

/// Writes drift.csv (t_s,rms_m) plus the fitted slope (or "n/a").
void emit_drift_report(const DriftResult& result, const std::string& out_dir);

}  // namespace imudr
