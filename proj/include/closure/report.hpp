#pragma once

#include <string>

namespace closure {

// Derives plot-ready data files from a completed run directory:
//   band_tNNNN.csv      x[, y], truth, mean, lower, upper  (95% band)
//   residual_tNNNN.csv  x, y, residual (truth - mean), 2D runs only
//   report_surface.csv  copy of the search surface, when present
void emit_report(const std::string& run_dir);

}  // namespace closure
