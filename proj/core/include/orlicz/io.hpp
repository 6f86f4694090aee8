#pragma once

#include <string>

#include "orlicz/maximal.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/rearrange.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// All readers throw ParseError with 1-based line/column on malformed input.

// Header `value,measure`, then one cell per row.
MeasureStepFunction parse_step_csv(const std::string& text);

// Header `origin,cell_width` followed by a row with the two numbers, or just
// that row; then one sample per row.
GridFunction1D parse_grid_csv(const std::string& text);

// Header `dim,side,cell_volume` followed by a row with the three numbers, or
// just that row; then the samples in row-major order, any number per row.
GridFieldND parse_field_csv(const std::string& text);

// Young function from inline JSON (text starting with '{') or a file path.
YoungFunction load_young(const std::string& path_or_json);
YoungFunction parse_young_text(const std::string& json_text);

// Weight for the generalized Lorentz norm, inline JSON or a file path:
//   {"kind":"power","exponent":0.5}            t^0.5
//   {"kind":"orlicz","phi":{"kind":"power","p":2}}   Phi^{-1}(1/t)^{-1}
WeightFunction load_weight(const std::string& path_or_json);

std::string read_file(const std::string& path);

}  // namespace orlicz
