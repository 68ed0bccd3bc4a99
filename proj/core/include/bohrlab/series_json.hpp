#pragma once

#include <nlohmann/json.hpp>

#include "bohrlab/series.hpp"

namespace bohr {

// Wire format: {"coeffs_re": [...], "coeffs_im": [...], "tail_cap": x}.
// An unbounded tail is written as "tail_cap": null and read back as +inf.
nlohmann::json to_json(const TruncatedSeries& f);

// Throws SeriesFormatError on missing keys, mismatched lengths or a negative cap.
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace bohr
