#pragma once

#include <filesystem>
#include <istream>
#include <string_view>

#include "threeway/dtrs.hpp"
#include "threeway/fuzzy_set.hpp"

namespace threeway::app {

/// CSV with header `id,lo,hi`; row order is universe order. Errors name the
/// 1-based data row and the file line.
IVFuzzySet parse_dataset(std::istream& in);
IVFuzzySet ingest_dataset(const std::filesystem::path& path);

/// JSON object with exactly lambda_e, lambda_r, lambda_sd and lambda_su, each
/// a number or a [lo, hi] pair.
IntervalLossProfile parse_losses(std::string_view text);
IntervalLossProfile ingest_losses(const std::filesystem::path& path);

}  // namespace threeway::app
