#pragma once

#include <string>
#include <string_view>

#include "harmsub/series.hpp"

namespace harmsub {

/// Series document: {"a": [[re,im],...], "b": [[re,im],...]}, arrays in
/// coefficient order 0..N. Round-trips finite doubles bit-exactly.
std::string serialize(const HarmonicSeries& f);

/// Throws ParseError (with byte position) on malformed documents and
/// Error on invariant violations (empty arrays, non-finite entries).
HarmonicSeries deserialize(std::string_view text);

} // namespace harmsub
