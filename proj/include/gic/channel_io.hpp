#pragma once

#include <iosfwd>
#include <string>

#include "gic/channel.hpp"

namespace gic {

/// Channel-description JSON, one of two forms per file:
///   raw:        {"n": int, "gains": [[..]], "noise_variance": x, "power_caps": [..]}
///   normalized: {"n": int, "a": [[..]], "pbar": [..]}
/// Exactly one form must be present; the raw form is normalized on load.
/// Malformed input throws ValidationError.
NormalizedChannel channel_from_json_text(const std::string& text);
NormalizedChannel load_channel(std::istream& in);
NormalizedChannel load_channel_file(const std::string& path);

} // namespace gic
