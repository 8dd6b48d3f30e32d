#pragma once

#include "pfh/twist_profile.hpp"

#include <string>

namespace pfh {

/// Resolves a profile argument: a built-in name ("quadratic", "quadratic:N",
/// "cubic", "disc:<twist spec>") or a path to a JSON config file.
///
/// Config files:
///   {"kind": "polynomial", "coefficients": ["1/2", "1", "1/2"]}
///   {"kind": "table", "samples": [[z, h, h'], ...]}
///   {"kind": "disc_twist", "f": "linear:2", "truncation": 8}
/// An optional "hprime1" is cross-checked against the profile.
TwistProfile load_profile(const std::string& spec);

TwistProfile profile_from_json_text(const std::string& text, const std::string& name);

} // namespace pfh
