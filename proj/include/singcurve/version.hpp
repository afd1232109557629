#pragma once

namespace singcurve {
inline constexpr const char* kToolName = "singcurve";
inline constexpr const char* kToolVersion = "0.1.0";
}  // namespace singcurve
