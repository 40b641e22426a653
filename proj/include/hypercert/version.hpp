#pragma once

namespace hypercert {

inline constexpr const char kToolVersion[] = "0.1.0";

}  // namespace hypercert
