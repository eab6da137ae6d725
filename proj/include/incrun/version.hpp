#pragma once

namespace incrun {

inline constexpr char kVersion[] = "1.0.0";

}  // namespace incrun
