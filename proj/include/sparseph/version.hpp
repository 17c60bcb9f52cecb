#pragma once

namespace sparseph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sparseph
