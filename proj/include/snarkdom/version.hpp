#pragma once

namespace snarkdom {

inline constexpr const char* kVersion = "0.1.0";

}
