#pragma once

namespace cherrylab {

inline constexpr const char* kVersion = "0.1.0";

}
