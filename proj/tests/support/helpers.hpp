#pragma once

#include <string>

#include "hyperbelief/hyperreal.hpp"

namespace testing_support {

using hyperbelief::Hyperreal;

inline Hyperreal H(const std::string& text) { return Hyperreal::parse(text); }
inline const Hyperreal e = Hyperreal::eps();

// Fixed seeds so property failures reproduce.
inline constexpr unsigned long long kSeed = 20260101ULL;

}  // namespace testing_support
