// labels.hpp
// Measurement-setting and outcome labels shared by the quantum and box layers.

#pragma once

#include <cstddef>

namespace boxlab {

enum class Setting { U = 0, D = 1 };
enum class Outcome { Plus = 0, Minus = 1 };

inline constexpr char to_char(Setting s) { return s == Setting::U ? 'U' : 'D'; }
inline constexpr char to_char(Outcome o) { return o == Outcome::Plus ? '+' : '-'; }
inline constexpr int sign(Outcome o) { return o == Outcome::Plus ? 1 : -1; }

}  // namespace boxlab
