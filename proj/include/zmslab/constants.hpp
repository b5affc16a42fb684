#pragma once

namespace zmslab {

// Euler's constant gamma = -Gamma'(1), 40 significant digits.
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310422;

inline constexpr double kPi = 3.1415926535897932384626433832795028841972;
inline constexpr double kTwoPi = 6.2831853071795864769252867665590057683943;

}  // namespace zmslab
