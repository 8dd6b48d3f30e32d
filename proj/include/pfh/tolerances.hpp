#pragma once

namespace pfh::tol {

inline constexpr double kRoot = 1e-12;       // z_of_slope and other monotone root solves
inline constexpr double kQuadrature = 1e-10; // relative, adaptive quadrature
inline constexpr double kCrossRoute = 1e-8;  // two independent numeric routes
inline constexpr double kAction = 1e-9;      // comparisons between numeric actions
inline constexpr double kLengthIdentity = 1e-6;

} // namespace pfh::tol
