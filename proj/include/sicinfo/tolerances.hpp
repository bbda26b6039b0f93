#pragma once

namespace sicinfo {

// Absolute tolerances, tuned for double precision and d <= 16.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kReconTol = 1e-9;
inline constexpr double kKernelTol = 1e-12;
inline constexpr double kSumTol = 1e-9;
inline constexpr double kSicTol = 1e-9;
inline constexpr double kRankTol = 1e-9;

// Probabilities below this are exact zeros in entropy sums.
inline constexpr double kZeroProb = 1e-15;

}  // namespace sicinfo
