#pragma once

// Regression baselines for the watermark detector, recorded from the seeded
// oracle runs (image seed 424242, sequence seed 1001, alpha 0.1) and frozen.
// The detector is deterministic, so tests accept only +-0.05 drift.
namespace wm_baselines {

inline constexpr bool kFrozen = true;
inline constexpr double kMarkedCorrelation = 0.366108;
inline constexpr double kBatteryMax = 0.238082;

} // namespace wm_baselines
