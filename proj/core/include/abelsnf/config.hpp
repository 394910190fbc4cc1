#pragma once

#include <cstdint>
#include <string>

namespace abelsnf {

/// Size caps, overridable from a JSON config file named by ABELSNF_CONFIG
/// and from command-line flags.
struct Limits {
  std::uint64_t dense = 4096;     // materialized |G| x |G| matrices
  std::uint64_t spectrum = 1024;  // |G| for spectra and predictions
  std::uint64_t snf = 512;        // |G| for the SNF oracle
  std::uint32_t ncube = 8;        // n for n-cube SNF experiments
};

inline constexpr const char* kConfigEnvVar = "ABELSNF_CONFIG";

/// Keys: "dense", "spectrum", "snf", "ncube"; missing keys keep `base`.
Limits load_limits(const std::string& path, Limits base = {});
/// Reads the file named by ABELSNF_CONFIG when set, else the defaults.
Limits limits_from_environment();

}  // namespace abelsnf
