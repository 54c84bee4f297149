#pragma once

#include <cstdint>
#include <string>

#include "soliton/acceptance.hpp"
#include "soliton/random.hpp"

namespace soliton::test {

// SOLITON_FORGE_SEED overrides the default; the salt separates suites.
inline RandomSource rng(std::uint64_t salt) { return RandomSource(seed_from_env(kDefaultSeed) * 31u + salt); }

inline std::string seed_note() { return "SOLITON_FORGE_SEED=" + std::to_string(seed_from_env(kDefaultSeed)); }

}  // namespace soliton::test
