#pragma once

#include <cstdint>

#include "curv4/report.hpp"

namespace curv4 {

// Runs the full acceptance suite (ten criteria) and returns the report.
// Deterministic given the seed; every randomized check derives its own
// sub-stream, so criteria are independent of each other's sample counts.
VerificationReport run_acceptance_suite(std::uint64_t seed = 42);

} // namespace curv4
