#pragma once

#include <cstdint>

// Runs the named scientific property checks, printing one [PASS]/[FAIL] line
// per check on stdout.  Returns 0 when every check passes, 1 otherwise (the
// first failing property is named at the end).  `samples` scales the
// randomized checks; `seed` keys every random stream.
int run_verify_suite(std::uint64_t samples, std::uint64_t seed);
