#pragma once

#include <cstdint>
#include <iosfwd>

namespace psum::cli {

// Differential self-test: random operation sequences applied to the tree
// and the naive array in lockstep, comparing every query exactly. Returns
// true when all cases agree; prints a witness for the first mismatch.
bool run_selftest(std::int64_t max_m, std::int64_t cases, std::uint64_t seed, std::ostream& out);

}  // namespace psum::cli
