#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace psum::cli {

// Raised on malformed array files; the driver maps it to exit code 2.
struct ArrayFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented text format holding the logical values, never the internal
// cells: a header line "M <count>", then one integer per line. Rebuilding
// the tree on load keeps the file independent of capacity rules.
std::vector<std::int64_t> read_array_file(const std::filesystem::path& path);
void write_array_file(const std::filesystem::path& path, std::span<const std::int64_t> values);

}  // namespace psum::cli
