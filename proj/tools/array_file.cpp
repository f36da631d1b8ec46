#include "array_file.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace psum::cli {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view token, const std::string& what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ArrayFileError(what + ": not a 64-bit integer: '" + std::string(token) + "'");
    return value;
}

}  // namespace

std::vector<std::int64_t> read_array_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ArrayFileError("cannot open '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line))
        throw ArrayFileError("'" + path.string() + "': missing header line");
    std::string_view header = trim(line);
    if (header.size() < 2 || header[0] != 'M' || (header[1] != ' ' && header[1] != '\t'))
        throw ArrayFileError("'" + path.string() + "': header must be 'M <count>'");
    const std::int64_t count = parse_int(trim(header.substr(2)), path.string() + ": count");
    if (count < 0)
        throw ArrayFileError("'" + path.string() + "': count must be >= 0");

    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(count));
    std::int64_t line_no = 1;
    while (static_cast<std::int64_t>(values.size()) < count) {
        if (!std::getline(in, line))
            throw ArrayFileError("'" + path.string() + "': expected " + std::to_string(count) +
                                 " values, got " + std::to_string(values.size()));
        ++line_no;
        values.push_back(
            parse_int(trim(line), path.string() + ":" + std::to_string(line_no)));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty())
            throw ArrayFileError("'" + path.string() + ":" + std::to_string(line_no) +
                                 "': trailing content after " + std::to_string(count) + " values");
    }
    return values;
}

void write_array_file(const std::filesystem::path& path, std::span<const std::int64_t> values) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw ArrayFileError("cannot write '" + path.string() + "'");
    out << "M " << values.size() << '\n';
    for (std::int64_t v : values)
        out << v << '\n';
    out.flush();
    if (!out)
        throw ArrayFileError("write failed for '" + path.string() + "'");
}

}  // namespace psum::cli
