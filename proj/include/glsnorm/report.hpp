#pragma once

#include <string>
#include <vector>

namespace glsnorm {

/// Row-oriented output table. +inf serializes as the literal "inf"; reasons
/// and notes belong in a diagnostics column, never in a value column.
struct Table {
    std::string schema;                     // versioned schema tag
    std::vector<std::string> comments;      // emitted as leading '#' lines
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Shortest-round-trip style formatting: fixed %.17g for doubles, "inf" for
/// infinities, so identical runs produce byte-identical files.
std::string format_value(double v);

std::string render_csv(const Table& t);
std::string render_json(const Table& t);

/// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace glsnorm
