#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "densest/graph.hpp"

namespace densest {

/// Text stream format:
///
///   n <int>
///   + <u> <v>
///   - <u> <v>
///
/// Node ids are 0-based and may appear in either order. Lines starting with
/// '#' and blank lines are ignored.
struct StreamFile {
  NodeId n = 0;
  std::vector<EdgeUpdate> updates;

  friend bool operator==(const StreamFile&, const StreamFile&) = default;
};

/// Strict parse. With validate set, the updates are replayed and a strict
/// turnstile violation raises TurnstileViolation at the offending line.
StreamFile parse_stream(std::string_view text, bool validate = true);
StreamFile read_stream_file(const std::filesystem::path& path, bool validate = true);

std::string serialize_stream(const StreamFile& stream);
void write_stream_file(const StreamFile& stream, const std::filesystem::path& path);

Graph final_graph(const StreamFile& stream);

}  // namespace densest
