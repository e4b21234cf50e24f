#include "densest/stream_file.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "densest/error.hpp"

namespace densest {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw StreamError(ErrorCode::SyntaxError, line,
                      "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

StreamFile parse_stream(std::string_view text, bool validate) {
  StreamFile stream;
  bool have_header = false;
  Graph replayed;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw StreamError(ErrorCode::SyntaxError, line_no, "expected header 'n <int>'");
      }
      const std::uint64_t n = parse_uint(fields[1], line_no);
      if (n > std::numeric_limits<NodeId>::max()) {
        throw StreamError(ErrorCode::SyntaxError, line_no, "node count too large");
      }
      stream.n = static_cast<NodeId>(n);
      replayed = Graph(stream.n);
      have_header = true;
    } else {
      if (fields.size() != 3 || (fields[0] != "+" && fields[0] != "-")) {
        throw StreamError(ErrorCode::SyntaxError, line_no, "expected '+ <u> <v>' or '- <u> <v>'");
      }
      const std::uint64_t a = parse_uint(fields[1], line_no);
      const std::uint64_t b = parse_uint(fields[2], line_no);
      if (a >= stream.n || b >= stream.n) {
        throw StreamError(ErrorCode::NodeOutOfRange, line_no,
                          "node id outside [0, " + std::to_string(stream.n) + ")");
      }
      if (a == b) throw StreamError(ErrorCode::SyntaxError, line_no, "self-loop");
      const EdgeUpdate up{Edge::canonical(static_cast<NodeId>(a), static_cast<NodeId>(b)),
                          fields[0] == "+" ? +1 : -1};
      if (validate) {
        try {
          replayed.apply(up);
        } catch (const Error& err) {
          throw StreamError(ErrorCode::TurnstileViolation, line_no, err.what());
        }
      }
      stream.updates.push_back(up);
    }
  }
  if (!have_header) throw StreamError(ErrorCode::SyntaxError, line_no, "missing header 'n <int>'");
  return stream;
}

StreamFile read_stream_file(const std::filesystem::path& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_stream(buffer.str(), validate);
}

std::string serialize_stream(const StreamFile& stream) {
  std::string out = "n " + std::to_string(stream.n) + "\n";
  for (const EdgeUpdate& up : stream.updates) {
    out += up.delta > 0 ? "+ " : "- ";
    out += std::to_string(up.edge.u);
    out += ' ';
    out += std::to_string(up.edge.v);
    out += '\n';
  }
  return out;
}

void write_stream_file(const StreamFile& stream, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << serialize_stream(stream);
}

Graph final_graph(const StreamFile& stream) { return replay(stream.n, stream.updates); }

}  // namespace densest
