#ifndef EGS_INGEST_HPP
#define EGS_INGEST_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egs/graph6.hpp"

namespace egs {

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

/// Raised by a strict reader on the first malformed line.
class IngestAborted : public FormatError {
 public:
  IngestAborted(std::size_t line, const std::string& message)
      : FormatError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented graph6 reader.
///
/// Blank lines and lines starting with '>' are skipped, except that a
/// leading ">>graph6<<" marker is stripped and the rest of the line parsed.
/// A trailing '\r' is ignored. Malformed lines are recorded and skipped,
/// or abort the stream in strict mode.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, bool strict = false) : in_(in), strict_(strict) {}

  std::optional<Graph> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      std::string_view line(raw);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      constexpr std::string_view kMarker = ">>graph6<<";
      if (line.starts_with(kMarker)) {
        line.remove_prefix(kMarker.size());
      } else if (line.starts_with('>')) {
        continue;
      }
      if (line.empty()) continue;
      try {
        return parse_graph6(line);
      } catch (const FormatError& e) {
        if (strict_) throw IngestAborted(line_, e.what());
        errors_.push_back({line_, e.what()});
      }
    }
    return std::nullopt;
  }

  const std::vector<IngestError>& errors() const { return errors_; }
  /// Number of the last line consumed (1-based).
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  bool strict_;
  std::size_t line_ = 0;
  std::vector<IngestError> errors_;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestError> errors;
};

inline IngestResult ingest_graph6(std::istream& in, bool strict = false) {
  Graph6Reader reader(in, strict);
  IngestResult out;
  while (auto g = reader.next()) out.graphs.push_back(*g);
  out.errors = reader.errors();
  return out;
}

}  // namespace egs

#endif  // EGS_INGEST_HPP
