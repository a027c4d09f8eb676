#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace vtrans {

/// Three-valued answer for decision procedures that may be inconclusive.
enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "Yes";
    case Tri::No:
      return "No";
    default:
      return "Unknown";
  }
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched genus between objects that must live on the same surface.
struct DimensionError : Error {
  using Error::Error;
};

/// Parameter outside the supported domain (k = 0, level not a multiple of k,
/// nonzero bundle Euler number where exact arithmetic is refused, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Script text that does not conform to the grammar.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

/// Structurally well-formed input that violates a semantic rule.  When the
/// violation is tied to a specific event, event_index identifies it.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what,
                           std::optional<std::size_t> event = std::nullopt)
      : Error(what), event_index(event) {}
  std::optional<std::size_t> event_index;
};

/// A loop word whose total obstruction is nonzero; carries the value.
struct ObstructionError : Error {
  explicit ObstructionError(long long v)
      : Error("not realizable transversely; obstruction = " + std::to_string(v)),
        value(v) {}
  long long value;
};

}  // namespace vtrans
