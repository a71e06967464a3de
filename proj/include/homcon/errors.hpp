#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcon {

// Malformed input text (group specs, CLI parameters). Carries the offset of
// the first offending character when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A computation was refused because it exceeds a configured resource cap.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& msg)
      : std::runtime_error(msg + " (raise with --limit or HOMCON_LIMIT)") {}
};

// Enumeration caps. Exhaustive sweeps over 2^n subsets and group-element
// closures are refused beyond these sizes; sweep_n is the cap the CLI
// --limit flag raises.
struct Limits {
  int sweep_n = 24;                    // max ground-set size for 2^n subset sweeps
  std::uint64_t group_order = 6000000; // max group order for element closure
  int box_volume = 96;                 // max r*c*t for tableau enumeration
};

}  // namespace homcon
