#pragma once

#include <iosfwd>
#include <string>

#include "sumfree/residue_set.hpp"

namespace sumfree {

/// Malformed set file. `line` is 1-based; 0 means the failure is not tied
/// to a specific line (e.g. unreadable file).
class SetParseError : public std::runtime_error {
 public:
  SetParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Text set format shared by every CLI command:
///   p=<decimal prime>
///   <one decimal residue per line>
/// Duplicate residues are rejected. Blank lines and trailing whitespace are
/// tolerated; anything else is an error naming the offending line.
ResidueSet read_set(std::istream& in);
ResidueSet read_set_file(const std::string& path);

/// Canonical form: sorted residues in [0, p), one per line.
void write_set(std::ostream& out, const ResidueSet& s);
void write_set_file(const std::string& path, const ResidueSet& s);

}  // namespace sumfree
