// Line-oriented key files: one raw key per line, '#' comment lines and blank
// lines ignored, and an optional '%alphabet=<symbols>' directive declaring
// the symbol set (inferred from the key content when absent).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigrid {

class KeyFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyRecord {
  std::string key;
  std::uint64_t line;  // 1-based source line, for diagnostics
};

struct KeyFile {
  std::string alphabet;  // declared alphabet; empty when no directive appeared
  std::vector<KeyRecord> records;

  std::vector<std::string> keys() const;

  // The declared alphabet, or the sorted distinct symbols of the keys.
  std::string effective_alphabet() const;

  // The longest key, 0 when empty.
  std::uint32_t max_key_length() const;
};

// Parse errors (malformed or repeated directives) carry the line number.
// Keys are taken verbatim; validating them against an alphabet and length
// bound is the caller's concern.
KeyFile read_key_file(std::istream& in);
KeyFile read_key_file_at(const std::string& path);

// Writes the directive line (when alphabet is nonempty) followed by the keys.
void write_key_file(std::ostream& out, const std::vector<std::string>& keys,
                    const std::string& alphabet);
void write_key_file_at(const std::string& path, const std::vector<std::string>& keys,
                       const std::string& alphabet);

}  // namespace trigrid
