#include "trigrid/keyfile.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace trigrid {

namespace {

constexpr std::string_view kAlphabetDirective = "%alphabet=";

std::string at_line(const std::string& message, std::uint64_t line) {
  return message + " at line " + std::to_string(line);
}

}  // namespace

std::vector<std::string> KeyFile::keys() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const KeyRecord& record : records) out.push_back(record.key);
  return out;
}

std::string KeyFile::effective_alphabet() const {
  if (!alphabet.empty()) return alphabet;
  std::set<char> symbols;
  for (const KeyRecord& record : records) {
    symbols.insert(record.key.begin(), record.key.end());
  }
  return std::string(symbols.begin(), symbols.end());
}

std::uint32_t KeyFile::max_key_length() const {
  std::size_t longest = 0;
  for (const KeyRecord& record : records) {
    longest = std::max(longest, record.key.size());
  }
  return static_cast<std::uint32_t>(longest);
}

KeyFile read_key_file(std::istream& in) {
  KeyFile file;
  std::string line;
  std::uint64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '%') {
      if (line.rfind(kAlphabetDirective, 0) != 0) {
        throw KeyFileError(at_line("unknown directive", number));
      }
      if (!file.alphabet.empty()) {
        throw KeyFileError(at_line("repeated alphabet directive", number));
      }
      const std::string symbols = line.substr(kAlphabetDirective.size());
      if (symbols.empty()) {
        throw KeyFileError(at_line("empty alphabet directive", number));
      }
      if (std::set<char>(symbols.begin(), symbols.end()).size() != symbols.size()) {
        throw KeyFileError(at_line("alphabet repeats a symbol", number));
      }
      file.alphabet = symbols;
      continue;
    }
    file.records.push_back({line, number});
  }
  return file;
}

KeyFile read_key_file_at(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeyFileError("cannot open key file: " + path);
  return read_key_file(in);
}

void write_key_file(std::ostream& out, const std::vector<std::string>& keys,
                    const std::string& alphabet) {
  if (!alphabet.empty()) out << kAlphabetDirective << alphabet << '\n';
  for (const std::string& key : keys) out << key << '\n';
}

void write_key_file_at(const std::string& path, const std::vector<std::string>& keys,
                       const std::string& alphabet) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KeyFileError("cannot open key file for writing: " + path);
  write_key_file(out, keys, alphabet);
  out.flush();
  if (!out) throw KeyFileError("failed writing key file: " + path);
}

}  // namespace trigrid
