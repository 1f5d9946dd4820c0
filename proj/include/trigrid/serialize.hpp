// Binary artifact format for indexes and families.  Layout: magic "INS1",
// little-endian fixed-width header (k, l, key count, flags for container
// variant and family), the alphabet bytes, then per structure the position
// plane, the mark plane, the containers as length-prefixed entries, and the
// shortstore.  Family artifacts append every reverse structure behind a
// structure-index header.  Saving a loaded artifact reproduces the file
// byte for byte.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "trigrid/family.hpp"
#include "trigrid/index.hpp"

namespace trigrid {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void save_index(std::ostream& out, const TripletIndex& index);
void save_family(std::ostream& out, const ShiftedFamily& family);

struct LoadedArtifact {
  bool is_family = false;
  std::optional<TripletIndex> index;    // engaged when !is_family
  std::optional<ShiftedFamily> family;  // engaged when is_family
};

// Throws FormatError on malformed, truncated, inconsistent, or trailing
// bytes; the restored structures revalidate every invariant.
LoadedArtifact load_artifact(std::istream& in);

void save_index_at(const std::string& path, const TripletIndex& index);
void save_family_at(const std::string& path, const ShiftedFamily& family);
LoadedArtifact load_artifact_at(const std::string& path);

}  // namespace trigrid
