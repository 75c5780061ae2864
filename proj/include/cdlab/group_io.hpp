#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cdlab/group.hpp"

namespace cdlab {

// Text format, line-based, `#` comments:
//   cayley <n>   followed by n rows of n space-separated indices
//   perm <deg>   followed by one generator per line as an image list
// Identity must be index 0 in cayley form; the perm loader canonicalizes.
Group parse_group_text(std::istream& in, std::string label,
                       const GroupLimits& limits = {});

Group load_group(const std::filesystem::path& path,
                 const GroupLimits& limits = {});

// Serializes in cayley form; reloading yields an identical table.
std::string serialize_cayley(const Group& g);

}  // namespace cdlab
