#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/io.hpp"

namespace kstab {

// =========================================================================
// Built-in example structures, addressable from the command line by name.
// A spec is "name" or "name:arg1,arg2,..." (e.g. "quadratic-diagonal:1,2,4",
// "cyclic3d:3"). Each example resolves to an input document whose bivector
// is stored under the name "pi", plus — when the structure is homogeneous —
// its natural order k.
// =========================================================================

struct RegistryExample {
    std::string name;        // resolved spec, arguments included
    std::string description;
    InputDocument doc;       // bivector under "pi"; algebra/representation when natural
    std::optional<int> k;    // homogeneity order; absent for inhomogeneous examples
};

// Resolves a spec; throws InvalidInput on unknown names or malformed args.
RegistryExample registry_example(const std::string& spec);

// Name patterns and one-line summaries for every built-in example.
struct RegistryEntry {
    std::string pattern;     // e.g. "cyclic3d:<k>"
    std::string summary;
};
std::vector<RegistryEntry> registry_list();

} // namespace kstab
