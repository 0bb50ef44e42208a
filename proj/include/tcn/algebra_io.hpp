#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "tcn/algebra.hpp"

namespace tcn {

struct LoadOptions {
    // Honoured only for bases larger than kAssociativityCheckLimit.
    bool skip_associativity = false;
};

inline constexpr std::size_t kAssociativityCheckLimit = 64;

struct LoadedSpace {
    SpaceDescriptor space;
    std::vector<Violation> violations;
};

// Parses the custom-algebra JSON document. Structural problems (unknown basis
// names, bad fields, malformed coefficients) throw InputError; violated
// algebra laws are returned in `violations`.
LoadedSpace read_space_json(const nlohmann::json& doc, const LoadOptions& options = {});
LoadedSpace read_space_file(const std::filesystem::path& path, const LoadOptions& options = {});

// As read_space_file, but any violation is an InputError.
SpaceDescriptor load_space(const std::filesystem::path& path, const LoadOptions& options = {});

// Writes every nonzero structure constant with i <= j in basis order.
nlohmann::json space_to_json(const SpaceDescriptor& space);

nlohmann::json element_to_json(const Element& e);

}  // namespace tcn
