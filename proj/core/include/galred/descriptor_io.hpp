#ifndef GALRED_DESCRIPTOR_IO_HPP
#define GALRED_DESCRIPTOR_IO_HPP

#include "galred/fibre.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galred {

/// Result of parsing a fibre-descriptor document. On success the descriptor
/// also passed FibreDescriptor::validate(). All schema violations are
/// collected rather than stopping at the first.
struct DescriptorParse {
    std::optional<FibreDescriptor> descriptor;
    std::vector<std::string> errors;
};

/// Strict parser for the descriptor JSON format: integers are decimal
/// strings, coefficient vectors have length n0, unknown fields are
/// rejected.
DescriptorParse parse_descriptor(const std::string& json_text);

/// Canonical serialization: key-sorted, two-space indent, decimal-string
/// integers. parse(write(d)) reproduces the document byte for byte.
std::string write_descriptor(const FibreDescriptor& d);

}  // namespace galred

#endif
