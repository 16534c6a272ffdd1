#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <variant>

#include <aginv/descriptor.hpp>

namespace aginv::cli {

using ParsedDescriptor = std::variant<GroupDescriptor, HomSpaceDescriptor>;

class DescriptorParseError : public std::runtime_error {
public:
    DescriptorParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Line-oriented `key = value` format with `#` comments. Keys are exactly
// {kind, label, char, g, r, u, rho, commutative, g_H, r_H,
// stabilizer_connected}; unknown or duplicate keys are hard errors.
// `kind` is required and must be `group` or `homspace`. Everything else
// defaults: char = 0, counts = 0, commutative = false,
// stabilizer_connected = true, label empty.
ParsedDescriptor parse_descriptor(std::istream& in);
ParsedDescriptor parse_descriptor_text(const std::string& text);
ParsedDescriptor parse_descriptor_file(const std::string& path);

}  // namespace aginv::cli
