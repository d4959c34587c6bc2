#pragma once

#include "dicrit/error.hpp"
#include "dicrit/io/json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dicrit::io {

struct Options {
    std::uint64_t seed = 0;
    int max_depth = 24;
    std::optional<int> bound;
    pencil::ExtensionPolicy extend = pencil::ExtensionPolicy::quadratic;
};

/// Dispatches one module operation on a parsed request and returns its
/// payload. Unknown commands raise ParseError("command", ...).
Json run_command(const std::string& command, const std::string& action, const Json& input, const Options& options);

/// Commands with their actions ("" when a command has none).
const std::vector<std::pair<std::string, std::vector<std::string>>>& command_table();

/// {"kind", "message"} plus "field"/"reason" for parse errors.
Json error_to_json(const Error& e);

}  // namespace dicrit::io
