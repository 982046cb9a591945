#pragma once

#include <string>
#include <string_view>

#include "eulercf/recurrence.hpp"

namespace eulercf::tools {

/// Reads a scheme document:
///   {"f": {"p": "0", "q": "1"}, "g": {...}, "h": {...}, "seed_note": "..."}
/// where each coefficient is p + q k. Values are rational strings ("3/4",
/// "-2") or JSON integers. Throws std::invalid_argument on malformed input.
RecurrenceScheme parse_scheme(std::string_view json_text);

/// parse_scheme on a file's contents. Throws std::runtime_error if the file
/// cannot be read.
RecurrenceScheme load_scheme(const std::string& path);

}  // namespace eulercf::tools
