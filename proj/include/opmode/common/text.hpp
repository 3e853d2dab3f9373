#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace opmode {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

double parse_double(std::string_view s);
long long parse_int(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string> split_fields(std::string_view line, char sep = ',');

/// Levenshtein distance, for "did you mean" suggestions.
std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace opmode
