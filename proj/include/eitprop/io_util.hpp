#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eitprop {

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double v);

/// FNV-1a over bytes; used for config hashes.
uint64_t fnv1a(const std::string& data);

std::string to_lower(std::string s);
std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

/// Case-insensitive Levenshtein distance, for unknown-key suggestions.
int edit_distance(const std::string& a, const std::string& b);

}  // namespace eitprop
