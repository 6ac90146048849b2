#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace betti {

enum class Group { PGL, SL, GL };

const char* to_string(Group g);
// Accepts "pgl", "sl", "gl" in any case.
std::optional<Group> parse_group(std::string_view text);

} // namespace betti
