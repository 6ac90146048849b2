#include "betti/group.hpp"

#include <algorithm>
#include <cctype>

namespace betti {

const char* to_string(Group g)
{
    switch (g) {
    case Group::PGL:
        return "PGL";
    case Group::SL:
        return "SL";
    case Group::GL:
        return "GL";
    }
    return "?";
}

std::optional<Group> parse_group(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "pgl")
        return Group::PGL;
    if (lower == "sl")
        return Group::SL;
    if (lower == "gl")
        return Group::GL;
    return std::nullopt;
}

} // namespace betti
