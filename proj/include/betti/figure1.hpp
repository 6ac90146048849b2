#pragma once

#include <array>
#include <cstdint>

#include "betti/group.hpp"

namespace betti {

// Published stable Betti numbers in even degrees 0, 2, ..., 20.
struct Figure1Row {
    Group group;
    int rank;
    std::array<std::uint64_t, 11> values;
};

using Figure1Table = std::array<Figure1Row, 7>;

inline constexpr Figure1Table figure1 = {{
    {Group::PGL, 2, {1, 2, 5, 11, 23, 45, 87, 160, 290, 512, 889}},
    {Group::PGL, 3, {1, 2, 6, 14, 33, 71, 152, 307, 612, 1181, 2243}},
    {Group::PGL, 4, {1, 2, 6, 15, 36, 81, 180, 380, 788, 1588, 3138}},
    {Group::PGL, 5, {1, 2, 6, 15, 37, 84, 190, 408, 863, 1772, 3574}},
    {Group::PGL, 6, {1, 2, 6, 15, 37, 85, 193, 418, 891, 1847, 3760}},
    {Group::PGL, 7, {1, 2, 6, 15, 37, 85, 194, 421, 901, 1875, 3835}},
    {Group::SL, 2, {1, 3, 9, 22, 51, 109, 225, 443, 849, 1579, 2874}},
}};

inline constexpr int figure1_max_degree = 20;

} // namespace betti
