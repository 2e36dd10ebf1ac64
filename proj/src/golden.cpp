#include "bcb/golden.hpp"

#include <algorithm>

namespace bcb::golden {

namespace {
constexpr std::uint64_t p2(int e) { return 1ull << e; }
}

const std::vector<TableEntry>& table1() {
    static const std::vector<TableEntry> t = {
        {1, 2},           {2, 2},           {3, p2(2)},        {4, 2},
        {5, p2(3)},       {6, 2},           {7, p2(4)},        {8, 6},
        {9, p2(5)},       {10, 2},          {11, p2(6)},       {12, 2},
        {13, p2(7) + p2(4)}, {14, 14},      {15, p2(8)},       {16, 2},
        {17, p2(9)},      {18, 2},          {19, p2(10)},      {20, 6},
        {21, p2(11)},     {22, 2},          {23, p2(12)},      {24, 50},
        {25, p2(13)},     {26, 6},          {27, p2(14)},      {28, 2},
        {29, p2(15) + p2(11)}, {30, 2},     {31, p2(16) + 5 * p2(7)}, {32, 6},
        {33, p2(17) + p2(14)}, {34, 130},   {35, p2(18) + 24}, {36, 2},
        {37, p2(19)},     {38, 38},         {39, p2(20)},      {40, 2},
        {41, p2(21) + 15 * p2(11)}, {42, 2}, {43, p2(22)},     {44, 134},
        {45, p2(23)},     {46, 2},          {47, p2(24) + p2(20)}, {48, 4098},
        {49, p2(25)},     {50, 6},          {51, p2(26)},
    };
    return t;
}

std::optional<std::uint64_t> table1_jn(int n) {
    for (const auto& e : table1())
        if (e.n == n) return e.jn;
    return std::nullopt;
}

const std::vector<AppendixRow>& appendix_orbits() {
    static const std::vector<AppendixRow> rows = {
        {8, {{4, "100110001"}}},
        {13, {{16, "11110011001000"}}},
        {14, {{4, "101001101000101"}, {8, "101011100100101"}}},
        {20, {{4, "101010011010100010101"}}},
        {24, {{32, "1000110111011000100010001"}, {16, "1011001111010100101000101"}}},
        {26, {{4, "101010100110101010001010101"}}},
        {29, {{2048, "111111110111011000110010000000"}}},
        {31, {{512, "11110110011111100010101000001000"},
              {128, "11110110010110011001100000001000"}}},
        {32, {{4, "101010101001101010101000101010101"}}},
        {33, {{16384, "1111111111111001101001000000000000"}}},
        {34, {{64, "10101001110110111010000000110010101"},
              {32, "10101001110111101010010000110010101"},
              {16, "10101001111100111010000110110010101"},
              {8, "10101001111101101010010110110010101"},
              {8, "10101010101011011010001010101010101"}}},
        {35, {{8, "101010101010100111001001010101010101"},
              {16, "101010101011100111001000110101010101"}}},
        {38, {{4, "101010101010011010101010100010101010101"},
              {32, "101111110010111110100011100010011011101"}}},
        {41, {{2048, "111111011110101001111000100100001110100000"},
              {4096, "111111011110111001111000100010001110100000"},
              {8192, "111111111111001010111001000100100010100000"},
              {16384, "111111111111011010111001000010100010100000"}}},
        {44, {{4, "101010101010100110101010101010001010101010101"},
              {128, "101011111000111111110110000011011000110110101"}}},
        {47, {{1048576, "111111111111110100111111000001000000100000000000"}}},
        {48, {{4096, "1011001111011011010111010101000000000001000000101"}}},
        {50, {{4, "101010101010101001101010101010101000101010101010101"}}},
    };
    return rows;
}

std::optional<AppendixRow> appendix_row(int n) {
    for (const auto& r : appendix_orbits())
        if (r.n == n) return r;
    return std::nullopt;
}

const std::vector<long>& appendix_n_list() {
    static const std::vector<long> ns = {
        13,   14,   33,   34,   61,   62,   97,   98,   103,  141,  142,  193,
        194,  253,  254,  321,  322,  397,  398,  481,  482,  573,  574,  673,
        674,  713,  781,  782,  897,  898,  1021, 1022, 1153, 1154, 1293, 1294,
        1441, 1442, 1597, 1598, 1761, 1762, 1933, 1934, 2113, 2114, 2301, 2302,
        2497, 2498, 2701, 2702, 2913, 2914, 3133, 3134, 3361, 3362, 3597, 3598,
        3841, 3842, 4093, 4094, 4353, 4354, 4621, 4622, 4897, 4898, 5181, 5182,
        5473, 5474, 5773, 5774, 6081, 6082, 6397, 6398, 6721, 6722, 7053, 7054,
        7393, 7394, 7741, 7742, 8097, 8098, 8461, 8462, 8833, 8834, 9213, 9214,
        9601, 9602, 9997, 9998,
    };
    return ns;
}

const std::vector<std::vector<long>>& worked_difference_chain() {
    static const std::vector<std::vector<long>> chain = {
        {1, 1, 0, 0, 1, 1, 0, 1, 1},
        {0, -1, 0, 1, 0, -1, 1, 0},
        {-1, 1, 1, -1, -1, 2, -1},
        {2, 0, -2, 0, 3, -3},
        {-2, -2, 2, 3, -6},
        {0, 4, 1, -9},
        {4, -3, -10},
        {-7, -7},
        {0},
    };
    return chain;
}

} // namespace bcb::golden
