// Generated by tools/gen_oeis_data.py -- do not edit by hand.
#include "polytri/oeis.hpp"

namespace polytri {
namespace {

constexpr long long kA027907[] = {
    1, 1, 1, 1, 1, 2, 3, 2, 1, 1, 3, 6, 7, 6, 3, 1, 1, 4, 10, 16, 19, 16, 10,
    4, 1, 1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1, 1, 6, 21, 50, 90, 126, 141,
    126, 90, 50, 21, 6, 1, 1, 7, 28, 77, 161, 266, 357, 393, 357, 266, 161,
    77, 28, 7, 1, 1, 8, 36, 112, 266, 504, 784, 1016, 1107, 1016, 784, 504,
    266, 112, 36, 8, 1, 1, 9, 45, 156, 414, 882, 1554, 2304, 2907, 3139, 2907,
    2304, 1554, 882, 414, 156, 45, 9, 1, 1, 10, 55, 210, 615, 1452, 2850,
    4740, 6765, 8350, 8953, 8350, 6765, 4740, 2850, 1452, 615, 210, 55, 10, 1,
    1, 11, 66, 275, 880, 2277, 4917, 9042, 14355, 19855, 24068, 25653, 24068,
    19855, 14355, 9042, 4917, 2277, 880, 275, 66, 11, 1, 1, 12, 78, 352, 1221,
    3432, 8074, 16236, 28314, 43252, 58278, 69576, 73789, 69576, 58278, 43252,
    28314, 16236, 8074, 3432, 1221, 352, 78, 12, 1, 1, 13, 91, 442, 1651,
    5005, 12727, 27742, 52624, 87802, 129844, 171106, 201643, 212941, 201643,
    171106, 129844, 87802, 52624, 27742, 12727, 5005, 1651, 442, 91, 13, 1, 1,
    14, 105, 546, 2184, 7098, 19383, 45474, 93093, 168168, 270270, 388752,
    502593, 585690, 616227, 585690, 502593, 388752, 270270, 168168, 93093,
    45474, 19383, 7098, 2184, 546, 105, 14, 1, 1, 15, 120, 665, 2835, 9828,
    28665, 71955, 157950, 306735, 531531, 827190, 1161615, 1477035, 1704510,
    1787607, 1704510, 1477035, 1161615, 827190, 531531, 306735, 157950, 71955,
    28665, 9828, 2835, 665, 120, 15, 1};

constexpr long long kA008287[] = {
    1, 1, 1, 1, 1, 1, 2, 3, 4, 3, 2, 1, 1, 3, 6, 10, 12, 12, 10, 6, 3, 1, 1,
    4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1, 1, 5, 15, 35, 65, 101, 135,
    155, 155, 135, 101, 65, 35, 15, 5, 1, 1, 6, 21, 56, 120, 216, 336, 456,
    546, 580, 546, 456, 336, 216, 120, 56, 21, 6, 1, 1, 7, 28, 84, 203, 413,
    728, 1128, 1554, 1918, 2128, 2128, 1918, 1554, 1128, 728, 413, 203, 84,
    28, 7, 1, 1, 8, 36, 120, 322, 728, 1428, 2472, 3823, 5328, 6728, 7728,
    8092, 7728, 6728, 5328, 3823, 2472, 1428, 728, 322, 120, 36, 8, 1, 1, 9,
    45, 165, 486, 1206, 2598, 4950, 8451, 13051, 18351, 23607, 27876, 30276,
    30276, 27876, 23607, 18351, 13051, 8451, 4950, 2598, 1206, 486, 165, 45,
    9, 1, 1, 10, 55, 220, 705, 1902, 4455, 9240, 17205, 29050, 44803, 63460,
    82885, 100110, 112035, 116304, 112035, 100110, 82885, 63460, 44803, 29050,
    17205, 9240, 4455, 1902, 705, 220, 55, 10, 1, 1, 11, 66, 286, 990, 2882,
    7282, 16302, 32802, 59950, 100298, 154518, 220198, 291258, 358490, 411334,
    440484, 440484, 411334, 358490, 291258, 220198, 154518, 100298, 59950,
    32802, 16302, 7282, 2882, 990, 286, 66, 11, 1, 1, 12, 78, 364, 1353, 4224,
    11440, 27456, 59268, 116336, 209352, 347568, 534964, 766272, 1024464,
    1281280, 1501566, 1650792, 1703636, 1650792, 1501566, 1281280, 1024464,
    766272, 534964, 347568, 209352, 116336, 59268, 27456, 11440, 4224, 1353,
    364, 78, 12, 1};

constexpr long long kA035343[] = {
    1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 4, 3, 2, 1, 1, 3, 6, 10, 15, 18, 19, 18,
    15, 10, 6, 3, 1, 1, 4, 10, 20, 35, 52, 68, 80, 85, 80, 68, 52, 35, 20, 10,
    4, 1, 1, 5, 15, 35, 70, 121, 185, 255, 320, 365, 381, 365, 320, 255, 185,
    121, 70, 35, 15, 5, 1, 1, 6, 21, 56, 126, 246, 426, 666, 951, 1246, 1506,
    1686, 1751, 1686, 1506, 1246, 951, 666, 426, 246, 126, 56, 21, 6, 1, 1, 7,
    28, 84, 210, 455, 875, 1520, 2415, 3535, 4795, 6055, 7140, 7875, 8135,
    7875, 7140, 6055, 4795, 3535, 2415, 1520, 875, 455, 210, 84, 28, 7, 1, 1,
    8, 36, 120, 330, 784, 1652, 3144, 5475, 8800, 13140, 18320, 23940, 29400,
    34000, 37080, 38165, 37080, 34000, 29400, 23940, 18320, 13140, 8800, 5475,
    3144, 1652, 784, 330, 120, 36, 8, 1, 1, 9, 45, 165, 495, 1278, 2922, 6030,
    11385, 19855, 32211, 48879, 69675, 93600, 118800, 142740, 162585, 175725,
    180325, 175725, 162585, 142740, 118800, 93600, 69675, 48879, 32211, 19855,
    11385, 6030, 2922, 1278, 495, 165, 45, 9, 1, 1, 10, 55, 220, 715, 1992,
    4905, 10890, 22110, 41470, 72403, 118360, 182005, 264220, 363165, 473694,
    587400, 693450, 780175, 837100, 856945, 837100, 780175, 693450, 587400,
    473694, 363165, 264220, 182005, 118360, 72403, 41470, 22110, 10890, 4905,
    1992, 715, 220, 55, 10, 1};

}  // namespace

const std::vector<OeisEntry>& embedded_oeis_entries() {
    static const std::vector<OeisEntry> entries = {
        {"A027907", 2, 16, std::vector<long long>(kA027907, kA027907 + 256)},
        {"A008287", 3, 13, std::vector<long long>(kA008287, kA008287 + 247)},
        {"A035343", 4, 11, std::vector<long long>(kA035343, kA035343 + 231)},
    };
    return entries;
}

}  // namespace polytri
