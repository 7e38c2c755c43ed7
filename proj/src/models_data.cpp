// Shipped correction-table data. Each table carries an FNV-1a checksum
// over its decimal rendering; see table_checksum().

#include <cstdint>
#include <vector>

namespace primew::detail {

// g_large: 1335 entries, slice width 10000000000000, range max 13349999999999999
const std::vector<int>& g_large_exponents() {
    static const std::vector<int> t = {
    800, 369, 97, -19, -69, -133, -151, -138, -195, -200, -161, -182, -210, -177, -212, -190, -195, -138, -169, -199,
    -205, -199, -177, -175, -157, -150, -165, -156, -163, -162, -136, -158, -169, -175, -152, -150, -121, -134, -143, -134,
    -120, -125, -107, -115, -130, -90, -108, -125, -132, -134, -135, -134, -125, -119, -103, -88, -62, -88, -85, -89,
    -93, -89, -80, -77, -77, -74, -83, -70, -91, -89, -82, -75, -80, -78, -83, -82, -68, -61, -56, -47,
    -50, -63, -65, -74, -77, -72, -63, -67, -69, -72, -64, -41, -31, -29, -28, -28, -37, -42, -36, -40,
    -27, -26, -16, -22, -31, -37, -41, -38, -47, -40, -39, -39, -41, -42, -38, -37, -33, -39, -42, -31,
    -32, -39, -30, -25, -22, -11, -18, -18, -22, -18, -25, -30, -25, -24, -18, -15, -9, -6, -6, -8,
    -5, -1, 1, -14, -8, -9, -4, 0, -4, 4, 5, 4, 3, -2, -4, -10, 0, 1, 0, 4,
    -3, -8, -11, -13, -3, -1, 4, 1, -5, 0, 5, 6, 3, -2, -2, 3, 4, -2, 2, 2,
    2, -2, -1, -4, 3, 1, -1, 3, 5, 16, 14, 12, 18, 14, 13, 15, 15, 17, 17, 13,
    12, 3, 3, 5, 8, 8, 9, 11, 14, 19, 22, 20, 17, 14, 16, 16, 19, 17, 23, 28,
    29, 20, 22, 16, 19, 22, 21, 17, 19, 26, 28, 28, 28, 26, 25, 20, 19, 20, 20, 24,
    24, 31, 35, 31, 28, 33, 31, 31, 31, 28, 31, 30, 30, 41, 39, 41, 34, 32, 24, 27,
    26, 29, 30, 29, 23, 21, 19, 20, 14, 17, 17, 11, 13, 19, 20, 19, 19, 16, 18, 16,
    17, 22, 28, 31, 35, 35, 37, 34, 31, 30, 33, 25, 26, 26, 23, 21, 22, 21, 24, 23,
    19, 22, 23, 24, 27, 24, 23, 23, 25, 25, 21, 27, 28, 34, 34, 33, 36, 35, 36, 37,
    37, 34, 32, 33, 38, 47, 48, 46, 45, 47, 44, 44, 50, 43, 40, 44, 46, 44, 39, 41,
    42, 43, 43, 45, 44, 42, 44, 40, 41, 42, 42, 42, 40, 40, 40, 36, 35, 37, 36, 37,
    37, 37, 32, 32, 35, 37, 37, 38, 31, 31, 31, 28, 25, 28, 23, 25, 25, 23, 26, 29,
    30, 29, 28, 26, 27, 30, 35, 35, 35, 35, 34, 38, 37, 36, 35, 37, 39, 40, 35, 39,
    42, 38, 37, 40, 42, 42, 43, 42, 40, 39, 39, 40, 40, 38, 37, 40, 41, 41, 36, 34,
    38, 38, 34, 34, 33, 36, 35, 34, 34, 38, 38, 37, 36, 39, 37, 37, 32, 33, 31, 31,
    27, 28, 23, 27, 25, 25, 30, 30, 31, 30, 31, 30, 35, 34, 32, 34, 37, 37, 37, 40,
    42, 38, 37, 36, 36, 36, 39, 37, 37, 38, 37, 34, 31, 32, 32, 30, 29, 29, 29, 30,
    25, 26, 27, 28, 24, 22, 22, 26, 29, 33, 35, 36, 35, 34, 35, 36, 36, 35, 33, 30,
    34, 36, 35, 37, 34, 38, 36, 36, 35, 36, 36, 37, 38, 38, 36, 36, 37, 39, 37, 38,
    36, 37, 35, 36, 38, 36, 35, 37, 39, 38, 35, 34, 34, 34, 35, 36, 33, 35, 34, 36,
    39, 44, 44, 40, 37, 38, 39, 35, 35, 34, 34, 37, 38, 37, 36, 36, 33, 30, 31, 29,
    30, 33, 33, 31, 30, 31, 32, 33, 31, 33, 33, 32, 31, 31, 29, 29, 29, 34, 33, 33,
    31, 31, 32, 31, 31, 32, 33, 34, 33, 32, 33, 35, 35, 31, 30, 32, 32, 32, 33, 33,
    32, 31, 30, 31, 32, 31, 27, 28, 28, 29, 31, 32, 33, 30, 29, 29, 27, 27, 28, 29,
    29, 28, 28, 27, 29, 27, 27, 28, 26, 28, 27, 25, 25, 26, 27, 27, 25, 24, 23, 20,
    20, 20, 21, 23, 21, 21, 21, 22, 22, 23, 24, 22, 22, 22, 20, 23, 20, 19, 19, 19,
    20, 21, 23, 23, 23, 22, 18, 17, 16, 15, 12, 12, 12, 15, 13, 15, 12, 11, 8, 13,
    14, 15, 16, 18, 18, 17, 16, 19, 21, 21, 21, 22, 23, 22, 22, 23, 24, 24, 22, 23,
    23, 23, 22, 21, 20, 20, 20, 19, 18, 16, 14, 15, 18, 19, 17, 15, 16, 16, 19, 19,
    19, 19, 20, 20, 16, 16, 18, 19, 19, 17, 18, 17, 17, 16, 17, 17, 18, 19, 20, 20,
    22, 21, 21, 21, 20, 18, 18, 18, 19, 19, 21, 20, 20, 21, 21, 23, 23, 22, 20, 17,
    16, 17, 15, 14, 14, 14, 16, 17, 18, 17, 17, 18, 17, 18, 18, 17, 17, 18, 17, 17,
    18, 18, 19, 17, 17, 16, 15, 15, 16, 14, 14, 15, 15, 15, 14, 14, 14, 14, 15, 15,
    13, 16, 16, 14, 15, 15, 14, 13, 12, 11, 11, 12, 10, 9, 10, 10, 10, 9, 9, 10,
    11, 11, 11, 12, 11, 11, 8, 8, 9, 10, 10, 11, 10, 10, 12, 11, 11, 10, 10, 10,
    7, 8, 8, 8, 6, 5, 8, 8, 9, 10, 11, 11, 8, 9, 9, 10, 11, 11, 12, 14,
    13, 14, 14, 14, 14, 10, 10, 12, 12, 10, 11, 11, 11, 11, 8, 7, 8, 8, 9, 9,
    10, 10, 10, 11, 8, 7, 8, 7, 7, 8, 7, 7, 5, 5, 5, 5, 4, 3, 4, 5,
    4, 3, 4, 5, 5, 4, 4, 5, 6, 5, 5, 4, 4, 4, 2, 2, 4, 2, 1, 0,
    -1, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1, -2, -2, -2, -3, -3, -3, -3, -4,
    -4, -4, -6, -10, -8, -7, -6, -7, -6, -6, -9, -8, -8, -8, -9, -9, -10, -10, -10, -10,
    -10, -9, -9, -9, -9, -11, -9, -8, -10, -10, -10, -11, -11, -10, -10, -11, -11, -12, -12, -14,
    -12, -12, -10, -10, -10, -10, -10, -9, -9, -9, -8, -9, -9, -11, -9, -9, -9, -8, -10, -10,
    -11, -10, -9, -8, -7, -7, -9, -8, -7, -6, -7, -8, -8, -8, -9, -9, -10, -12, -11, -13,
    -14, -12, -13, -12, -12, -11, -12, -13, -11, -11, -13, -14, -14, -14, -14, -13, -12, -13, -12, -12,
    -12, -13, -14, -15, -15, -15, -16, -16, -17, -16, -18, -17, -16, -16, -15, -14, -14, -15, -15, -14,
    -15, -13, -12, -13, -13, -13, -11, -11, -12, -11, -11, -10, -11, -9, -9, -9, -9, -11, -11, -9,
    -11, -8, -9, -7, -10, -11, -10, -12, -13, -15, -15, -16, -16, -17, -17, -17, -17, -20, -20, -19,
    -19, -19, -19, -18, -18, -19, -18, -16, -16, -16, -16, -17, -19, -20, -21, -21, -22, -21, -20, -20,
    -20, -21, -21, -21, -20, -21, -22, -23, -23, -25, -24, -24, -25, -24, -24, -25, -24, -25, -24, -22,
    -21, -21, -23, -24, -23, -23, -23, -24, -25, -23, -22, -21, -23, -23, -24, -23, -24, -24, -25, -25,
    -23, -23, -23, -24, -24, -24, -23, -23, -24, -26, -27, -27, -27, -28, -30, -28, -29, -28, -27, -27,
    -27, -28, -29, -31, -31, -31, -31, -32, -31, -30, -30, -31, -33, -34, -35, -33, -35, -33, -33, -32,
    -30, -30, -29, -30, -29, -28, -29, -30, -29, -29, -30, -29, -29, -29, -29, -30, -31, -29, -29, -29,
    -28, -29, -30, -30, -30, -30, -31, -31, -32, -32, -33, -33, -33, -33, -32, -32, -34, -34, -35, -34,
    -34, -34, -35, -35, -34, -35, -36, -38, -36, -36, -35, -35, -36, -34, -33, -34, -35, -34, -34, -35,
    -35, -35, -36, -36, -36, -36, -35, -35, -36, -36, -37, -37, -37, -36, -37, -36, -38, -37, -36, -36,
    -36, -37, -36, -36, -36, -35, -35, -34, -35, -36, -36, -36, -36, -34, -35, -33, -35, -35, -34, -34,
    -34, -35, -35, -35, -35, -35, -36, -35, -35, -34, -34, -35, -37, -38, -38, -38, -38, -37, -37, -38,
    -38, -37, -38, -38, -39, -40, -39, -36, -38, -37, -39, -39, -39, -38, -39,
    };
    return t;
}
const char* g_large_s = "0.9999999999";
const char* g_large_a = "1.0000314775792421150615325693061";
const char* g_large_b = "-0.00000051483940138413674623044640769440";
const std::uint64_t g_large_checksum = 0x02345141abf110b4ULL;

// g_small: 101 entries, slice width 10000, range max 1009999
const std::vector<int>& g_small_exponents() {
    static const std::vector<int> t = {
    82, 16, -14, 4, -31, -10, -31, -32, -1, -44, -17, -38, -8, 7, -35, -41, -38, -3, 6, -14,
    -27, -12, -5, -51, -40, 17, -7, -17, -16, -14, 13, -7, -5, -1, -26, -29, -27, -31, -9, 8,
    16, 4, 9, 0, 20, 11, 7, -15, -23, -17, -10, -2, 2, -5, 8, 7, 9, 3, -12, -11,
    4, 5, -3, 9, -1, 7, 24, 25, 33, 20, 15, 11, 9, 3, 9, 15, 3, 3, 1, 4,
    5, -9, -1, -12, -4, 14, 16, 17, 28, 18, 12, 21, 24, 10, 14, 16, 15, 24, 26, 36,
    30,
    };
    return t;
}
const char* g_small_s = "0.999";
const char* g_small_a = "0.3238679016803340";
const char* g_small_b = "0.04042167153029803";
const std::uint64_t g_small_checksum = 0xd2d0e00d7bbe6762ULL;

// pi_inverse: 135 entries, slice width 1000000000000000, range max 134999999999999999
const std::vector<int>& pi_inverse_exponents() {
    static const std::vector<int> t = {
    3122, 3186, 3222, 3243, 3251, 3270, 3272, 3282, 3289, 3291, 3289, 3297, 3312, 3305, 3300, 3313, 3308, 3311, 3321, 3318,
    3323, 3322, 3326, 3322, 3319, 3322, 3328, 3328, 3327, 3335, 3334, 3336, 3336, 3337, 3335, 3335, 3331, 3334, 3337, 3334,
    3341, 3343, 3345, 3346, 3343, 3340, 3341, 3342, 3348, 3348, 3347, 3349, 3349, 3345, 3349, 3350, 3348, 3352, 3351, 3346,
    3344, 3346, 3344, 3348, 3348, 3349, 3354, 3355, 3357, 3355, 3354, 3355, 3358, 3359, 3358, 3358, 3358, 3357, 3357, 3358,
    3356, 3355, 3357, 3358, 3359, 3358, 3355, 3355, 3360, 3357, 3354, 3358, 3358, 3362, 3361, 3360, 3360, 3361, 3360, 3360,
    3362, 3361, 3362, 3363, 3363, 3362, 3364, 3363, 3363, 3361, 3360, 3361, 3364, 3366, 3366, 3366, 3366, 3368, 3369, 3369,
    3368, 3366, 3367, 3368, 3367, 3368, 3368, 3368, 3368, 3366, 3366, 3365, 3365, 3364, 3365,
    };
    return t;
}
const char* pi_inverse_s = "0.999999";
const char* pi_inverse_a = "0.882819461483173314372633";
const char* pi_inverse_b = "0.000855943969749036445417381";
const std::uint64_t pi_inverse_checksum = 0xbfe097e74d3e5039ULL;

const char* f_pola[9] = {
    "0.1803178829775386802559072260225588343254e-12",
    "-0.3206852936427839673078154416271278702381e-10",
    "0.2521168696363102117361245200766645862014e-8",
    "-0.1148245660104216214093938301036666192296e-6",
    "0.3329760033724798728321163791428487967963e-5",
    "-0.6343395542494949120689514623217102223176e-4",
    "0.7851801857533638277814251770195187519581e-3",
    "-0.5912431390595954878523745751806703967872e-2",
    "0.2187329700777127284427407021768653056673e-1",
};
const char* f_polb[9] = {
    "0.8949926057969637729777538473173261408730e-12",
    "-0.1611795950806416304161491053953385128968e-9",
    "0.1287542319981049792998526211011490785070e-7",
    "-0.5988056104228871471776180438025688273194e-6",
    "0.1786915791025107343702497983252030617773e-4",
    "-0.3548565854556946509095877029495597659212e-3",
    "0.4690427023808579602996344427037051784331e-2",
    "-0.3980636249963806490254767914782205838276e-1",
    "0.1969974737812788247127674632264178712585",
};

} // namespace primew::detail
