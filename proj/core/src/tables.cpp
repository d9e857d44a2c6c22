#include "waring/tables.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace waring::tables {

namespace {

constexpr std::array<AppendixRow, 286> kAppendix{{
    {5, 3, 0.000000, 0.000000, 0.125120, 2.333618},
    {5, 4, 0.000000, 0.000000, 0.136680, 1.774482},
    {5, 5, -0.999900, 1.999800, 0.000009, 1.274485},
    {5, 6, -0.999900, 1.999800, 0.000009, 0.774495},
    {5, 7, -0.999900, 1.999800, 0.000009, 0.274512},
    {5, 8, -0.995600, 1.021900, 0.095118, 0.000000},
    {6, 3, 0.000000, 0.000000, 0.100009, 3.272749},
    {6, 4, 0.000000, 0.000000, 0.107879, 2.635686},
    {6, 5, 0.000000, 0.000000, 0.115887, 2.088927},
    {6, 6, -0.999900, 1.999800, 0.000007, 1.588930},
    {6, 7, -0.999900, 1.999800, 0.000007, 1.088938},
    {6, 8, -0.999900, 1.999800, 0.000008, 0.588953},
    {6, 9, -0.999900, 1.999800, 0.000008, 0.088973},
    {6, 10, -0.153400, 0.179400, 0.139009, 0.000000},
    {7, 3, 0.000000, 0.000000, 0.083334, 4.230771},
    {7, 4, 0.000000, 0.000000, 0.089044, 3.538957},
    {7, 5, 0.000000, 0.000000, 0.094897, 2.925605},
    {7, 6, 0.000000, 0.000000, 0.100775, 2.390162},
    {7, 7, -0.999900, 1.999800, 0.000006, 1.890164},
    {7, 8, -0.999900, 1.999800, 0.000006, 1.390172},
    {7, 9, -0.999900, 1.999800, 0.000007, 0.890184},
    {7, 10, -0.999900, 1.999800, 0.000007, 0.390202},
    {7, 11, -0.998600, 1.521400, 0.033196, 0.000000},
    {8, 3, 0.000000, 0.000000, 0.071429, 5.200000},
    {8, 4, 0.000000, 0.000000, 0.075758, 4.467607},
    {8, 5, 0.000000, 0.000000, 0.080209, 3.804151},
    {8, 6, 0.000000, 0.000000, 0.084719, 3.209961},
    {8, 7, 0.000000, 0.000000, 0.089214, 2.684204},
    {8, 8, -0.999900, 1.999800, 0.000005, 2.184207},
    {8, 9, -0.999900, 1.999800, 0.000006, 1.684214},
    {8, 10, -0.999900, 1.999800, 0.000006, 1.184225},
    {8, 11, -0.999900, 1.999800, 0.000006, 0.684241},
    {8, 12, -0.999900, 1.999800, 0.000006, 0.184262},
    {8, 13, -0.519400, 0.522700, 0.080782, 0.000000},
    {9, 3, 0.000000, 0.000000, 0.062500, 6.176471},
    {9, 4, 0.000000, 0.000000, 0.065891, 5.412834},
    {9, 5, 0.000000, 0.000000, 0.069383, 4.710455},
    {9, 6, 0.000000, 0.000000, 0.072937, 4.070034},
    {9, 7, 0.000000, 0.000000, 0.076512, 3.491500},
    {9, 8, 0.000000, 0.000000, 0.080057, 2.973928},
    {9, 9, -0.999900, 1.999800, 0.000005, 2.473931},
    {9, 10, -0.999900, 1.999800, 0.000005, 1.973937},
    {9, 11, -0.999900, 1.999800, 0.000005, 1.473947},
    {9, 12, -0.999900, 1.999800, 0.000005, 0.973962},
    {9, 13, -0.999900, 1.999800, 0.000005, 0.473980},
    {9, 14, -0.992200, 1.879900, 0.006103, 0.000000},
    {10, 3, 0.000000, 0.000000, 0.055556, 7.157895},
    {10, 4, 0.000000, 0.000000, 0.058282, 6.369489},
    {10, 5, 0.000000, 0.000000, 0.061089, 5.636078},
    {10, 6, 0.000000, 0.000000, 0.063955, 4.958505},
    {10, 7, 0.000000, 0.000000, 0.066852, 4.337081},
    {10, 8, 0.000000, 0.000000, 0.069750, 3.771515},
    {10, 9, 0.000000, 0.000000, 0.072614, 3.260873},
    {10, 10, -0.999900, 1.999800, 0.000004, 2.760875},
    {10, 11, -0.999900, 1.999800, 0.000004, 2.260881},
    {10, 12, -0.999900, 1.999800, 0.000004, 1.760891},
    {10, 13, -0.999900, 1.999800, 0.000005, 1.260904},
    {10, 14, -0.999900, 1.999800, 0.000005, 0.760921},
    {10, 15, -0.999900, 1.999800, 0.000005, 0.260942},
    {10, 16, -0.944400, 0.977100, 0.049090, 0.000000},
    {11, 3, 0.000000, 0.000000, 0.050000, 8.142857},
    {11, 4, 0.000000, 0.000000, 0.052239, 7.334347},
    {11, 5, 0.000000, 0.000000, 0.054542, 6.575661},
    {11, 6, 0.000000, 0.000000, 0.056897, 5.867674},
    {11, 7, 0.000000, 0.000000, 0.059285, 5.210882},
    {11, 8, 0.000000, 0.000000, 0.061687, 4.605349},
    {11, 9, 0.000000, 0.000000, 0.064081, 4.050667},
    {11, 10, 0.000000, 0.000000, 0.066442, 3.545934},
    {11, 11, -0.999900, 1.999800, 0.000004, 3.045936},
    {11, 12, -0.999900, 1.999800, 0.000004, 2.545942},
    {11, 13, -0.999900, 1.999800, 0.000004, 2.045951},
    {11, 14, -0.999900, 1.999800, 0.000004, 1.545963},
    {11, 15, -0.999900, 1.999800, 0.000004, 1.045979},
    {11, 16, -0.999900, 1.999800, 0.000004, 0.545998},
    {11, 17, -0.999900, 1.999800, 0.000004, 0.046021},
    {11, 18, 0.155500, 0.070700, 0.082888, 0.000000},
    {12, 3, 0.000000, 0.000000, 0.045455, 9.130435},
    {12, 4, 0.000000, 0.000000, 0.047325, 8.305287},
    {12, 5, 0.000000, 0.000000, 0.049248, 7.525642},
    {12, 6, 0.000000, 0.000000, 0.051215, 6.792350},
    {12, 7, 0.000000, 0.000000, 0.053213, 6.105989},
    {12, 8, 0.000000, 0.000000, 0.055230, 5.466819},
    {12, 9, 0.000000, 0.000000, 0.057251, 4.874750},
    {12, 10, 0.000000, 0.000000, 0.059260, 4.329316},
    {12, 11, -0.999900, 1.999800, 0.000004, 3.829316},
    {12, 12, -0.999900, 1.999800, 0.000004, 3.329318},
    {12, 13, -0.999900, 1.999800, 0.000004, 2.829324},
    {12, 14, -0.999900, 1.999800, 0.000004, 2.329332},
    {12, 15, -0.999900, 1.999800, 0.000004, 1.829344},
    {12, 16, -0.999900, 1.999800, 0.000004, 1.329358},
    {12, 17, -0.999900, 1.999800, 0.000004, 0.829376},
    {12, 18, -0.999900, 1.999800, 0.000004, 0.329397},
    {12, 19, -0.970100, 1.269300, 0.029236, 0.000000},
    {13, 3, 0.000000, 0.000000, 0.041667, 10.120000},
    {13, 4, 0.000000, 0.000000, 0.043253, 9.280862},
    {13, 5, 0.000000, 0.000000, 0.044882, 8.483567},
    {13, 6, 0.000000, 0.000000, 0.046547, 7.728921},
    {13, 7, 0.000000, 0.000000, 0.048242, 7.017526},
    {13, 8, 0.000000, 0.000000, 0.049956, 6.349748},
    {13, 9, 0.000000, 0.000000, 0.051680, 5.725686},
    {13, 10, 0.000000, 0.000000, 0.053403, 5.145155},
    {13, 11, 0.000000, 0.000000, 0.055111, 4.607666},
    {13, 12, -0.999900, 1.999800, 0.000003, 4.107667},
    {13, 13, -0.999900, 1.999800, 0.000003, 3.607669},
    {13, 14, -0.999900, 1.999800, 0.000003, 3.107675},
    {13, 15, -0.999900, 1.999800, 0.000003, 2.607683},
    {13, 16, -0.999900, 1.999800, 0.000003, 2.107693},
    {13, 17, -0.999900, 1.999800, 0.000004, 1.607707},
    {13, 18, -0.999900, 1.999800, 0.000004, 1.107724},
    {13, 19, -0.999900, 1.999800, 0.000004, 0.607743},
    {13, 20, -0.999900, 1.999800, 0.000004, 0.107766},
    {13, 21, -0.213800, 0.247100, 0.060848, 0.000000},
    {14, 3, 0.000000, 0.000000, 0.038462, 11.111111},
    {14, 4, 0.000000, 0.000000, 0.039823, 10.260047},
    {14, 5, 0.000000, 0.000000, 0.041220, 9.447694},
    {14, 6, 0.000000, 0.000000, 0.042648, 8.674803},
    {14, 7, 0.000000, 0.000000, 0.044102, 7.941973},
    {14, 8, 0.000000, 0.000000, 0.045575, 7.249620},
    {14, 9, 0.000000, 0.000000, 0.047060, 6.597958},
    {14, 10, 0.000000, 0.000000, 0.048549, 5.986978},
    {14, 11, 0.000000, 0.000000, 0.050033, 5.416436},
    {14, 12, 0.000000, 0.000000, 0.051503, 4.885840},
    {14, 13, -0.999900, 1.999800, 0.000003, 4.385841},
    {14, 14, -0.999900, 1.999800, 0.000003, 3.885844},
    {14, 15, -0.999900, 1.999800, 0.000003, 3.385849},
    {14, 16, -0.999900, 1.999800, 0.000003, 2.885856},
    {14, 17, -0.999900, 1.999800, 0.000003, 2.385867},
    {14, 18, -0.999900, 1.999800, 0.000003, 1.885880},
    {14, 19, -0.999900, 1.999800, 0.000003, 1.385895},
    {14, 20, -0.999900, 1.999800, 0.000003, 0.885914},
    {14, 21, -0.999900, 1.999800, 0.000003, 0.385935},
    {14, 22, -0.966500, 1.498700, 0.016757, 0.000000},
    {15, 3, 0.000000, 0.000000, 0.035714, 12.103448},
    {15, 4, 0.000000, 0.000000, 0.036896, 11.242099},
    {15, 5, 0.000000, 0.000000, 0.038107, 10.416751},
    {15, 6, 0.000000, 0.000000, 0.039344, 9.628104},
    {15, 7, 0.000000, 0.000000, 0.040604, 8.876733},
    {15, 8, 0.000000, 0.000000, 0.041882, 8.163076},
    {15, 9, 0.000000, 0.000000, 0.043172, 7.487410},
    {15, 10, 0.000000, 0.000000, 0.044469, 6.849842},
    {15, 11, 0.000000, 0.000000, 0.045767, 6.250290},
    {15, 12, 0.000000, 0.000000, 0.047058, 5.688473},
    {15, 13, 0.000000, 0.000000, 0.048336, 5.163911},
    {15, 14, -0.999900, 1.999800, 0.000003, 4.663912},
    {15, 15, -0.999900, 1.999800, 0.000003, 4.163915},
    {15, 16, -0.999900, 1.999800, 0.000003, 3.663920},
    {15, 17, -0.999900, 1.999800, 0.000003, 3.163927},
    {15, 18, -0.999900, 1.999800, 0.000003, 2.663937},
    {15, 19, -0.999900, 1.999800, 0.000003, 2.163950},
    {15, 20, -0.999900, 1.999800, 0.000003, 1.663964},
    {15, 21, -0.999900, 1.999800, 0.000003, 1.163982},
    {15, 22, -0.999900, 1.999800, 0.000003, 0.664002},
    {15, 23, -0.999900, 1.999800, 0.000003, 0.164025},
    {15, 24, -0.445100, 0.455900, 0.045292, 0.000000},
    {16, 3, 0.000000, 0.000000, 0.033333, 13.096774},
    {16, 4, 0.000000, 0.000000, 0.034368, 12.226463},
    {16, 5, 0.000000, 0.000000, 0.035428, 11.389793},
    {16, 6, 0.000000, 0.000000, 0.036510, 10.587406},
    {16, 7, 0.000000, 0.000000, 0.037612, 9.819853},
    {16, 8, 0.000000, 0.000000, 0.038730, 9.087570},
    {16, 9, 0.000000, 0.000000, 0.039860, 8.390873},
    {16, 10, 0.000000, 0.000000, 0.040999, 7.729937},
    {16, 11, 0.000000, 0.000000, 0.042141, 7.104789},
    {16, 12, 0.000000, 0.000000, 0.043281, 6.515297},
    {16, 13, 0.000000, 0.000000, 0.044414, 5.961164},
    {16, 14, 0.000000, 0.000000, 0.045535, 5.441925},
    {16, 15, -0.999900, 1.999800, 0.000003, 4.941926},
    {16, 16, -0.999900, 1.999800, 0.000003, 4.441929},
    {16, 17, -0.999900, 1.999800, 0.000003, 3.941934},
    {16, 18, -0.999900, 1.999800, 0.000003, 3.441941},
    {16, 19, -0.999900, 1.999800, 0.000003, 2.941951},
    {16, 20, -0.999900, 1.999800, 0.000003, 2.441962},
    {16, 21, -0.999900, 1.999800, 0.000003, 1.941977},
    {16, 22, -0.999900, 1.999800, 0.000003, 1.441993},
    {16, 23, -0.999900, 1.999800, 0.000003, 0.942012},
    {16, 24, -0.999900, 1.999800, 0.000003, 0.442033},
    {16, 25, -0.984500, 1.744600, 0.007452, 0.000000},
    {17, 3, 0.000000, 0.000000, 0.031250, 14.090909},
    {17, 4, 0.000000, 0.000000, 0.032164, 13.212722},
    {17, 5, 0.000000, 0.000000, 0.033099, 12.366098},
    {17, 6, 0.000000, 0.000000, 0.034053, 11.551631},
    {17, 7, 0.000000, 0.000000, 0.035024, 10.769837},
    {17, 8, 0.000000, 0.000000, 0.036010, 10.021148},
    {17, 9, 0.000000, 0.000000, 0.037008, 9.305892},
    {17, 10, 0.000000, 0.000000, 0.038014, 8.624289},
    {17, 11, 0.000000, 0.000000, 0.039025, 7.976438},
    {17, 12, 0.000000, 0.000000, 0.040038, 7.362309},
    {17, 13, 0.000000, 0.000000, 0.041047, 6.781738},
    {17, 14, 0.000000, 0.000000, 0.042049, 6.234421},
    {17, 15, 0.000000, 0.000000, 0.043040, 5.719911},
    {17, 16, -0.999900, 1.999800, 0.000003, 5.219912},
    {17, 17, -0.999900, 1.999800, 0.000003, 4.719915},
    {17, 18, -0.999900, 1.999800, 0.000003, 4.219920},
    {17, 19, -0.999900, 1.999800, 0.000003, 3.719927},
    {17, 20, -0.999900, 1.999800, 0.000003, 3.219936},
    {17, 21, -0.999900, 1.999800, 0.000003, 2.719947},
    {17, 22, -0.999900, 1.999800, 0.000003, 2.219961},
    {17, 23, -0.999900, 1.999800, 0.000003, 1.719976},
    {17, 24, -0.999900, 1.999800, 0.000003, 1.219994},
    {17, 25, -0.999900, 1.999800, 0.000003, 0.720015},
    {17, 26, -0.999900, 1.999800, 0.000003, 0.220037},
    {17, 27, -0.743900, 0.747300, 0.033369, 0.000000},
    {18, 3, 0.000000, 0.000000, 0.029412, 15.085714},
    {18, 4, 0.000000, 0.000000, 0.030225, 14.200551},
    {18, 5, 0.000000, 0.000000, 0.031055, 13.345110},
    {18, 6, 0.000000, 0.000000, 0.031903, 12.519940},
    {18, 7, 0.000000, 0.000000, 0.032765, 11.725526},
    {18, 8, 0.000000, 0.000000, 0.033641, 10.962283},
    {18, 9, 0.000000, 0.000000, 0.034528, 10.230544},
    {18, 10, 0.000000, 0.000000, 0.035423, 9.530554},
    {18, 11, 0.000000, 0.000000, 0.036323, 8.862459},
    {18, 12, 0.000000, 0.000000, 0.037227, 8.226302},
    {18, 13, 0.000000, 0.000000, 0.038130, 7.622011},
    {18, 14, 0.000000, 0.000000, 0.039029, 7.049401},
    {18, 15, 0.000000, 0.000000, 0.039921, 6.508168},
    {18, 16, 0.000000, 0.000000, 0.040803, 5.997887},
    {18, 17, -0.999900, 1.999800, 0.000002, 5.497888},
    {18, 18, -0.999900, 1.999800, 0.000002, 4.997891},
    {18, 19, -0.999900, 1.999800, 0.000002, 4.497896},
    {18, 20, -0.999900, 1.999800, 0.000002, 3.997903},
    {18, 21, -0.999900, 1.999800, 0.000003, 3.497911},
    {18, 22, -0.999900, 1.999800, 0.000003, 2.997922},
    {18, 23, -0.999900, 1.999800, 0.000003, 2.497935},
    {18, 24, -0.999900, 1.999800, 0.000003, 1.997950},
    {18, 25, -0.999900, 1.999800, 0.000003, 1.497967},
    {18, 26, -0.999900, 1.999800, 0.000003, 0.997986},
    {18, 27, -0.999900, 1.999800, 0.000003, 0.498008},
    {18, 28, -0.998100, 1.989800, 0.000228, 0.000000},
    {19, 3, 0.000000, 0.000000, 0.027778, 16.081081},
    {19, 4, 0.000000, 0.000000, 0.028505, 15.189695},
    {19, 5, 0.000000, 0.000000, 0.029249, 14.326392},
    {19, 6, 0.000000, 0.000000, 0.030006, 13.491676},
    {19, 7, 0.000000, 0.000000, 0.030777, 12.686002},
    {19, 8, 0.000000, 0.000000, 0.031560, 11.909768},
    {19, 9, 0.000000, 0.000000, 0.032352, 11.163303},
    {19, 10, 0.000000, 0.000000, 0.033153, 10.446864},
    {19, 11, 0.000000, 0.000000, 0.033959, 9.760628},
    {19, 12, 0.000000, 0.000000, 0.034770, 9.104685},
    {19, 13, 0.000000, 0.000000, 0.035581, 8.479035},
    {19, 14, 0.000000, 0.000000, 0.036391, 7.883577},
    {19, 15, 0.000000, 0.000000, 0.037197, 7.318113},
    {19, 16, 0.000000, 0.000000, 0.037997, 6.782343},
    {19, 17, 0.000000, 0.000000, 0.038786, 6.275864},
    {19, 18, -0.999900, 1.999800, 0.000002, 5.775865},
    {19, 19, -0.999900, 1.999800, 0.000002, 5.275868},
    {19, 20, -0.999900, 1.999800, 0.000002, 4.775873},
    {19, 21, -0.999900, 1.999800, 0.000002, 4.275880},
    {19, 22, -0.999900, 1.999800, 0.000002, 3.775888},
    {19, 23, -0.999900, 1.999800, 0.000002, 3.275899},
    {19, 24, -0.999900, 1.999800, 0.000002, 2.775911},
    {19, 25, -0.999900, 1.999800, 0.000002, 2.275925},
    {19, 26, -0.999900, 1.999800, 0.000002, 1.775942},
    {19, 27, -0.999900, 1.999800, 0.000003, 1.275960},
    {19, 28, -0.999900, 1.999800, 0.000003, 0.775981},
    {19, 29, -0.999900, 1.999800, 0.000003, 0.276004},
    {19, 30, -0.888700, 1.023500, 0.023926, 0.000000},
    {20, 3, 0.000000, 0.000000, 0.026316, 17.076923},
    {20, 4, 0.000000, 0.000000, 0.026971, 16.179953},
    {20, 5, 0.000000, 0.000000, 0.027640, 15.309594},
    {20, 6, 0.000000, 0.000000, 0.028321, 14.466313},
    {20, 7, 0.000000, 0.000000, 0.029014, 13.650536},
    {20, 8, 0.000000, 0.000000, 0.029717, 12.862638},
    {20, 9, 0.000000, 0.000000, 0.030430, 12.102943},
    {20, 10, 0.000000, 0.000000, 0.031150, 11.371713},
    {20, 11, 0.000000, 0.000000, 0.031876, 10.669142},
    {20, 12, 0.000000, 0.000000, 0.032606, 9.995354},
    {20, 13, 0.000000, 0.000000, 0.033338, 9.350396},
    {20, 14, 0.000000, 0.000000, 0.034071, 8.734233},
    {20, 15, 0.000000, 0.000000, 0.034802, 8.146746},
    {20, 16, 0.000000, 0.000000, 0.035528, 7.587730},
    {20, 17, 0.000000, 0.000000, 0.036248, 7.056892},
    {20, 18, 0.000000, 0.000000, 0.036959, 6.553850},
    {20, 19, -0.999900, 1.999800, 0.000002, 6.053852},
    {20, 20, -0.999900, 1.999800, 0.000002, 5.553855},
    {20, 21, -0.999900, 1.999800, 0.000002, 5.053860},
    {20, 22, -0.999900, 1.999800, 0.000002, 4.553866},
    {20, 23, -0.999900, 1.999800, 0.000002, 4.053874},
    {20, 24, -0.999900, 1.999800, 0.000002, 3.553884},
    {20, 25, -0.999900, 1.999800, 0.000002, 3.053896},
    {20, 26, -0.999900, 1.999800, 0.000002, 2.553910},
    {20, 27, -0.999900, 1.999800, 0.000002, 2.053926},
    {20, 28, -0.999900, 1.999800, 0.000002, 1.553943},
    {20, 29, -0.999900, 1.999800, 0.000002, 1.053963},
    {20, 30, -0.999900, 1.999800, 0.000002, 0.553985},
    {20, 31, -0.999900, 1.999800, 0.000002, 0.054008},
    {20, 32, -0.102400, 0.114000, 0.044720, 0.000000},
}};

constexpr std::array<SummaryRow, 16> kList31{{
    {5, 8, 0.000042},
    {6, 10, 0.000014},
    {7, 12, 0.000058},
    {8, 14, 0.000000},
    {9, 16, 0.000017},
    {10, 18, 0.000000},
    {11, 20, 0.000016},
    {12, 22, 0.000000},
    {13, 24, 0.000014},
    {14, 25, 0.000016},
    {15, 28, 0.000009},
    {16, 28, 0.000002},
    {17, 32, 0.000019},
    {18, 33, 0.000012},
    {19, 36, 0.000008},
    {20, 36, 0.000005},
}};

constexpr std::array<SummaryRow, 16> kList42{{
    {5, 8, 0.000000},
    {6, 10, 0.000000},
    {7, 11, 0.000000},
    {8, 13, 0.000000},
    {9, 14, 0.000000},
    {10, 16, 0.000000},
    {11, 18, 0.000000},
    {12, 19, 0.000000},
    {13, 21, 0.000000},
    {14, 22, 0.000000},
    {15, 24, 0.000000},
    {16, 25, 0.000000},
    {17, 27, 0.000000},
    {18, 28, 0.000000},
    {19, 30, 0.000000},
    {20, 32, 0.000000},
}};

constexpr std::array<KVRow, 16> kList11{{
    {5, 17},
    {6, 21},
    {7, 25},
    {8, 32},
    {9, 33},
    {10, 37},
    {11, 41},
    {12, 45},
    {13, 49},
    {14, 51},
    {15, 57},
    {16, 64},
    {17, 66},
    {18, 68},
    {19, 75},
    {20, 75},
}};

constexpr std::array<KVRow, 16> kList41{{
    {5, 17},
    {6, 21},
    {7, 23},
    {8, 32},
    {9, 29},
    {10, 33},
    {11, 37},
    {12, 39},
    {13, 43},
    {14, 45},
    {15, 49},
    {16, 64},
    {17, 55},
    {18, 57},
    {19, 61},
    {20, 65},
}};

constexpr std::array<KVRow, 16> kList32{{
    {5, 1},
    {6, 1},
    {7, 1},
    {8, 4},
    {9, 1},
    {10, 1},
    {11, 1},
    {12, 1},
    {13, 1},
    {14, 1},
    {15, 1},
    {16, 8},
    {17, 2},
    {18, 2},
    {19, 3},
    {20, 3},
}};

constexpr std::array<KVRow, 16> kList43{{
    {5, 1},
    {6, 1},
    {7, 1},
    {8, 6},
    {9, 1},
    {10, 1},
    {11, 1},
    {12, 1},
    {13, 1},
    {14, 1},
    {15, 1},
    {16, 14},
    {17, 1},
    {18, 1},
    {19, 1},
    {20, 1},
}};


void require_k(int k) {
    if (k < kMin || k > kMax) throw UnknownK("no table data for k=" + std::to_string(k));
}

}  // namespace

std::span<const AppendixRow> appendix() { return kAppendix; }

std::span<const AppendixRow> appendix_block(int k) {
    require_k(k);
    size_t lo = 0;
    while (lo < kAppendix.size() && kAppendix[lo].k != k) ++lo;
    size_t hi = lo;
    while (hi < kAppendix.size() && kAppendix[hi].k == k) ++hi;
    return {kAppendix.data() + lo, hi - lo};
}

std::span<const SummaryRow> list_3_1() { return kList31; }
std::span<const SummaryRow> list_4_2() { return kList42; }
std::span<const KVRow> list_1_1() { return kList11; }
std::span<const KVRow> list_4_1() { return kList41; }
std::span<const KVRow> list_3_2() { return kList32; }
std::span<const KVRow> list_4_3() { return kList43; }

const SummaryRow& list_3_1_row(int k) { require_k(k); return kList31[static_cast<size_t>(k - kMin)]; }
const SummaryRow& list_4_2_row(int k) { require_k(k); return kList42[static_cast<size_t>(k - kMin)]; }
int list_1_1_bound(int k) { require_k(k); return kList11[static_cast<size_t>(k - kMin)].value; }
int list_4_1_bound(int k) { require_k(k); return kList41[static_cast<size_t>(k - kMin)].value; }
int list_3_2_v(int k) { require_k(k); return kList32[static_cast<size_t>(k - kMin)].value; }
int list_4_3_v(int k) { require_k(k); return kList43[static_cast<size_t>(k - kMin)].value; }

namespace {

void fnv(std::uint64_t& h, const char* buf) {
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
}

}  // namespace

std::uint64_t checksum() {
    std::uint64_t h = 14695981039346656037ull;
    char buf[128];
    for (const AppendixRow& r : kAppendix) {
        std::snprintf(buf, sizeof buf, "A%d,%d,%.6f,%.6f,%.6f,%.6f;", r.k, r.s, r.alpha, r.tau,
                      r.theta, r.delta);
        fnv(h, buf);
    }
    auto sum = [&](char tag, std::span<const SummaryRow> t) {
        for (const SummaryRow& r : t) {
            std::snprintf(buf, sizeof buf, "%c%d,%d,%.6f;", tag, r.k, r.s, r.delta);
            fnv(h, buf);
        }
    };
    auto vals = [&](char tag, std::span<const KVRow> t) {
        for (const KVRow& r : t) {
            std::snprintf(buf, sizeof buf, "%c%d,%d;", tag, r.k, r.value);
            fnv(h, buf);
        }
    };
    sum('S', kList31);
    sum('T', kList42);
    vals('F', kList11);
    vals('G', kList41);
    vals('v', kList32);
    vals('w', kList43);
    return h;
}

}  // namespace waring::tables
