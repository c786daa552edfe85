// Generated by tools/gen_rs_coefficients.py; do not edit.
// Taylor coefficients in z = 2p - 1 of the Riemann-Siegel
// correction functions C0..C4.

#include "riemann_siegel_coefficients.hpp"

namespace rzs::detail {

constexpr double kC0[] = {
    3.82683432365089771728e-1,
    0.0,
    4.3724046807752044936e-1,
    0.0,
    1.32376575480343523324e-1,
    0.0,
    -1.3605026047674188655e-2,
    0.0,
    -1.35676219701035808879e-2,
    0.0,
    -1.62372532314446528285e-3,
    0.0,
    2.97053537333796907831e-4,
    0.0,
    7.94330087952146958802e-5,
    0.0,
    4.65561246145045050371e-7,
    0.0,
    -1.43272516309551057541e-6,
    0.0,
    -1.0354847112312946075e-7,
    0.0,
    1.23579270838617380561e-8,
    0.0,
    1.78810838579549049857e-9,
    0.0,
    -3.39141438992703590694e-11,
    0.0,
    -1.63266339025659051014e-11,
    0.0,
    -3.78510931854122038285e-13,
    0.0,
    9.32742325920172484566e-14,
    0.0,
    5.22184301597813685531e-15,
    0.0,
    -3.35067307274426378952e-16,
    0.0,
    -3.41242652281172649408e-17,
    0.0,
    5.75120334143239916034e-19,
    0.0,
    1.48953013632115054548e-19,
    0.0,
    1.25653727170214168533e-21,
};

constexpr double kC1[] = {
    0.0,
    -2.682510262837534703e-2,
    0.0,
    1.37847734263518530499e-2,
    0.0,
    3.84912504822350822287e-2,
    0.0,
    9.87106629906207647201e-3,
    0.0,
    -3.31075976085840433291e-3,
    0.0,
    -1.4647808577954150825e-3,
    0.0,
    -1.32079406248769636752e-5,
    0.0,
    5.92274870184714132322e-5,
    0.0,
    5.98024258537344858771e-6,
    0.0,
    -9.64132245616982635267e-7,
    0.0,
    -1.833473372271441176e-7,
    0.0,
    4.46708756271783359956e-9,
    0.0,
    2.70963508217727432169e-9,
    0.0,
    7.78528865431585104629e-11,
    0.0,
    -2.34376260108936885325e-11,
    0.0,
    -1.58301727899875216422e-12,
    0.0,
    1.21199415737237912466e-13,
    0.0,
    1.45837811611083070176e-14,
    0.0,
    -2.87863052581319175046e-16,
    0.0,
    -8.66286290212372412253e-17,
    0.0,
    -8.43072272713704127156e-19,
    0.0,
    3.63080722309734620017e-19,
    0.0,
    1.16266982128382967194e-20,
    0.0,
    -1.09754867115275318159e-21,
};

constexpr double kC2[] = {
    5.18854283029316849378e-3,
    0.0,
    3.09465838806347460335e-4,
    0.0,
    -1.13359410782293733822e-2,
    0.0,
    2.23304574195814477206e-3,
    0.0,
    5.19663740886233020512e-3,
    0.0,
    3.43991440762083366947e-4,
    0.0,
    -5.91064842747058282173e-4,
    0.0,
    -1.02299725479358574544e-4,
    0.0,
    2.08883922169927554081e-5,
    0.0,
    5.92766549309653595789e-6,
    0.0,
    -1.64238383624362759777e-7,
    0.0,
    -1.51611997009406828617e-7,
    0.0,
    -5.90780369820666796292e-9,
    0.0,
    2.09115148594781889777e-9,
    0.0,
    1.78156495832923510538e-10,
    0.0,
    -1.61640724553538307529e-11,
    0.0,
    -2.38069624966676157072e-12,
    0.0,
    5.39826529554259491818e-14,
    0.0,
    1.97501421969695152733e-14,
    0.0,
    2.3332868732882634831e-16,
    0.0,
    -1.11875176100480802082e-16,
    0.0,
    -4.1640094888837671885e-18,
    0.0,
    4.4460811092918830289e-19,
    0.0,
    2.85461147836371445457e-20,
    0.0,
    -1.1913231430037894305e-21,
};

constexpr double kC3[] = {
    0.0,
    -1.33971609071945690427e-3,
    0.0,
    3.74421513637939370466e-3,
    0.0,
    -1.33031789193214681203e-3,
    0.0,
    -2.26546607654717871148e-3,
    0.0,
    9.54849999850673041511e-4,
    0.0,
    6.01003845896360391208e-4,
    0.0,
    -1.01288582867766219533e-4,
    0.0,
    -6.86573344929982564246e-5,
    0.0,
    5.98536679153859815931e-7,
    0.0,
    3.33165985123994712904e-6,
    0.0,
    2.19192891024350810572e-7,
    0.0,
    -7.89088424568149441056e-8,
    0.0,
    -9.41468508129526215165e-9,
    0.0,
    9.57011621088348030188e-10,
    0.0,
    1.87631374534706627968e-10,
    0.0,
    -4.43783767932339932746e-12,
    0.0,
    -2.24267385056173532484e-12,
    0.0,
    -3.62768686573524368941e-14,
    0.0,
    1.76398095508215816078e-14,
    0.0,
    7.96076524678677775729e-16,
    0.0,
    -9.41965149058969076391e-17,
    0.0,
    -7.13310385456965782456e-18,
    0.0,
    3.28991058455462432118e-19,
    0.0,
    4.18073037489845929136e-20,
};

constexpr double kC4[] = {
    4.64833893617633818536e-4,
    0.0,
    -1.00566073653404707598e-3,
    0.0,
    2.40448565737257930224e-4,
    0.0,
    1.02830861497023218783e-3,
    0.0,
    -7.6578610717556441866e-4,
    0.0,
    -2.03652868030848176215e-4,
    0.0,
    2.32122904910687278951e-4,
    0.0,
    3.26021442438651976077e-5,
    0.0,
    -2.55790625179495251402e-5,
    0.0,
    -4.10746443891574475398e-6,
    0.0,
    1.17811136403712938813e-6,
    0.0,
    2.44565614224845785423e-7,
    0.0,
    -2.39158247673443224303e-8,
    0.0,
    -7.50521420703575528854e-9,
    0.0,
    1.33122794162584281929e-10,
    0.0,
    1.34406267542256197187e-10,
    0.0,
    3.51377004243048592869e-12,
    0.0,
    -1.51915445337039193357e-12,
    0.0,
    -8.91541768144708730549e-14,
    0.0,
    1.11958911652285357732e-14,
    0.0,
    1.05160133299148149637e-15,
    0.0,
    -5.17865527364668366154e-17,
    0.0,
    -8.06587486191656605154e-18,
    0.0,
    1.06082045305639659505e-19,
    0.0,
    4.43368067429940872779e-20,
};

const std::array<std::span<const double>, 5> kRiemannSiegelSeries = {{
    std::span<const double>(kC0),
    std::span<const double>(kC1),
    std::span<const double>(kC2),
    std::span<const double>(kC3),
    std::span<const double>(kC4),
}};

}  // namespace rzs::detail
