#pragma once

// Boundary-inclusive SBP quadrature rules with Gauss-Legendre face
// nodes on the reference triangle.  The first 3*(N+1) nodes are the
// face nodes in face-major order (face 0, 1, 2); the rest are
// interior.  Volume exactness 2N-1.  Generated by
// scripts/generate_quadrature_tables.py.

#include <array>
#include <cstddef>

namespace swedg::tables {

inline constexpr std::array<std::array<double, 3>, 6> sbp_legendre_N1 = {{
    {-0.5773502691896257, -1.0, 0.3333333333333334},
    {0.5773502691896257, -1.0, 0.3333333333333334},
    {0.5773502691896257, -0.5773502691896257, 0.3333333333333334},
    {-0.5773502691896257, 0.5773502691896257, 0.3333333333333333},
    {-1.0, 0.5773502691896257, 0.3333333333333334},
    {-1.0, -0.5773502691896257, 0.3333333333333334},
}};

inline constexpr std::array<std::array<double, 3>, 12> sbp_legendre_N2 = {{
    {-0.7745966692414834, -1.0, 0.10052310029675063},
    {0.0, -1.0, 0.19508829871631683},
    {0.7745966692414834, -1.0, 0.10052310029675059},
    {0.7745966692414834, -0.7745966692414834, 0.045050884687999414},
    {-0.0, 0.0, 0.0450508846879994},
    {-0.7745966692414834, 0.7745966692414834, 0.08872570846467473},
    {-1.0, 0.7745966692414834, 0.08872570846467466},
    {-1.0, -0.0, 0.045050884687999455},
    {-1.0, -0.7745966692414834, 0.045050884687999386},
    {-0.7174954756449365, -0.22370104853867528, 0.5392761902411342},
    {-0.058803475816388284, -0.22370104853867528, 0.5392761902411343},
    {-0.21096064642301862, -0.5780787071539627, 0.16765816452656665},
}};

inline constexpr std::array<std::array<double, 3>, 21> sbp_legendre_N3 = {{
    {-0.8611363115940526, -1.0, 0.026611209289223715},
    {-0.3399810435848563, -1.0, 0.07200155665003856},
    {0.3399810435848563, -1.0, 0.07495685992576523},
    {0.8611363115940526, -1.0, 0.03169963147876686},
    {0.8611363115940526, -0.8611363115940526, 0.022007178507296814},
    {0.3399810435848563, -0.3399810435848563, 0.0861441574091184},
    {-0.3399810435848563, 0.3399810435848563, 0.07244433400727554},
    {-0.8611363115940526, 0.8611363115940526, 0.030916145671634115},
    {-1.0, 0.8611363115940526, 0.028374787275138952},
    {-1.0, 0.3399810435848563, 0.08468959359514322},
    {-1.0, -0.3399810435848563, 0.04939216338855016},
    {-1.0, -0.8611363115940526, 0.0303456158751352},
    {-0.3652563781014592, -0.7311032909284277, 0.13345056221210794},
    {-0.7410307559089608, -0.4146793936944351, 0.19347350550348447},
    {-0.25533695722769373, 0.027036889277906873, 0.017025682563087174},
    {-0.6569628815397206, 0.1935734689895528, 0.06806376535954979},
    {-0.5730288822293381, 0.1935734689895528, 0.33849559613178304},
    {-0.5333333333333333, -0.5333333333333333, 0.09058218201929644},
    {0.06666666666666665, -0.5333333333333333, 0.34055791629971083},
    {-0.7000000000000001, -0.7000000000000001, 0.08999401553396677},
    {0.4000000000000001, -0.7000000000000001, 0.11877354130392696},
}};

inline constexpr std::array<std::array<double, 3>, 37> sbp_legendre_N4 = {{
    {-0.906179845938664, -1.0, 0.011782305101402069},
    {-0.5384693101056831, -1.0, 0.03687641965066967},
    {0.0, -1.0, 0.035096414578018084},
    {0.5384693101056831, -1.0, 0.03678810477364632},
    {0.906179845938664, -1.0, 0.011910488892733651},
    {0.906179845938664, -0.906179845938664, 0.011184758681148224},
    {0.5384693101056831, -0.5384693101056831, 0.04057607479142614},
    {-0.0, 0.0, 0.026455215955424407},
    {-0.5384693101056831, 0.5384693101056831, 0.03252525591823805},
    {-0.906179845938664, 0.906179845938664, 0.011490593254910577},
    {-1.0, 0.906179845938664, 0.01272750511493566},
    {-1.0, 0.5384693101056831, 0.03209925983209454},
    {-1.0, -0.0, 0.026518751148669105},
    {-1.0, -0.5384693101056831, 0.040613982333258525},
    {-1.0, -0.906179845938664, 0.011052688182273307},
    {-0.3333333333333333, -0.3333333333333333, 0.1825019333520822},
    {-0.37412389053704975, -0.841594945815954, 0.024986606042439158},
    {0.21571883635300365, -0.841594945815954, 0.02531390596315978},
    {-0.8934684316937909, 0.12713972889214026, 0.03773445849703969},
    {-0.23367129719834942, 0.12713972889214026, 0.037006665969068285},
    {-0.7743731433019823, 0.6361751829407771, 0.01794470116943148},
    {-0.7484719985928159, -0.7560071391792182, 0.0706048054776442},
    {-0.12199643041039077, -0.7560071391792182, 0.20581273428842267},
    {0.5044791377720343, -0.7560071391792182, 0.0727717911336931},
    {-0.7753682446132951, -0.18264960657709725, 0.18635127445354358},
    {-0.041982148809607656, -0.18264960657709725, 0.18719352356315003},
    {-0.8066772379436665, 0.4847761431163566, 0.08797419956687938},
    {-0.6780989051726901, 0.4847761431163566, 0.058605016033081915},
    {-0.04975079480766437, -0.4686532487930585, 0.02051421331218736},
    {-0.596390374658385, 0.028797606686969457, 0.05753423396125203},
    {-0.3764167344158742, 0.028797606686969457, 0.019605493169907416},
    {-0.5727538693328866, 0.2347982475345069, 0.05958466438701475},
    {-0.5333333333333333, -0.5333333333333333, 0.016666532841882638},
    {-0.7000000000000001, -0.7000000000000001, 0.11496869995839448},
    {0.4000000000000001, -0.7000000000000001, 0.11539206907374837},
    {-0.8666666666666667, -0.8666666666666667, 0.012181971394857178},
    {0.7333333333333334, -0.8666666666666667, 0.011052688182272117},
}};

struct SbpRuleView {
    int N;
    int nodes_per_face;
    const std::array<double, 3>* data;
    std::size_t size;
};

inline constexpr std::array<SbpRuleView, 4> sbp_legendre_rules = {{
    {1, 2, sbp_legendre_N1.data(), sbp_legendre_N1.size()},
    {2, 3, sbp_legendre_N2.data(), sbp_legendre_N2.size()},
    {3, 4, sbp_legendre_N3.data(), sbp_legendre_N3.size()},
    {4, 5, sbp_legendre_N4.data(), sbp_legendre_N4.size()},
}};

}  // namespace swedg::tables
