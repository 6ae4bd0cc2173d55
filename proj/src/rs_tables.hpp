// rs_tables.hpp
//
// Chebyshev coefficients (argument 2p-1 on [0,1]) of the first seven
// correction terms of the Riemann-Siegel asymptotic expansion,
// Z(t) = 2 sum_{n<=N} cos(theta - t log n)/sqrt(n)
//        + (-1)^{N-1} (t/2pi)^{-1/4} sum_j C_j(p) (t/2pi)^{-j/2},
// with a = sqrt(t/2pi), N = floor(a), p = a - N. The tables were produced
// by solving for C_j along constant-p sequences t = 2 pi (m+p)^2 against a
// 40-digit reference evaluation and are cross-checked in the test suite
// against the independent Euler-Maclaurin evaluator to 1e-9 and better.

#pragma once

#include <array>

namespace zm::zetanum::detail {

inline constexpr std::array<std::array<double, 32>, 7> kRSCorrection = {{
    // C0(p), Chebyshev in 2p-1; trailing magnitude 5.6e-23
    {{0.642667286239768413, 1.76322238019844852e-25, 0.271972999997855082, -2.28134241619183703e-26, 
      0.0107386058193402848, 1.6515241397161006e-27, -0.00137438152963366152, -2.78578365649384028e-28, 
      -0.000124682218803206779, 1.4000040553927272e-28, -5.76459970678304836e-7, -7.38787321778296355e-29, 
      2.72806742958045238e-7, 2.49360726870151639e-29, 8.07795305950047107e-9, -4.67798486011791788e-30, 
      -2.08846080688696556e-10, 9.17661948424413744e-31, -1.31155618547395278e-11, -6.82730434870992075e-32, 
      -1.42079872280871857e-14, -2.26625205839175191e-32, 1.02717013579311622e-14, 2.53728004102590364e-31, 
      1.39745988195183939e-16, 2.93253881468055194e-31, -4.48411873395228154e-18, -1.01233660139157615e-32, 
      -1.18305995738435543e-19, -1.31811537333724659e-31, 9.38986955499273451e-22, 2.38616542038362822e-31}},
    // C1(p), Chebyshev in 2p-1; trailing magnitude 5.23e-23
    {{7.09812040603834815e-24, 0.0106979139210030014, 3.07962270725418155e-24, 0.0171706512433778848, 
      7.74253592304034411e-25, 0.00279321114978847125, -4.47736459106330867e-25, -0.0000363756537192750444, 
      1.09256933348898585e-25, -0.0000271089552311508885, -2.30722727217064335e-26, -1.0483749866752774e-6, 
      3.86207960116444342e-27, 5.88646716652757217e-8, 2.04247024901299079e-29, 4.3229672685027793e-9, 
      -1.58687588788294651e-28, -1.13695915882737129e-11, 1.33877891005601732e-29, -6.69983391035532782e-12, 
      -1.22415327686546898e-28, -1.00799976528084745e-13, -2.44978190095831443e-29, 5.1524880092219816e-15, 
      -1.00081101496074402e-28, 1.52169544718218515e-16, -1.97064966791608975e-30, -1.86194648336152355e-18, 
      -1.18628124682326022e-29, -1.13018461775544882e-19, 2.86773527554380961e-28, -9.65031896547103372e-23}},
    // C2(p), Chebyshev in 2p-1; trailing magnitude 5.38e-22
    {{0.00314611585398891243, 2.81880960148462216e-20, -0.00230878388453075025, -3.66349667382052892e-21, 
      0.0000576982076668984432, 2.63844078824816209e-22, 0.000352388620236659026, -4.37800954368363149e-23, 
      0.0000252466674586844358, 2.22184423300632634e-23, -3.44282119719313607e-6, -1.17924070172563742e-23, 
      -3.53507455662245908e-7, 3.97899873670359648e-24, 3.73083018379262562e-9, -7.67424794568334072e-25, 
      1.27769518641166364e-9, 1.32612729506627455e-25, 2.1874616204147056e-11, -9.04720406602061832e-27, 
      -1.9141410964610094e-12, -1.55420373731350367e-27, -6.56288310216788836e-14, 3.15592384768586622e-26, 
      1.25860091826474831e-15, 3.42791649602308813e-26, 8.14007662388866432e-17, -2.09076060686761433e-27, 
      -5.42387394712149015e-20, -1.50374863255824346e-26, -5.79698681333816305e-20, 2.86497384289928821e-26}},
    // C3(p), Chebyshev in 2p-1; trailing magnitude 4.06e-22
    {{2.53864804958971346e-19, 0.0000712325622120343111, 9.34145771247019343e-20, 0.000232343052981648674, 
      3.6484640814631548e-20, -0.000129299120454724797, -1.87334241018152795e-20, 0.0000180744964136714471, 
      4.52641632860637084e-21, 6.52618518722043639e-6, -9.65759428098842465e-22, -1.1696365378521802e-7, 
      1.67208454711035174e-22, -7.34947612651818866e-8, -6.23426182498555413e-24, -1.77509100779058536e-9, 
      -4.55367780158811084e-24, 2.55555296132632694e-10, 3.84654546131331638e-25, 1.13766366005385392e-11, 
      -3.65371029459367809e-24, -3.34986389852884881e-13, -9.33044582999261484e-25, -2.55373793584348436e-14, 
      -3.21303332601850499e-24, 6.76650032116298492e-17, 3.90740666104202553e-26, 2.97688850551038732e-17, 
      -5.00496349655950141e-25, 2.99524051173315117e-19, 9.00830713800261422e-24, -2.04649836198010316e-20}},
    // C4(p), Chebyshev in 2p-1; trailing magnitude 4.9e-21
    {{0.000167657452466944962, 4.5375975135134906e-16, -0.000227287689434174944, -5.92160266365343454e-17, 
      0.0000647738718844530248, 4.24078152824088081e-18, -8.49220050012349764e-6, -6.9185501613995209e-19, 
      -2.61614072452236736e-6, 3.54874743923852735e-19, 8.33676496873420054e-7, -1.89486931609093517e-19, 
      6.32470403754309455e-8, 6.39137203074406896e-20, -1.00599494030000885e-8, -1.26341496421457356e-20, 
      -7.82267720412670481e-10, 1.94132450783557482e-21, 3.16765828534665132e-11, -1.07316925344259738e-22, 
      3.50069447051504945e-12, -8.0945893004905739e-24, -1.43148144248331812e-14, 3.70608583831403393e-22, 
      -7.26940242735697282e-15, 3.79391898114582373e-22, -8.78055732158110645e-17, -3.32252090035089577e-23, 
      8.15030176730117377e-18, -1.66712126299009775e-22, 1.91305846038450931e-19, 3.21625750471847168e-22}},
    // C5(p), Chebyshev in 2p-1; trailing magnitude 3.02e-20
    {{1.48653068362370163e-15, 0.0000882884523161730028, 4.02580217844614697e-16, -0.000015628684965155473, 
      2.89822968943412576e-16, -1.83424477269585832e-7, -1.33212735392070476e-16, 2.1097267875419564e-6, 
      3.18495119691734116e-17, -6.65701617434500774e-7, -6.86524770839321539e-18, 2.77147412183837757e-8, 
      1.23493115363253814e-18, 1.81112493712744078e-8, -9.20680360321769383e-20, -5.76589080274164568e-10, 
      -1.83901481786705877e-20, -1.86750334391397792e-10, 1.82307978392240504e-21, -1.1051608304286895e-13, 
      -1.76712969640269909e-20, 7.87064337150529232e-13, -5.32387929487739179e-21, 1.44583294399982527e-14, 
      -1.6408157410875666e-20, -1.58148064410605479e-15, 6.25504409662653061e-22, -4.91042413196289441e-17, 
      -2.92314887638954612e-21, 1.65393736726202644e-18, 4.50094290983934482e-20, 5.95493021528235007e-20}},
    // C6(p), Chebyshev in 2p-1; trailing magnitude 1.17e-18
    {{0.0000121897420770411589, 1.5709614840907977e-12, -0.0000138297601534848778, -2.05759637032942903e-13, 
      5.11096729021061272e-6, 1.46521802181711598e-14, -2.0458136385904052e-6, -2.35039748344738276e-15, 
      4.93813662950010592e-7, 1.21906917839497961e-15, -3.61875280174484473e-8, -6.54814970193708207e-16, 
      -1.28769051590674777e-8, 2.20789844830153927e-16, 2.57441211670958039e-9, -4.45690448344443112e-17, 
      1.36414571273912362e-10, 6.15744182182301565e-18, -3.03243958128488559e-11, -2.32655918601406678e-19, 
      -1.32166643648591962e-12, -1.57379461176160971e-20, 1.30316741370217157e-13, 8.51564228609326805e-19, 
      6.63653471655996768e-15, 8.24720406472910752e-19, -2.46035328449635966e-16, -9.21921489591345142e-20, 
      -1.66948199133315302e-17, -3.71154059120249485e-19, -1.57680758112935676e-18, 7.00402182798695502e-19}},
}};

}  // namespace zm::zetanum::detail
