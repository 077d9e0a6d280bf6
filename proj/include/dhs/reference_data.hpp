// GENERATED by tools/gen_reference_data.py -- do not edit by hand.
//
// Frozen reference data for the regression, validation and acceptance
// suites: independently tabulated bound-state energies, phase shifts and
// non-relativistic energies for the hyperbolic potential
//   V(r) = D (1 - sigma0 coth(alpha r))^2,
// plus arbitrary-precision (40-digit) pins of the closed-form evaluators
// shipped in this library. The pins freeze the exact double values an
// exact evaluation rounds to; test tolerances account for the
// double-precision arithmetic of the implementation itself.
#pragma once

namespace dhs::refdata {

// ---- bound-state reference tables (alpha = 0.1, M = 1) ----
struct BoundRow {
  int n;
  int kappa;
  double sigma0;
  double root1;
  double root2;
};

// pseudospin, D = 5, C_ps = 0
inline constexpr BoundRow kPspinBoundA[] = {
    {1, -1, 0.10, 2.279123264, 1.029346029},
    {1, -1, 0.15, 1.861708247, 1.031128744},
    {1, -1, 0.20, 1.595741034, 1.034060836},
    {1, -1, 0.25, 1.409954493, 1.038900136},
    {1, -2, 0.10, 2.499877239, 1.049281052},
    {1, -2, 0.15, 2.038561413, 1.051746477},
    {1, -2, 0.20, 1.734612780, 1.055761011},
    {1, -2, 0.25, 1.518422511, 1.062286830},
    {1, -3, 0.10, 2.698880956, 1.074337203},
    {1, -3, 0.15, 2.214535196, 1.077721454},
    {1, -3, 0.20, 1.879494431, 1.083211792},
    {1, -3, 0.25, 1.634306621, 1.092094144},
    {1, -4, 0.10, 2.860137540, 1.104783298},
    {1, -4, 0.15, 2.371800955, 1.109339737},
    {1, -4, 0.20, 2.015203200, 1.116738148},
    {1, -4, 0.25, 1.745286576, 1.128746703},
    {2, -1, 0.10, 2.615024144, 1.055156519},
    {2, -1, 0.15, 2.170905660, 1.059554992},
    {2, -1, 0.20, 1.854762182, 1.066940767},
    {2, -1, 0.25, 1.610620539, 1.079632694},
    {2, -2, 0.10, 2.751526391, 1.082577001},
    {2, -2, 0.15, 2.286314037, 1.087870608},
    {2, -2, 0.20, 1.948130591, 1.096737249},
    {2, -2, 0.25, 1.684753900, 1.111945302},
    {2, -3, 0.10, 2.880207106, 1.115665997},
    {2, -3, 0.15, 2.407058769, 1.122328052},
    {2, -3, 0.20, 2.050146916, 1.133485527},
    {2, -3, 0.25, 1.766570973, 1.152692476},
    {2, -4, 0.10, 2.984654813, 1.154764895},
    {2, -4, 0.15, 2.516213585, 1.163231610},
    {2, -4, 0.20, 2.146431337, 1.177478350},
    {2, -4, 0.25, 1.843996674, 1.202334754},
};

// pseudospin, D = 10, C_ps = -5
inline constexpr BoundRow kPspinBoundB[] = {
    {1, -1, 0.10, 2.123370278, -3.993494827},
    {1, -1, 0.15, 1.321903847, -3.993385960},
    {1, -1, 0.20, 0.841260815, -3.993229553},
    {1, -1, 0.25, 0.513215975, -3.993021383},
    {1, -2, 0.10, 2.396851228, -3.989095999},
    {1, -2, 0.15, 1.492968827, -3.988960245},
    {1, -2, 0.20, 0.958733145, -3.988765967},
    {1, -2, 0.25, 0.598875815, -3.988508727},
    {1, -3, 0.10, 2.742077063, -3.983652475},
    {1, -3, 0.15, 1.721607908, -3.983480601},
    {1, -3, 0.20, 1.120591256, -3.983235269},
    {1, -3, 0.25, 0.719150716, -3.982911555},
    {1, -4, 0.10, 3.119865055, -3.977163662},
    {1, -4, 0.15, 1.987047112, -3.976948998},
    {1, -4, 0.20, 1.314844872, -3.976643120},
    {1, -4, 0.25, 0.866633979, -3.976240458},
    {2, -1, 0.10, 3.119164186, -3.987967157},
    {2, -1, 0.15, 2.174347963, -3.987685287},
    {2, -1, 0.20, 1.576374701, -3.987279697},
    {2, -1, 0.25, 1.152943758, -3.986738757},
    {2, -2, 0.10, 3.308028013, -3.982028646},
    {2, -2, 0.15, 2.296760801, -3.981727996},
    {2, -2, 0.20, 1.662607037, -3.981295986},
    {2, -2, 0.25, 1.217121129, -3.980720876},
    {2, -3, 0.10, 3.556476381, -3.975030556},
    {2, -3, 0.15, 2.465317807, -3.974688096},
    {2, -3, 0.20, 1.784093810, -3.974197233},
    {2, -3, 0.25, 1.308784059, -3.973545930},
    {2, -4, 0.10, 3.839051072, -3.966978840},
    {2, -4, 0.15, 2.667142308, -3.966583110},
    {2, -4, 0.20, 1.933530119, -3.966017016},
    {2, -4, 0.25, 1.423425408, -3.965267870},
};

// spin, D = 10, C_s = 0
inline constexpr BoundRow kSpinBoundCs0[] = {
    {0, -2, 0.10, 2.852748850, -0.997190645},
    {0, -2, 0.15, 2.286237200, -0.997160056},
    {0, -2, 0.20, 1.976219709, -0.997116299},
    {0, -2, 0.25, 1.777900928, -0.997058390},
    {0, -3, 0.10, 3.349197922, -0.994101445},
    {0, -3, 0.15, 2.597824107, -0.994048465},
    {0, -3, 0.20, 2.189987655, -0.993972934},
    {0, -3, 0.25, 1.933180571, -0.993873429},
    {0, -4, 0.10, 3.898927388, -0.989885456},
    {0, -4, 0.15, 2.970569858, -0.989803165},
    {0, -4, 0.20, 2.458487266, -0.989686044},
    {0, -4, 0.25, 2.134995974, -0.989532099},
    {0, -5, 0.10, 4.444897842, -0.984540394},
    {0, -5, 0.15, 3.364895150, -0.984421967},
    {0, -5, 0.20, 2.754447857, -0.984253582},
    {0, -5, 0.25, 2.364312495, -0.984032549},
    {1, -2, 0.10, 4.307215786, -0.992940748},
    {1, -2, 0.15, 3.494784849, -0.992807827},
    {1, -2, 0.20, 3.001592356, -0.992615929},
    {1, -2, 0.25, 2.661226629, -0.992358819},
    {1, -3, 0.10, 4.595818435, -0.988170213},
    {1, -3, 0.15, 3.680400729, -0.988003000},
    {1, -3, 0.20, 3.132061101, -0.987762645},
    {1, -3, 0.25, 2.758336616, -0.987442474},
    {1, -4, 0.10, 4.953368438, -0.982265799},
    {1, -4, 0.15, 3.924033854, -0.982052870},
    {1, -4, 0.20, 3.308761019, -0.981747682},
    {1, -4, 0.25, 2.892498344, -0.981342717},
    {1, -5, 0.10, 5.338258842, -0.975226530},
    {1, -5, 0.15, 4.201954406, -0.974959459},
    {1, -5, 0.20, 3.517066442, -0.974577405},
    {1, -5, 0.25, 3.054118376, -0.974071753},
};

// spin, D = 10, C_s = 5
inline constexpr BoundRow kSpinBoundCs5[] = {
    {0, -2, 0.10, 4.894455875, 4.004884016},
    {0, -2, 0.15, 4.484630891, 4.005026090},
    {0, -2, 0.20, 4.291441866, 4.005242281},
    {0, -2, 0.25, 4.186232796, 4.005555499},
    {0, -3, 0.10, 5.374102366, 4.010243686},
    {0, -3, 0.15, 4.789547550, 4.010499561},
    {0, -3, 0.20, 4.496203764, 4.010885663},
    {0, -3, 0.25, 4.328714233, 4.011438071},
    {0, -4, 0.10, 5.855300432, 4.017565178},
    {0, -4, 0.15, 5.119359731, 4.017971982},
    {0, -4, 0.20, 4.729675556, 4.018583410},
    {0, -4, 0.25, 4.497834585, 4.019453088},
    {0, -5, 0.10, 6.309088175, 4.026860903},
    {0, -5, 0.15, 5.450837766, 4.027456271},
    {0, -5, 0.20, 4.974848046, 4.028349215},
    {0, -5, 0.25, 4.681673312, 4.029615355},
    {1, -2, 0.10, 5.855244196, 4.012347926},
    {1, -2, 0.15, 5.188936272, 4.012901328},
    {1, -2, 0.20, 4.804784938, 4.013761503},
    {1, -2, 0.25, 4.556938740, 4.015047441},
    {1, -3, 0.10, 6.178579520, 4.020644486},
    {1, -3, 0.15, 5.414210564, 4.021381830},
    {1, -3, 0.20, 4.970596099, 4.022516492},
    {1, -3, 0.25, 4.682895638, 4.024188218},
    {1, -4, 0.10, 6.534179272, 4.030932630},
    {1, -4, 0.15, 5.675017706, 4.031906704},
    {1, -4, 0.20, 5.167809668, 4.033396291},
    {1, -4, 0.25, 4.835280862, 4.035570778},
    {1, -5, 0.10, 6.885351175, 4.043223541},
    {1, -5, 0.15, 5.945777082, 4.044479104},
    {1, -5, 0.20, 5.378157524, 4.046391514},
    {1, -5, 0.25, 5.000762561, 4.049166887},
};

// ---- non-relativistic energies (D = 10, mu = hbar = 1) ----
struct NonrelRow {
  int n;
  int l;
  double sigma0;
  double alpha;
  double energy;  // tabulated to 5 decimals
};

inline constexpr NonrelRow kNonrelEnergies[] = {
    {0, 1, 0.10, 0.10, 2.61886},
    {0, 1, 0.10, 0.15, 3.90571},
    {0, 1, 0.10, 0.20, 5.00379},
    {0, 1, 0.10, 0.25, 5.88669},
    {0, 1, 0.15, 0.10, 1.68039},
    {0, 1, 0.15, 0.15, 2.57787},
    {0, 1, 0.15, 0.20, 3.43316},
    {0, 1, 0.15, 0.25, 4.20997},
    {0, 1, 0.20, 0.10, 1.20888},
    {0, 1, 0.20, 0.15, 1.86663},
    {0, 1, 0.20, 0.20, 2.52048},
    {0, 1, 0.20, 0.25, 3.14740},
    {1, 1, 0.10, 0.10, 4.73552},
    {1, 1, 0.10, 0.15, 6.04570},
    {1, 1, 0.10, 0.20, 6.91711},
    {1, 1, 0.10, 0.25, 7.48475},
    {1, 1, 0.15, 0.10, 3.46026},
    {1, 1, 0.15, 0.15, 4.62307},
    {1, 1, 0.15, 0.20, 5.50067},
    {1, 1, 0.15, 0.25, 6.15044},
    {1, 1, 0.20, 0.10, 2.68320},
    {1, 1, 0.20, 0.15, 3.67154},
    {1, 1, 0.20, 0.20, 4.46564},
    {1, 1, 0.20, 0.25, 5.09305},
    {0, 2, 0.10, 0.10, 3.62734},
    {0, 2, 0.10, 0.15, 5.29485},
    {0, 2, 0.10, 0.20, 6.47635},
    {0, 2, 0.10, 0.25, 7.25747},
    {0, 2, 0.15, 0.10, 2.27011},
    {0, 2, 0.15, 0.15, 3.56704},
    {0, 2, 0.15, 0.20, 4.69665},
    {0, 2, 0.15, 0.25, 5.59830},
    {0, 2, 0.20, 0.10, 1.57908},
    {0, 2, 0.20, 0.15, 2.54853},
    {0, 2, 0.20, 0.20, 3.48262},
    {0, 2, 0.20, 0.25, 4.31329},
    {2, 1, 0.10, 0.10, 6.00299},
    {2, 1, 0.10, 0.15, 7.11553},
    {2, 1, 0.10, 0.20, 7.71951},
    {2, 1, 0.10, 0.25, 8.02106},
    {2, 1, 0.15, 0.10, 4.66770},
    {2, 1, 0.15, 0.15, 5.80657},
    {2, 1, 0.15, 0.20, 6.52463},
    {2, 1, 0.15, 0.25, 6.95731},
    {2, 1, 0.20, 0.10, 3.75704},
    {2, 1, 0.20, 0.15, 4.81242},
    {2, 1, 0.20, 0.20, 5.53159},
    {2, 1, 0.20, 0.25, 6.00361},
    {1, 2, 0.10, 0.10, 5.33164},
    {1, 2, 0.10, 0.15, 6.73663},
    {1, 2, 0.10, 0.20, 7.54623},
    {1, 2, 0.10, 0.25, 7.97844},
    {1, 2, 0.15, 0.10, 3.85813},
    {1, 2, 0.15, 0.15, 5.19480},
    {1, 2, 0.15, 0.20, 6.13553},
    {1, 2, 0.15, 0.25, 6.75588},
    {1, 2, 0.20, 0.10, 2.95293},
    {1, 2, 0.20, 0.15, 4.10491},
    {1, 2, 0.20, 0.20, 5.00322},
    {1, 2, 0.20, 0.25, 5.66533},
    {0, 3, 0.10, 0.10, 4.69036},
    {0, 3, 0.10, 0.15, 6.43153},
    {0, 3, 0.10, 0.20, 7.43683},
    {0, 3, 0.10, 0.25, 7.97990},
    {0, 3, 0.15, 0.10, 3.00341},
    {0, 3, 0.15, 0.15, 4.60144},
    {0, 3, 0.15, 0.20, 5.79817},
    {0, 3, 0.15, 0.25, 6.60873},
    {0, 3, 0.20, 0.10, 2.07413},
    {0, 3, 0.20, 0.15, 3.35783},
    {0, 3, 0.20, 0.20, 4.47694},
    {0, 3, 0.20, 0.25, 5.35270},
};

// ---- phase-shift reference tables (E = M = 1, D = 10) ----
struct PhaseRow {
  int l;
  int kappa;
  double delta;
};

// pseudospin, sigma0 = alpha = 0.1, C_ps = 0.05
inline constexpr PhaseRow kPspinPhasesCps005[] = {
    {0, -5, -9.667030052888922},
    {0, -4, -10.040884779950039},
    {0, -3, -9.919223591558044},
    {0, -2, -9.297898988297444},
    {0, -1, -8.078248081182888},
    {0, 1, -6.037944299866905},
    {0, 2, -8.078248081182888},
    {0, 3, -9.297898988297444},
    {0, 4, -9.919223591558044},
    {0, 5, -10.040884779950039},
    {1, -5, -8.096233726094024},
    {1, -4, -8.470088453155141},
    {1, -3, -8.348427264763147},
    {1, -2, -7.727102661502547},
    {1, -1, -6.507451754387993},
    {1, 1, -4.467147973072009},
    {1, 2, -6.507451754387993},
    {1, 3, -7.727102661502547},
    {1, 4, -8.348427264763147},
    {1, 5, -8.470088453155141},
    {2, -5, -6.525437399299129},
    {2, -4, -6.899292126360244},
    {2, -3, -6.777630937968251},
    {2, -2, -6.156306334707651},
    {2, -1, -4.936655427593096},
    {2, 1, -2.896351646277112},
    {2, 2, -4.936655427593096},
    {2, 3, -6.156306334707651},
    {2, 4, -6.777630937968251},
    {2, 5, -6.899292126360244},
    {3, -5, -4.954641072504233},
    {3, -4, -5.328495799565348},
    {3, -3, -5.206834611173354},
    {3, -2, -4.585510007912754},
    {3, -1, -3.365859100798200},
    {3, 1, -1.32555319482215},
    {3, 2, -3.365859100798200},
    {3, 3, -4.585510007912754},
    {3, 4, -5.206834611173354},
    {3, 5, -5.328495799565348},
};

// spin, sigma0 = alpha = 0.5, C_s = 5
inline constexpr PhaseRow kSpinPhasesCs5[] = {
    {0, -5, -13.370909470812821},
    {0, -4, -14.223834178887669},
    {0, -3, -14.812590524986316},
    {0, -2, -15.180768491483812},
    {0, -1, -15.357449458632775},
    {0, 1, -15.180768491483812},
    {0, 2, -14.812590524986316},
    {0, 3, -14.223834178887669},
    {0, 4, -13.370909470812821},
    {0, 5, -12.192227544491045},
    {1, -5, -11.800113144017923},
    {1, -4, -12.653037852092771},
    {1, -3, -13.241794198191421},
    {1, -2, -13.609972164688918},
    {1, -1, -13.786653131837877},
    {1, 1, -13.609972164688918},
    {1, 2, -13.241794198191421},
    {1, 3, -12.653037852092771},
    {1, 4, -11.800113144017923},
    {1, 5, -10.621431217696150},
    {2, -5, -8.6585204904281290},
    {2, -4, -9.5114451985029810},
    {2, -3, -10.100201544601624},
    {2, -2, -10.468379511099124},
    {2, -1, -10.645060478248087},
    {2, 1, -10.468379511099124},
    {2, 2, -10.100201544601624},
    {2, 3, -9.5114451985029810},
    {2, 4, -8.6585204904281290},
    {2, 5, -7.4798385641063540},
    {3, -5, -8.6585204904281290},
    {3, -4, -9.5114451985029810},
    {3, -3, -10.100201544601624},
    {3, -2, -10.468379511099124},
    {3, -1, -10.645060478248087},
    {3, 1, -10.468379511099124},
    {3, 2, -10.100201544601624},
    {3, 3, -9.5114451985029810},
    {3, 4, -8.6585204904281290},
    {3, 5, -7.4798385641063540},
};

// spin, sigma0 = alpha = 0.5, C_s = 10
inline constexpr PhaseRow kSpinPhasesCs10[] = {
    {0, -5, -32.865901014031351},
    {0, -4, -33.477658101510812},
    {0, -3, -33.922995271131597},
    {0, -2, -34.213439256222195},
    {0, -1, -34.356717558868027},
    {0, 1, -34.213439256222195},
    {0, 2, -33.922995271131597},
    {0, 3, -33.477658101510812},
    {0, 4, -32.865901014031351},
    {0, 5, -32.072333895105686},
    {1, -5, -31.295104687236456},
    {1, -4, -31.906861774715914},
    {1, -3, -32.352198944336699},
    {1, -2, -32.642642929427303},
    {1, -1, -32.785921232073129},
    {1, 1, -32.642642929427303},
    {1, 2, -32.352198944336699},
    {1, 3, -31.906861774715914},
    {1, 4, -31.295104687236456},
    {1, 5, -30.501537568310784},
    {2, -5, -29.724308360441558},
    {2, -4, -30.336065447921015},
    {2, -3, -30.781402617541801},
    {2, -2, -31.071846602632405},
    {2, -1, -31.215124905278238},
    {2, 1, -31.071846602632405},
    {2, 2, -30.781402617541801},
    {2, 3, -30.336065447921015},
    {2, 4, -29.724308360441558},
    {2, 5, -28.930741241515886},
    {3, -5, -28.153512033646667},
    {3, -4, -28.765269121126117},
    {3, -3, -29.210606290746910},
    {3, -2, -29.501050275837507},
    {3, -1, -29.644328578483339},
    {3, 1, -29.501050275837507},
    {3, 2, -29.210606290746910},
    {3, 3, -28.765269121126117},
    {3, 4, -28.153512033646667},
    {3, 5, -27.359944914720987},
};

// ---- phase pins: the shipped closed-form evaluators at 40-digit
// precision, rounded to double. These guard against numerical
// regressions. They intentionally differ from the tabulated phases
// above -- see README, "Known non-reproductions".
struct PhasePin {
  int l;
  int kappa;
  bool real_lambda;  // false: exponent radicand < 0, no real phase
  double delta;
};

inline constexpr PhasePin kPinPspinCps005[] = {
    {0, -5, true, -5.325453033600487},
    {0, -4, true, -4.790075487580324},
    {0, -3, true, -4.0806166895142715},
    {0, -2, true, -3.2360553593461727},
    {0, -1, true, -2.306396884554417},
    {0, 1, false, 0.0},
    {0, 2, true, -2.306396884554417},
    {0, 3, true, -3.2360553593461727},
    {0, 4, true, -4.0806166895142715},
    {0, 5, true, -4.790075487580324},
    {1, -5, true, -3.754656706805591},
    {1, -4, true, -3.219279160785428},
    {1, -3, true, -2.509820362719375},
    {1, -2, true, -1.6652590325512762},
    {1, -1, true, -0.7356005577595207},
    {1, 1, false, 0.0},
    {1, 2, true, -0.7356005577595207},
    {1, 3, true, -1.6652590325512762},
    {1, 4, true, -2.509820362719375},
    {1, 5, true, -3.219279160785428},
    {2, -5, true, -2.1838603800106946},
    {2, -4, true, -1.6484828339905313},
    {2, -3, true, -0.9390240359244783},
    {2, -2, true, -0.09446270575637952},
    {2, -1, true, 0.835195769035376},
    {2, 1, false, 0.0},
    {2, 2, true, 0.835195769035376},
    {2, 3, true, -0.09446270575637952},
    {2, 4, true, -0.9390240359244783},
    {2, 5, true, -1.6484828339905313},
    {3, -5, true, -0.6130640532157978},
    {3, -4, true, -0.07768650719563477},
    {3, -3, true, 0.6317722908704183},
    {3, -2, true, 1.4763336210385172},
    {3, -1, true, 2.4059920958302725},
    {3, 1, false, 0.0},
    {3, 2, true, 2.4059920958302725},
    {3, 3, true, 1.4763336210385172},
    {3, 4, true, 0.6317722908704183},
    {3, 5, true, -0.07768650719563477},
};

inline constexpr PhasePin kPinSpinCs5[] = {
    {0, -5, true, -7.939591421463057},
    {0, -4, true, -7.971103716273102},
    {0, -3, true, -7.958807127816191},
    {0, -2, true, -7.933535085815254},
    {0, -1, true, -7.915712885349041},
    {0, 1, true, -7.933535085815254},
    {0, 2, true, -7.958807127816191},
    {0, 3, true, -7.971103716273102},
    {0, 4, true, -7.939591421463057},
    {0, 5, true, -7.819967493724634},
    {1, -5, true, -6.368795094668161},
    {1, -4, true, -6.400307389478206},
    {1, -3, true, -6.388010801021294},
    {1, -2, true, -6.362738759020357},
    {1, -1, true, -6.344916558554145},
    {1, 1, true, -6.362738759020357},
    {1, 2, true, -6.388010801021294},
    {1, 3, true, -6.400307389478206},
    {1, 4, true, -6.368795094668161},
    {1, 5, true, -6.249171166929737},
    {2, -5, true, -4.797998767873264},
    {2, -4, true, -4.829511062683309},
    {2, -3, true, -4.817214474226398},
    {2, -2, true, -4.7919424322254605},
    {2, -1, true, -4.774120231759248},
    {2, 1, true, -4.7919424322254605},
    {2, 2, true, -4.817214474226398},
    {2, 3, true, -4.829511062683309},
    {2, 4, true, -4.797998767873264},
    {2, 5, true, -4.678374840134841},
    {3, -5, true, -3.2272024410783677},
    {3, -4, true, -3.2587147358884128},
    {3, -3, true, -3.246418147431501},
    {3, -2, true, -3.2211461054305635},
    {3, -1, true, -3.2033239049643516},
    {3, 1, true, -3.2211461054305635},
    {3, 2, true, -3.246418147431501},
    {3, 3, true, -3.2587147358884128},
    {3, 4, true, -3.2272024410783677},
    {3, 5, true, -3.1075785133399436},
};

inline constexpr PhasePin kPinSpinCs10[] = {
    {0, -5, true, -13.481142692990579},
    {0, -4, true, -13.458648817492199},
    {0, -3, true, -13.433499221354557},
    {0, -2, true, -13.41275534757047},
    {0, -1, true, -13.401180719269384},
    {0, 1, true, -13.41275534757047},
    {0, 2, true, -13.433499221354557},
    {0, 3, true, -13.458648817492199},
    {0, 4, true, -13.481142692990579},
    {0, 5, true, -13.491630272290298},
    {1, -5, true, -11.910346366195682},
    {1, -4, true, -11.887852490697302},
    {1, -3, true, -11.86270289455966},
    {1, -2, true, -11.841959020775574},
    {1, -1, true, -11.830384392474487},
    {1, 1, true, -11.841959020775574},
    {1, 2, true, -11.86270289455966},
    {1, 3, true, -11.887852490697302},
    {1, 4, true, -11.910346366195682},
    {1, 5, true, -11.920833945495401},
    {2, -5, true, -10.339550039400786},
    {2, -4, true, -10.317056163902405},
    {2, -3, true, -10.291906567764764},
    {2, -2, true, -10.271162693980678},
    {2, -1, true, -10.25958806567959},
    {2, 1, true, -10.271162693980678},
    {2, 2, true, -10.291906567764764},
    {2, 3, true, -10.317056163902405},
    {2, 4, true, -10.339550039400786},
    {2, 5, true, -10.350037618700505},
    {3, -5, true, -8.76875371260589},
    {3, -4, true, -8.746259837107509},
    {3, -3, true, -8.721110240969866},
    {3, -2, true, -8.700366367185781},
    {3, -1, true, -8.688791738884694},
    {3, 1, true, -8.700366367185781},
    {3, 2, true, -8.721110240969866},
    {3, 3, true, -8.746259837107509},
    {3, 4, true, -8.76875371260589},
    {3, 5, true, -8.779241291905608},
};

// ---- refined bound-state roots: the closed-form residual solved to
// 40 digits, rounded to double (tables print 9 decimals) ----
struct RefinedRoot {
  int table;  // 0: kPspinBoundA, 1: kPspinBoundB, 2: kSpinBoundCs0, 3: kSpinBoundCs5
  int n;
  int kappa;
  double sigma0;
  double energy;
};

inline constexpr RefinedRoot kRefinedRoots[] = {
    {0, 1, -1, 0.10, 2.2791232643917523},
    {0, 1, -1, 0.10, 1.0293460284005107},
    {0, 2, -3, 0.20, 2.050146916238079},
    {0, 2, -3, 0.20, 1.1334855273704016},
    {1, 1, -2, 0.15, 1.492968826993071},
    {1, 1, -2, 0.15, -3.988960244743876},
    {2, 0, -2, 0.10, 2.852748846990831},
    {2, 0, -2, 0.10, -0.9971906446191305},
    {3, 0, -2, 0.10, 4.894455874840726},
    {3, 0, -2, 0.10, 4.004884016415239},
    {3, 1, -4, 0.25, 4.835280862001196},
    {3, 1, -4, 0.25, 4.0355707781987284},
};

// ---- non-relativistic closed form pinned to full double precision ----
struct NonrelPin {
  int n;
  int l;
  double sigma0;
  double alpha;
  double energy;
};

inline constexpr NonrelPin kNonrelPins[] = {
    {0, 1, 0.10, 0.10, 2.6188562740677814},
    {1, 2, 0.15, 0.20, 6.135525907562821},
    {2, 1, 0.20, 0.25, 6.003607810197886},
};

// ---- continuous-branch log-gamma battery (principal analytic
// continuation: imaginary part NOT reduced to (-pi, pi]) ----
struct LogGammaCase {
  double z_re;
  double z_im;
  double lg_re;
  double lg_im;
};

inline constexpr LogGammaCase kLogGammaCases[] = {
    {1.5, 0.0, -0.12078223763524522, 0.0},
    {0.5, 0.0, 0.5723649429247001, 0.0},
    {7.0, 0.0, 6.579251212010101, 0.0},
    {1.0, 1.0, -0.6509231993018564, -0.3016403204675332},
    {0.5, 14.0, -21.07221004192388, 22.949779692295984},
    {3.0, -5.0, -2.8176279605487706, -6.379589291242472},
    {12.3, 45.6, -25.505555190755228, 145.61388919519334},
    {0.5, 1000.0, -1569.877388261692, 5907.755320648806},
    {-4.3, 2.1, -7.954743135675226, -11.718920095233555},
    {-0.5, -0.5, 0.4589608330895958, 3.1069236923143957},
    {-100.25, 0.5, -364.6248381354395, -314.2523216925213},
    {0.001, 0.001, 6.560604473837553, -0.7859737349296534},
    {200.5, -300.75, 682.8722031355322, -1667.2686826052773},
};

// ---- Gauss 2F1 battery (complex parameters, real argument) ----
struct Hyp2f1Case {
  double a_re, a_im;
  double b_re, b_im;
  double c_re, c_im;
  double z;
  double v_re, v_im;
};

inline constexpr Hyp2f1Case kHyp2f1Cases[] = {
    {0.5, 2.0, 0.5, -2.0, 1.0, 0.0, 0.9, 50.98386980082612, 1.536809026540944e-41},
    {0.5, 2.0, 0.5, -2.0, 1.0, 0.0, 0.97, 115.82077984800483, 3.800071607293551e-40},
    {0.5, 1.0, 1.5, -1.0, 3.0, 0.0, 0.6, 1.525543444559736, 0.37500440456406375},
    {0.5, 1.0, 1.5, -1.0, 3.3, 0.0, 0.6, 1.4618462359013793, 0.3238969357492895},
    {6.0, -10.954451150103322, 6.0, 5.477225575051661, 12.0, 0.0, 0.3, 7.168080202778774, -10.613607073759379},
    {6.0, -10.954451150103322, 6.0, 5.477225575051661, 12.0, 0.0, 0.95, -13754.61416462294, -37661.16277914411},
};

// ---- scattering anchor: spin limit, E = M = 1, C_s = 5, D = 10,
// sigma0 = alpha = 0.5, kappa = -1 (printed exponent lambda = 6) ----
inline constexpr double kAnchorKSquared = 7.5;
inline constexpr double kAnchorK = 2.7386127875258306;
inline constexpr double kAnchorInnerRootIm = 8.215838362577491;
inline constexpr double kAnchorCmaRe = 6.0;
inline constexpr double kAnchorCmaIm = 10.954451150103322;
inline constexpr double kAnchorCmbRe = 6.0;
inline constexpr double kAnchorCmbIm = -5.477225575051661;
inline constexpr double kAnchorNormalization = 879.4737845709079;
inline constexpr double kAnchorEnvelope = 23045975.225188453;  // 2 Gamma(2 lambda) / sqrt(2 lambda)

// lower-component wavefunction values N z^lambda e^{ikr} 2F1(a,b,c;z),
// z = 1 - exp(-2 alpha r), at the anchor parameters
struct WavefunctionCase {
  double r;
  double v_re, v_im;
};

inline constexpr WavefunctionCase kAnchorWavefunction[] = {
    {0.1, 0.0014159212044646875, -2.0338463162272944e-44},
    {1.0, 22657.714722862784, -2.0864331911222322e-36},
    {5.0, -9104818.87380381, 6.970496877430757e-33},
    {20.0, 6088136.573267958, 2.998023415936305e-26},
};

// ---- model-layer pins ----
// pseudospin E = M = 1, C_ps = 0.05, D = 10, sigma0 = alpha = 0.1, kappa = -1
inline constexpr double kPspinK1Squared = 0.2984155346572962;
inline constexpr double kPspinLambda = 1.8228756555322954;
// potential and centrifugal surrogate at D = 10, sigma0 = 0.1, alpha = 0.1, r = 5
inline constexpr double kPotentialAtR5 = 6.140362610205811;
inline constexpr double kCentrifugalAtR5 = 0.04011917643966358;

// ---- Numerov oracle samples: tabulated roots confirmed as ODE
// eigenvalues. nodes = observed eigenfunction node count (for strongly
// energy-dependent channels it exceeds the closed-form index n; the
// gamma(E), beta(E) coefficients make the problem nonlinear in E, so
// Sturm's oscillation count does not track n there). ----
struct EigenSample {
  int limit;  // 0: pseudospin, 1: spin, 2: non-relativistic
  int n;
  int kappa_or_l;  // kappa for relativistic limits, l for non-relativistic
  double sigma0;
  double alpha;
  double D;
  double C;  // C_ps or C_s; unused for non-relativistic
  double energy;
  int nodes;
};

inline constexpr EigenSample kEigenSamples[] = {
    {0, 1, -1, 0.10, 0.1, 5, 0, 2.279123264, 1},
    {0, 1, -3, 0.15, 0.1, 5, 0, 2.214535196, 1},
    {0, 2, -2, 0.20, 0.1, 5, 0, 1.948130591, 2},
    {0, 1, -1, 0.10, 0.1, 10, -5, 2.123370278, 2},
    {0, 2, -4, 0.25, 0.1, 10, -5, 1.423425408, 6},
    {1, 0, -2, 0.10, 0.1, 10, 0, 2.852748850, 0},
    {1, 1, -5, 0.20, 0.1, 10, 0, 3.517066442, 4},
    {1, 0, -2, 0.10, 0.1, 10, 5, 4.894455875, 0},
    {1, 1, -3, 0.15, 0.1, 10, 5, 5.414210564, 1},
    {2, 0, 1, 0.10, 0.10, 10, 0, 2.61886, 0},
    {2, 1, 2, 0.15, 0.20, 10, 0, 6.13553, 1},
    {2, 2, 1, 0.20, 0.25, 10, 0, 6.00361, 2},
};

// Numerov phase samples: channels with a regular (power-law) origin,
// compared mod pi against the closed-form shift. lambda_form 0 uses the
// printed exponent radicand, 1 the indicial (small-r series) radicand;
// the two coincide in the pseudospin limit.
struct PhaseSample {
  int limit;  // 0: pseudospin, 1: spin
  int kappa;
  double sigma0;
  double alpha;
  double D;
  double C;
  double E;
  int lambda_form;  // 0: printed, 1: indicial
  double closed_delta_l0;  // l = 0 closed-form shift, 40-digit pin
};

inline constexpr PhaseSample kPhaseSamples[] = {
    {0, -1, 0.10, 0.1, 10, 0.05, 1, 0, -2.306396884554417},
    {0, -2, 0.10, 0.1, 10, 0.05, 1, 0, -3.2360553593461727},
    {0, -3, 0.10, 0.1, 10, 0.05, 1, 0, -4.0806166895142715},
    {0, -4, 0.10, 0.1, 10, 0.05, 1, 0, -4.790075487580324},
    {0, -5, 0.10, 0.1, 10, 0.05, 1, 0, -5.325453033600487},
    {1, 5, 0.50, 0.5, 10, 5, 1, 1, -6.297061722270873},
    {1, -1, 0.50, 0.5, 10, 5, 6, 1, 0.8057612399050028},
    {1, -2, 0.50, 0.5, 10, 5, 6, 1, 0.34144418695717144},
    {1, -3, 0.50, 0.5, 10, 5, 6, 1, -0.4825206999198375},
    {1, -4, 0.50, 0.5, 10, 5, 6, 1, -1.495793984285135},
    {1, -5, 0.50, 0.5, 10, 5, 6, 1, -2.4956780299352515},
    {1, 5, 0.50, 0.5, 10, 5, 6, 1, -3.258414550371939},
};

}  // namespace dhs::refdata
