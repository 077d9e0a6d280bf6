#!/usr/bin/env python3
"""Regenerate include/dhs/reference_data.hpp.

Freezes every high-precision fixture used by the C++ test and acceptance
suites. Values come from two sources:

  1. Independently tabulated reference values (bound-state energies, phase
     shifts, non-relativistic energies) for the hyperbolic potential
     V(r) = D (1 - sigma0 coth(alpha r))^2, transcribed verbatim.
  2. A 40-digit mpmath evaluation of the closed-form expressions shipped in
     this library (log-gamma battery, Gauss 2F1 battery, refined roots,
     phase pins, wavefunction chain values). These pin the double-precision
     implementation against an arbitrary-precision oracle.

Usage: python3 tools/gen_reference_data.py   (writes the header in place)
"""

import os

import mpmath as mp

mp.mp.dps = 40

C0 = mp.mpf('0.0823058167837972')
OUT = os.path.join(os.path.dirname(__file__), '..', 'include', 'dhs',
                   'reference_data.hpp')


def d(x) -> str:
    """Shortest round-trip decimal for the nearest double."""
    return repr(float(x))


# ---------------------------------------------------------------------------
# Tabulated reference values (transcribed; 9 or 5 printed decimals, phases 15+)
# ---------------------------------------------------------------------------

# Pseudospin bound energies, alpha = 0.1, M = 1.
# Column A: D = 5,  C_ps = 0.   Column B: D = 10, C_ps = -5.
PSPIN_BOUND = [
    # (n, kappa, sigma0, (A root1, A root2), (B root1, B root2))
    (1, -1, '0.10', ('2.279123264', '1.029346029'), ('2.123370278', '-3.993494827')),
    (1, -1, '0.15', ('1.861708247', '1.031128744'), ('1.321903847', '-3.993385960')),
    (1, -1, '0.20', ('1.595741034', '1.034060836'), ('0.841260815', '-3.993229553')),
    (1, -1, '0.25', ('1.409954493', '1.038900136'), ('0.513215975', '-3.993021383')),
    (1, -2, '0.10', ('2.499877239', '1.049281052'), ('2.396851228', '-3.989095999')),
    (1, -2, '0.15', ('2.038561413', '1.051746477'), ('1.492968827', '-3.988960245')),
    (1, -2, '0.20', ('1.734612780', '1.055761011'), ('0.958733145', '-3.988765967')),
    (1, -2, '0.25', ('1.518422511', '1.062286830'), ('0.598875815', '-3.988508727')),
    (1, -3, '0.10', ('2.698880956', '1.074337203'), ('2.742077063', '-3.983652475')),
    (1, -3, '0.15', ('2.214535196', '1.077721454'), ('1.721607908', '-3.983480601')),
    (1, -3, '0.20', ('1.879494431', '1.083211792'), ('1.120591256', '-3.983235269')),
    (1, -3, '0.25', ('1.634306621', '1.092094144'), ('0.719150716', '-3.982911555')),
    (1, -4, '0.10', ('2.860137540', '1.104783298'), ('3.119865055', '-3.977163662')),
    (1, -4, '0.15', ('2.371800955', '1.109339737'), ('1.987047112', '-3.976948998')),
    (1, -4, '0.20', ('2.015203200', '1.116738148'), ('1.314844872', '-3.976643120')),
    (1, -4, '0.25', ('1.745286576', '1.128746703'), ('0.866633979', '-3.976240458')),
    (2, -1, '0.10', ('2.615024144', '1.055156519'), ('3.119164186', '-3.987967157')),
    (2, -1, '0.15', ('2.170905660', '1.059554992'), ('2.174347963', '-3.987685287')),
    (2, -1, '0.20', ('1.854762182', '1.066940767'), ('1.576374701', '-3.987279697')),
    (2, -1, '0.25', ('1.610620539', '1.079632694'), ('1.152943758', '-3.986738757')),
    (2, -2, '0.10', ('2.751526391', '1.082577001'), ('3.308028013', '-3.982028646')),
    (2, -2, '0.15', ('2.286314037', '1.087870608'), ('2.296760801', '-3.981727996')),
    (2, -2, '0.20', ('1.948130591', '1.096737249'), ('1.662607037', '-3.981295986')),
    (2, -2, '0.25', ('1.684753900', '1.111945302'), ('1.217121129', '-3.980720876')),
    (2, -3, '0.10', ('2.880207106', '1.115665997'), ('3.556476381', '-3.975030556')),
    (2, -3, '0.15', ('2.407058769', '1.122328052'), ('2.465317807', '-3.974688096')),
    (2, -3, '0.20', ('2.050146916', '1.133485527'), ('1.784093810', '-3.974197233')),
    (2, -3, '0.25', ('1.766570973', '1.152692476'), ('1.308784059', '-3.973545930')),
    (2, -4, '0.10', ('2.984654813', '1.154764895'), ('3.839051072', '-3.966978840')),
    (2, -4, '0.15', ('2.516213585', '1.163231610'), ('2.667142308', '-3.966583110')),
    (2, -4, '0.20', ('2.146431337', '1.177478350'), ('1.933530119', '-3.966017016')),
    (2, -4, '0.25', ('1.843996674', '1.202334754'), ('1.423425408', '-3.965267870')),
]

# Spin bound energies, D = 10, alpha = 0.1, M = 1; columns C_s = 0 and C_s = 5.
SPIN_BOUND = [
    (0, -2, '0.10', ('2.852748850', '-0.997190645'), ('4.894455875', '4.004884016')),
    (0, -2, '0.15', ('2.286237200', '-0.997160056'), ('4.484630891', '4.005026090')),
    (0, -2, '0.20', ('1.976219709', '-0.997116299'), ('4.291441866', '4.005242281')),
    (0, -2, '0.25', ('1.777900928', '-0.997058390'), ('4.186232796', '4.005555499')),
    (0, -3, '0.10', ('3.349197922', '-0.994101445'), ('5.374102366', '4.010243686')),
    (0, -3, '0.15', ('2.597824107', '-0.994048465'), ('4.789547550', '4.010499561')),
    (0, -3, '0.20', ('2.189987655', '-0.993972934'), ('4.496203764', '4.010885663')),
    (0, -3, '0.25', ('1.933180571', '-0.993873429'), ('4.328714233', '4.011438071')),
    (0, -4, '0.10', ('3.898927388', '-0.989885456'), ('5.855300432', '4.017565178')),
    (0, -4, '0.15', ('2.970569858', '-0.989803165'), ('5.119359731', '4.017971982')),
    (0, -4, '0.20', ('2.458487266', '-0.989686044'), ('4.729675556', '4.018583410')),
    (0, -4, '0.25', ('2.134995974', '-0.989532099'), ('4.497834585', '4.019453088')),
    (0, -5, '0.10', ('4.444897842', '-0.984540394'), ('6.309088175', '4.026860903')),
    (0, -5, '0.15', ('3.364895150', '-0.984421967'), ('5.450837766', '4.027456271')),
    (0, -5, '0.20', ('2.754447857', '-0.984253582'), ('4.974848046', '4.028349215')),
    (0, -5, '0.25', ('2.364312495', '-0.984032549'), ('4.681673312', '4.029615355')),
    (1, -2, '0.10', ('4.307215786', '-0.992940748'), ('5.855244196', '4.012347926')),
    (1, -2, '0.15', ('3.494784849', '-0.992807827'), ('5.188936272', '4.012901328')),
    (1, -2, '0.20', ('3.001592356', '-0.992615929'), ('4.804784938', '4.013761503')),
    (1, -2, '0.25', ('2.661226629', '-0.992358819'), ('4.556938740', '4.015047441')),
    (1, -3, '0.10', ('4.595818435', '-0.988170213'), ('6.178579520', '4.020644486')),
    (1, -3, '0.15', ('3.680400729', '-0.988003000'), ('5.414210564', '4.021381830')),
    (1, -3, '0.20', ('3.132061101', '-0.987762645'), ('4.970596099', '4.022516492')),
    (1, -3, '0.25', ('2.758336616', '-0.987442474'), ('4.682895638', '4.024188218')),
    (1, -4, '0.10', ('4.953368438', '-0.982265799'), ('6.534179272', '4.030932630')),
    (1, -4, '0.15', ('3.924033854', '-0.982052870'), ('5.675017706', '4.031906704')),
    (1, -4, '0.20', ('3.308761019', '-0.981747682'), ('5.167809668', '4.033396291')),
    (1, -4, '0.25', ('2.892498344', '-0.981342717'), ('4.835280862', '4.035570778')),
    (1, -5, '0.10', ('5.338258842', '-0.975226530'), ('6.885351175', '4.043223541')),
    (1, -5, '0.15', ('4.201954406', '-0.974959459'), ('5.945777082', '4.044479104')),
    (1, -5, '0.20', ('3.517066442', '-0.974577405'), ('5.378157524', '4.046391514')),
    (1, -5, '0.25', ('3.054118376', '-0.974071753'), ('5.000762561', '4.049166887')),
]

# Non-relativistic energies, D = 10, mu = hbar = 1.
NONREL = [
    # (n, l, sigma0, {alpha: E})
    (0, 1, '0.10', {'0.10': '2.61886', '0.15': '3.90571', '0.20': '5.00379', '0.25': '5.88669'}),
    (0, 1, '0.15', {'0.10': '1.68039', '0.15': '2.57787', '0.20': '3.43316', '0.25': '4.20997'}),
    (0, 1, '0.20', {'0.10': '1.20888', '0.15': '1.86663', '0.20': '2.52048', '0.25': '3.14740'}),
    (1, 1, '0.10', {'0.10': '4.73552', '0.15': '6.04570', '0.20': '6.91711', '0.25': '7.48475'}),
    (1, 1, '0.15', {'0.10': '3.46026', '0.15': '4.62307', '0.20': '5.50067', '0.25': '6.15044'}),
    (1, 1, '0.20', {'0.10': '2.68320', '0.15': '3.67154', '0.20': '4.46564', '0.25': '5.09305'}),
    (0, 2, '0.10', {'0.10': '3.62734', '0.15': '5.29485', '0.20': '6.47635', '0.25': '7.25747'}),
    (0, 2, '0.15', {'0.10': '2.27011', '0.15': '3.56704', '0.20': '4.69665', '0.25': '5.59830'}),
    (0, 2, '0.20', {'0.10': '1.57908', '0.15': '2.54853', '0.20': '3.48262', '0.25': '4.31329'}),
    (2, 1, '0.10', {'0.10': '6.00299', '0.15': '7.11553', '0.20': '7.71951', '0.25': '8.02106'}),
    (2, 1, '0.15', {'0.10': '4.66770', '0.15': '5.80657', '0.20': '6.52463', '0.25': '6.95731'}),
    (2, 1, '0.20', {'0.10': '3.75704', '0.15': '4.81242', '0.20': '5.53159', '0.25': '6.00361'}),
    (1, 2, '0.10', {'0.10': '5.33164', '0.15': '6.73663', '0.20': '7.54623', '0.25': '7.97844'}),
    (1, 2, '0.15', {'0.10': '3.85813', '0.15': '5.19480', '0.20': '6.13553', '0.25': '6.75588'}),
    (1, 2, '0.20', {'0.10': '2.95293', '0.15': '4.10491', '0.20': '5.00322', '0.25': '5.66533'}),
    (0, 3, '0.10', {'0.10': '4.69036', '0.15': '6.43153', '0.20': '7.43683', '0.25': '7.97990'}),
    (0, 3, '0.15', {'0.10': '3.00341', '0.15': '4.60144', '0.20': '5.79817', '0.25': '6.60873'}),
    (0, 3, '0.20', {'0.10': '2.07413', '0.15': '3.35783', '0.20': '4.47694', '0.25': '5.35270'}),
]

# Pseudospin phase shifts, D = 10, sigma0 = alpha = 0.1, E = M = 1, C_ps = 0.05.
PSPIN_PHASES_CPS005 = {
    (0, -1): '-8.078248081182888', (0, 1): '-6.037944299866905',
    (0, -2): '-9.297898988297444', (0, 2): '-8.078248081182888',
    (0, -3): '-9.919223591558044', (0, 3): '-9.297898988297444',
    (0, -4): '-10.040884779950039', (0, 4): '-9.919223591558044',
    (0, -5): '-9.667030052888922', (0, 5): '-10.040884779950039',
    (1, -1): '-6.507451754387993', (1, 1): '-4.467147973072009',
    (1, -2): '-7.727102661502547', (1, 2): '-6.507451754387993',
    (1, -3): '-8.348427264763147', (1, 3): '-7.727102661502547',
    (1, -4): '-8.470088453155141', (1, 4): '-8.348427264763147',
    (1, -5): '-8.096233726094024', (1, 5): '-8.470088453155141',
    (2, -1): '-4.936655427593096', (2, 1): '-2.896351646277112',
    (2, -2): '-6.156306334707651', (2, 2): '-4.936655427593096',
    (2, -3): '-6.777630937968251', (2, 3): '-6.156306334707651',
    (2, -4): '-6.899292126360244', (2, 4): '-6.777630937968251',
    (2, -5): '-6.525437399299129', (2, 5): '-6.899292126360244',
    (3, -1): '-3.365859100798200', (3, 1): '-1.32555319482215',
    (3, -2): '-4.585510007912754', (3, 2): '-3.365859100798200',
    (3, -3): '-5.206834611173354', (3, 3): '-4.585510007912754',
    (3, -4): '-5.328495799565348', (3, 4): '-5.206834611173354',
    (3, -5): '-4.954641072504233', (3, 5): '-5.328495799565348',
}

# Spin phase shifts, D = 10, sigma0 = alpha = 0.5, E = M = 1; C_s = 5 and 10.
SPIN_PHASES = {
    5: {
        (0, -1): '-15.357449458632775', (0, 1): '-15.180768491483812',
        (0, -2): '-15.180768491483812', (0, 2): '-14.812590524986316',
        (0, -3): '-14.812590524986316', (0, 3): '-14.223834178887669',
        (0, -4): '-14.223834178887669', (0, 4): '-13.370909470812821',
        (0, -5): '-13.370909470812821', (0, 5): '-12.192227544491045',
        (1, -1): '-13.786653131837877', (1, 1): '-13.609972164688918',
        (1, -2): '-13.609972164688918', (1, 2): '-13.241794198191421',
        (1, -3): '-13.241794198191421', (1, 3): '-12.653037852092771',
        (1, -4): '-12.653037852092771', (1, 4): '-11.800113144017923',
        (1, -5): '-11.800113144017923', (1, 5): '-10.621431217696150',
        (2, -1): '-10.645060478248087', (2, 1): '-10.468379511099124',
        (2, -2): '-10.468379511099124', (2, 2): '-10.100201544601624',
        (2, -3): '-10.100201544601624', (2, 3): '-9.5114451985029810',
        (2, -4): '-9.5114451985029810', (2, 4): '-8.6585204904281290',
        (2, -5): '-8.6585204904281290', (2, 5): '-7.4798385641063540',
        (3, -1): '-10.645060478248087', (3, 1): '-10.468379511099124',
        (3, -2): '-10.468379511099124', (3, 2): '-10.100201544601624',
        (3, -3): '-10.100201544601624', (3, 3): '-9.5114451985029810',
        (3, -4): '-9.5114451985029810', (3, 4): '-8.6585204904281290',
        (3, -5): '-8.6585204904281290', (3, 5): '-7.4798385641063540',
    },
    10: {
        (0, -1): '-34.356717558868027', (0, 1): '-34.213439256222195',
        (0, -2): '-34.213439256222195', (0, 2): '-33.922995271131597',
        (0, -3): '-33.922995271131597', (0, 3): '-33.477658101510812',
        (0, -4): '-33.477658101510812', (0, 4): '-32.865901014031351',
        (0, -5): '-32.865901014031351', (0, 5): '-32.072333895105686',
        (1, -1): '-32.785921232073129', (1, 1): '-32.642642929427303',
        (1, -2): '-32.642642929427303', (1, 2): '-32.352198944336699',
        (1, -3): '-32.352198944336699', (1, 3): '-31.906861774715914',
        (1, -4): '-31.906861774715914', (1, 4): '-31.295104687236456',
        (1, -5): '-31.295104687236456', (1, 5): '-30.501537568310784',
        (2, -1): '-31.215124905278238', (2, 1): '-31.071846602632405',
        (2, -2): '-31.071846602632405', (2, 2): '-30.781402617541801',
        (2, -3): '-30.781402617541801', (2, 3): '-30.336065447921015',
        (2, -4): '-30.336065447921015', (2, 4): '-29.724308360441558',
        (2, -5): '-29.724308360441558', (2, 5): '-28.930741241515886',
        (3, -1): '-29.644328578483339', (3, 1): '-29.501050275837507',
        (3, -2): '-29.501050275837507', (3, 2): '-29.210606290746910',
        (3, -3): '-29.210606290746910', (3, 3): '-28.765269121126117',
        (3, -4): '-28.765269121126117', (3, 4): '-28.153512033646667',
        (3, -5): '-28.153512033646667', (3, 5): '-27.359944914720987',
    },
}


# ---------------------------------------------------------------------------
# Closed forms (mirror of the C++ evaluators, evaluated at 40 digits)
# ---------------------------------------------------------------------------

def lg_im(z):
    return mp.im(mp.loggamma(z))


def pspin_phase(l, kappa, Cps, D, sigma0, alpha, E=1, M=1):
    """Printed-form pseudospin phase shift; None when the channel is
    evanescent, 'complex' when the exponent radicand is negative."""
    beta = M - E + Cps
    gam = (M + E) * beta
    kk = kappa * (kappa - 1)
    k2 = beta * D * (1 - sigma0) ** 2 - gam - 4 * alpha**2 * kk * C0
    if k2 <= 0:
        return None
    rad = 1 + 4 * kk - 4 * beta * D * sigma0**2 / alpha**2
    if rad < 0:
        return 'complex'
    k = mp.sqrt(k2)
    lam = (1 + mp.sqrt(rad)) / 2
    S = mp.sqrt(mp.mpc(-beta * D * sigma0 / alpha**2 - k2 / (4 * alpha**2)))
    cma = lam + 1j * k / (2 * alpha) + S
    cmb = lam + 1j * k / (2 * alpha) - S
    return mp.pi / 2 * (l + 1) + lg_im(1j * k / alpha) - lg_im(cma) - lg_im(cmb)


def spin_phase(l, kappa, Cs, D, sigma0, alpha, E=1, M=1, indicial=False):
    beta = M + E - Cs
    gam = (M - E) * beta
    kk = kappa * (kappa + 1)
    k2 = -beta * D * (1 - sigma0) ** 2 - gam - 4 * alpha**2 * kk * C0
    if k2 <= 0:
        return None
    sgn = 1 if indicial else -1
    rad = 1 + 4 * kk + sgn * 4 * beta * D * sigma0**2 / alpha**2
    if rad < 0:
        return 'complex'
    k = mp.sqrt(k2)
    lam = (1 + mp.sqrt(rad)) / 2
    S = mp.sqrt(mp.mpc(beta * D * sigma0 / alpha**2 - k2 / (4 * alpha**2)))
    cma = lam + 1j * k / (2 * alpha) + S
    cmb = lam + 1j * k / (2 * alpha) - S
    return mp.pi / 2 * (l + 1) + lg_im(1j * k / alpha) - lg_im(cma) - lg_im(cmb)


def pspin_residual_factory(n, kappa, Cps, D, sigma0, alpha, M=1):
    kk = kappa * (kappa - 1)

    def f(E):
        beta = M - E + Cps
        gam = (M + E) * beta
        rad = 1 + 4 * kk - 4 * beta * D * sigma0**2 / alpha**2
        lam = (1 + mp.sqrt(rad)) / 2
        w = n + lam
        s = beta * D * sigma0 / alpha**2
        return (gam / (4 * alpha**2) - beta * D * (1 - sigma0) ** 2 / (4 * alpha**2)
                + kk * C0 - ((w * w + s) / (2 * w)) ** 2)
    return f


def spin_residual_factory(n, kappa, Cs, D, sigma0, alpha, M=1):
    kk = kappa * (kappa + 1)

    def f(E):
        beta = M + E - Cs
        gam = (M - E) * beta
        rad = 1 + 4 * kk + 4 * beta * D * sigma0**2 / alpha**2  # indicial form
        lam = (1 + mp.sqrt(rad)) / 2
        w = n + lam
        s = beta * D * sigma0 / alpha**2
        return (kk * C0 + gam / (4 * alpha**2) + beta * D * (1 - sigma0) ** 2 / (4 * alpha**2)
                - ((w * w - s) / (2 * w)) ** 2)
    return f


def nonrel_energy(n, l, sigma0, alpha, D=10, mu=1):
    ll = l * (l + 1)
    Lam = 1 + mp.sqrt(1 + 4 * ll + 8 * mu * D * sigma0**2 / alpha**2)
    w = Lam + 2 * n
    s = 8 * mu * D * sigma0 / alpha**2
    return (2 * alpha**2 * ll * C0 / mu + D * (1 - sigma0) ** 2
            - alpha**2 / (8 * mu) * ((w * w - s) / w) ** 2)


def hyp2f1_series(a, b, c, z, tol='1e-45', cap=400000):
    t = mp.mpc(1)
    s = mp.mpc(1)
    for n in range(cap):
        t = t * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        s += t
        if abs(t) < mp.mpf(tol) * abs(s):
            break
    return s


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def emit():
    L = []
    w = L.append
    w('// GENERATED by tools/gen_reference_data.py -- do not edit by hand.')
    w('//')
    w('// Frozen reference data for the regression, validation and acceptance')
    w('// suites: independently tabulated bound-state energies, phase shifts and')
    w('// non-relativistic energies for the hyperbolic potential')
    w('//   V(r) = D (1 - sigma0 coth(alpha r))^2,')
    w('// plus arbitrary-precision (40-digit) pins of the closed-form evaluators')
    w('// shipped in this library. The pins freeze the exact double values an')
    w('// exact evaluation rounds to; test tolerances account for the')
    w('// double-precision arithmetic of the implementation itself.')
    w('#pragma once')
    w('')
    w('namespace dhs::refdata {')
    w('')
    w('// ---- bound-state reference tables (alpha = 0.1, M = 1) ----')
    w('struct BoundRow {')
    w('  int n;')
    w('  int kappa;')
    w('  double sigma0;')
    w('  double root1;')
    w('  double root2;')
    w('};')
    w('')

    def bound_array(name, comment, rows, col):
        w(f'// {comment}')
        w(f'inline constexpr BoundRow {name}[] = {{')
        for (n, kap, s0, colA, colB) in rows:
            r1, r2 = colA if col == 0 else colB
            w(f'    {{{n}, {kap}, {s0}, {r1}, {r2}}},')
        w('};')
        w('')

    bound_array('kPspinBoundA', 'pseudospin, D = 5, C_ps = 0', PSPIN_BOUND, 0)
    bound_array('kPspinBoundB', 'pseudospin, D = 10, C_ps = -5', PSPIN_BOUND, 1)
    bound_array('kSpinBoundCs0', 'spin, D = 10, C_s = 0', SPIN_BOUND, 0)
    bound_array('kSpinBoundCs5', 'spin, D = 10, C_s = 5', SPIN_BOUND, 1)

    w('// ---- non-relativistic energies (D = 10, mu = hbar = 1) ----')
    w('struct NonrelRow {')
    w('  int n;')
    w('  int l;')
    w('  double sigma0;')
    w('  double alpha;')
    w('  double energy;  // tabulated to 5 decimals')
    w('};')
    w('')
    w('inline constexpr NonrelRow kNonrelEnergies[] = {')
    for (n, l, s0, cols) in NONREL:
        for sa, sE in cols.items():
            w(f'    {{{n}, {l}, {s0}, {sa}, {sE}}},')
    w('};')
    w('')

    w('// ---- phase-shift reference tables (E = M = 1, D = 10) ----')
    w('struct PhaseRow {')
    w('  int l;')
    w('  int kappa;')
    w('  double delta;')
    w('};')
    w('')
    w('// pseudospin, sigma0 = alpha = 0.1, C_ps = 0.05')
    w('inline constexpr PhaseRow kPspinPhasesCps005[] = {')
    for (l, kap), sval in sorted(PSPIN_PHASES_CPS005.items()):
        w(f'    {{{l}, {kap}, {sval}}},')
    w('};')
    w('')
    for Cs in (5, 10):
        w(f'// spin, sigma0 = alpha = 0.5, C_s = {Cs}')
        w(f'inline constexpr PhaseRow kSpinPhasesCs{Cs}[] = {{')
        for (l, kap), sval in sorted(SPIN_PHASES[Cs].items()):
            w(f'    {{{l}, {kap}, {sval}}},')
        w('};')
        w('')

    # ---- current-formula phase pins --------------------------------------
    w('// ---- phase pins: the shipped closed-form evaluators at 40-digit')
    w('// precision, rounded to double. These guard against numerical')
    w('// regressions. They intentionally differ from the tabulated phases')
    w('// above -- see README, "Known non-reproductions".')
    w('struct PhasePin {')
    w('  int l;')
    w('  int kappa;')
    w('  bool real_lambda;  // false: exponent radicand < 0, no real phase')
    w('  double delta;')
    w('};')
    w('')
    w('inline constexpr PhasePin kPinPspinCps005[] = {')
    for (l, kap) in sorted(PSPIN_PHASES_CPS005.keys()):
        v = pspin_phase(l, kap, mp.mpf('0.05'), 10, mp.mpf('0.1'), mp.mpf('0.1'))
        assert v is not None
        if v == 'complex':
            w(f'    {{{l}, {kap}, false, 0.0}},')
        else:
            w(f'    {{{l}, {kap}, true, {d(v)}}},')
    w('};')
    w('')
    for Cs in (5, 10):
        w(f'inline constexpr PhasePin kPinSpinCs{Cs}[] = {{')
        for (l, kap) in sorted(SPIN_PHASES[Cs].keys()):
            v = spin_phase(l, kap, Cs, 10, mp.mpf('0.5'), mp.mpf('0.5'))
            assert v not in (None, 'complex'), (Cs, l, kap)
            w(f'    {{{l}, {kap}, true, {d(v)}}},')
        w('};')
        w('')

    # ---- refined roots ----------------------------------------------------
    w('// ---- refined bound-state roots: the closed-form residual solved to')
    w('// 40 digits, rounded to double (tables print 9 decimals) ----')
    w('struct RefinedRoot {')
    w('  int table;  // 0: kPspinBoundA, 1: kPspinBoundB, 2: kSpinBoundCs0, 3: kSpinBoundCs5')
    w('  int n;')
    w('  int kappa;')
    w('  double sigma0;')
    w('  double energy;')
    w('};')
    w('')
    w('inline constexpr RefinedRoot kRefinedRoots[] = {')
    refine = [
        (0, 1, -1, '0.10', pspin_residual_factory(1, -1, mp.mpf(0), 5, mp.mpf('0.10'), mp.mpf('0.1')),
         ('2.279123264', '1.029346029')),
        (0, 2, -3, '0.20', pspin_residual_factory(2, -3, mp.mpf(0), 5, mp.mpf('0.20'), mp.mpf('0.1')),
         ('2.050146916', '1.133485527')),
        (1, 1, -2, '0.15', pspin_residual_factory(1, -2, mp.mpf(-5), 10, mp.mpf('0.15'), mp.mpf('0.1')),
         ('1.492968827', '-3.988960245')),
        (2, 0, -2, '0.10', spin_residual_factory(0, -2, mp.mpf(0), 10, mp.mpf('0.10'), mp.mpf('0.1')),
         ('2.852748850', '-0.997190645')),
        (3, 0, -2, '0.10', spin_residual_factory(0, -2, mp.mpf(5), 10, mp.mpf('0.10'), mp.mpf('0.1')),
         ('4.894455875', '4.004884016')),
        (3, 1, -4, '0.25', spin_residual_factory(1, -4, mp.mpf(5), 10, mp.mpf('0.25'), mp.mpf('0.1')),
         ('4.835280862', '4.035570778')),
    ]
    for (tab, n, kap, s0, f, starts) in refine:
        for s in starts:
            root = mp.findroot(f, mp.mpf(s))
            assert abs(root - mp.mpf(s)) < 1e-6, (tab, n, kap, s0, s, root)
            w(f'    {{{tab}, {n}, {kap}, {s0}, {d(root)}}},')
    w('};')
    w('')

    # ---- nonrel pins -------------------------------------------------------
    w('// ---- non-relativistic closed form pinned to full double precision ----')
    w('struct NonrelPin {')
    w('  int n;')
    w('  int l;')
    w('  double sigma0;')
    w('  double alpha;')
    w('  double energy;')
    w('};')
    w('')
    w('inline constexpr NonrelPin kNonrelPins[] = {')
    for (n, l, s0, sa) in [(0, 1, '0.10', '0.10'), (1, 2, '0.15', '0.20'),
                           (2, 1, '0.20', '0.25')]:
        v = nonrel_energy(n, l, mp.mpf(s0), mp.mpf(sa))
        w(f'    {{{n}, {l}, {s0}, {sa}, {d(v)}}},')
    w('};')
    w('')

    # ---- log-gamma battery --------------------------------------------------
    w('// ---- continuous-branch log-gamma battery (principal analytic')
    w('// continuation: imaginary part NOT reduced to (-pi, pi]) ----')
    w('struct LogGammaCase {')
    w('  double z_re;')
    w('  double z_im;')
    w('  double lg_re;')
    w('  double lg_im;')
    w('};')
    w('')
    w('inline constexpr LogGammaCase kLogGammaCases[] = {')
    zs = [(1.5, 0.0), (0.5, 0.0), (7.0, 0.0), (1.0, 1.0), (0.5, 14.0),
          (3.0, -5.0), (12.3, 45.6), (0.5, 1000.0), (-4.3, 2.1),
          (-0.5, -0.5), (-100.25, 0.5), (0.001, 0.001), (200.5, -300.75)]
    for (x, y) in zs:
        v = mp.loggamma(mp.mpc(x, y))
        w(f'    {{{d(x)}, {d(y)}, {d(mp.re(v))}, {d(mp.im(v))}}},')
    w('};')
    w('')

    # ---- 2F1 battery ---------------------------------------------------------
    w('// ---- Gauss 2F1 battery (complex parameters, real argument) ----')
    w('struct Hyp2f1Case {')
    w('  double a_re, a_im;')
    w('  double b_re, b_im;')
    w('  double c_re, c_im;')
    w('  double z;')
    w('  double v_re, v_im;')
    w('};')
    w('')
    # spin-anchor hypergeometric triple (see anchor constants below)
    k = mp.sqrt(mp.mpf('7.5'))
    S = mp.sqrt(mp.mpc(-3 * 10 * mp.mpf('0.5') / mp.mpf('0.25') - mp.mpf('7.5')))
    lam = mp.mpf(6)
    a_anchor = lam - 1j * k - S          # k/(2 alpha) = k at alpha = 0.5
    b_anchor = lam - 1j * k + S
    cases = [
        # degenerate c-a-b = 0: evaluated by brute-force direct series
        (mp.mpc('0.5', 2), mp.mpc('0.5', -2), mp.mpc(1), mp.mpf('0.9'),
         hyp2f1_series(mp.mpc('0.5', 2), mp.mpc('0.5', -2), mp.mpc(1), mp.mpf('0.9'))),
        (mp.mpc('0.5', 2), mp.mpc('0.5', -2), mp.mpc(1), mp.mpf('0.97'),
         hyp2f1_series(mp.mpc('0.5', 2), mp.mpc('0.5', -2), mp.mpc(1), mp.mpf('0.97'))),
        # degenerate c-a-b = 1 (integer): direct-series fallback region
        (mp.mpc('0.5', 1), mp.mpc('1.5', -1), mp.mpc(3), mp.mpf('0.6'),
         mp.hyp2f1(mp.mpc('0.5', 1), mp.mpc('1.5', -1), mp.mpc(3), mp.mpf('0.6'))),
        # non-degenerate overlap neighbour (c-a-b = 1.3)
        (mp.mpc('0.5', 1), mp.mpc('1.5', -1), mp.mpc('3.3'), mp.mpf('0.6'),
         mp.hyp2f1(mp.mpc('0.5', 1), mp.mpc('1.5', -1), mp.mpc('3.3'), mp.mpf('0.6'))),
        # scattering anchor triple, series side and connection side
        (a_anchor, b_anchor, mp.mpc(12), mp.mpf('0.3'),
         mp.hyp2f1(a_anchor, b_anchor, mp.mpc(12), mp.mpf('0.3'))),
        (a_anchor, b_anchor, mp.mpc(12), mp.mpf('0.95'),
         mp.hyp2f1(a_anchor, b_anchor, mp.mpc(12), mp.mpf('0.95'))),
    ]
    w('inline constexpr Hyp2f1Case kHyp2f1Cases[] = {')
    for (a, b, c, z, v) in cases:
        w(f'    {{{d(mp.re(a))}, {d(mp.im(a))}, {d(mp.re(b))}, {d(mp.im(b))}, '
          f'{d(mp.re(c))}, {d(mp.im(c))}, {d(z)}, {d(mp.re(v))}, {d(mp.im(v))}}},')
    w('};')
    w('')

    # ---- scattering anchor ----------------------------------------------------
    w('// ---- scattering anchor: spin limit, E = M = 1, C_s = 5, D = 10,')
    w('// sigma0 = alpha = 0.5, kappa = -1 (printed exponent lambda = 6) ----')
    cma = 2 * lam - a_anchor
    cmb = 2 * lam - b_anchor
    N = (abs(mp.gamma(cma)) * abs(mp.gamma(cmb))
         / (mp.sqrt(2 * lam) * abs(mp.gamma(2j * k))))  # i k / alpha = 2 i k
    env = 2 * mp.gamma(2 * lam) / mp.sqrt(2 * lam)
    env_direct = 2 * N * mp.gamma(2 * lam) * abs(mp.gamma(2j * k)) / (
        abs(mp.gamma(cma)) * abs(mp.gamma(cmb)))
    assert abs(env - env_direct) < mp.mpf('1e-25') * env
    w(f'inline constexpr double kAnchorKSquared = {d(mp.mpf("7.5"))};')
    w(f'inline constexpr double kAnchorK = {d(k)};')
    w(f'inline constexpr double kAnchorInnerRootIm = {d(mp.im(S))};')
    w(f'inline constexpr double kAnchorCmaRe = {d(mp.re(cma))};')
    w(f'inline constexpr double kAnchorCmaIm = {d(mp.im(cma))};')
    w(f'inline constexpr double kAnchorCmbRe = {d(mp.re(cmb))};')
    w(f'inline constexpr double kAnchorCmbIm = {d(mp.im(cmb))};')
    w(f'inline constexpr double kAnchorNormalization = {d(N)};')
    w(f'inline constexpr double kAnchorEnvelope = {d(env)};  // 2 Gamma(2 lambda) / sqrt(2 lambda)')
    w('')

    w('// lower-component wavefunction values N z^lambda e^{ikr} 2F1(a,b,c;z),')
    w('// z = 1 - exp(-2 alpha r), at the anchor parameters')
    w('struct WavefunctionCase {')
    w('  double r;')
    w('  double v_re, v_im;')
    w('};')
    w('')
    w('inline constexpr WavefunctionCase kAnchorWavefunction[] = {')
    for r in (mp.mpf('0.1'), mp.mpf(1), mp.mpf(5), mp.mpf(20)):
        z = 1 - mp.exp(-r)  # 2 alpha = 1
        F = mp.hyp2f1(a_anchor, b_anchor, mp.mpc(12), z)
        G = N * z**lam * mp.exp(1j * k * r) * F
        w(f'    {{{d(r)}, {d(mp.re(G))}, {d(mp.im(G))}}},')
    w('};')
    w('')

    # ---- model fixtures ---------------------------------------------------
    w('// ---- model-layer pins ----')
    k1sq = (mp.mpf('0.05') * 10 * mp.mpf('0.81') - mp.mpf('0.1')
            - 4 * mp.mpf('0.01') * 2 * C0)
    lam_ps = (1 + mp.sqrt(mp.mpf(7))) / 2
    w('// pseudospin E = M = 1, C_ps = 0.05, D = 10, sigma0 = alpha = 0.1, kappa = -1')
    w(f'inline constexpr double kPspinK1Squared = {d(k1sq)};')
    w(f'inline constexpr double kPspinLambda = {d(lam_ps)};')
    r5 = mp.mpf(5)
    al = mp.mpf('0.1')
    Vr5 = 10 * (1 - mp.mpf('0.1') / mp.tanh(al * r5)) ** 2
    x = mp.exp(-2 * al * r5)
    A5 = 4 * al**2 * (C0 + x / (1 - x) + (x / (1 - x)) ** 2)
    w('// potential and centrifugal surrogate at D = 10, sigma0 = 0.1, alpha = 0.1, r = 5')
    w(f'inline constexpr double kPotentialAtR5 = {d(Vr5)};')
    w(f'inline constexpr double kCentrifugalAtR5 = {d(A5)};')
    w('')

    # ---- oracle sample tables ------------------------------------------------
    w('// ---- Numerov oracle samples: tabulated roots confirmed as ODE')
    w('// eigenvalues. nodes = observed eigenfunction node count (for strongly')
    w('// energy-dependent channels it exceeds the closed-form index n; the')
    w('// gamma(E), beta(E) coefficients make the problem nonlinear in E, so')
    w("// Sturm's oscillation count does not track n there). ----")
    w('struct EigenSample {')
    w('  int limit;  // 0: pseudospin, 1: spin, 2: non-relativistic')
    w('  int n;')
    w('  int kappa_or_l;  // kappa for relativistic limits, l for non-relativistic')
    w('  double sigma0;')
    w('  double alpha;')
    w('  double D;')
    w('  double C;  // C_ps or C_s; unused for non-relativistic')
    w('  double energy;')
    w('  int nodes;')
    w('};')
    w('')
    w('inline constexpr EigenSample kEigenSamples[] = {')
    eig = [
        (0, 1, -1, '0.10', '0.1', 5, 0, '2.279123264', 1),
        (0, 1, -3, '0.15', '0.1', 5, 0, '2.214535196', 1),
        (0, 2, -2, '0.20', '0.1', 5, 0, '1.948130591', 2),
        (0, 1, -1, '0.10', '0.1', 10, -5, '2.123370278', 2),
        (0, 2, -4, '0.25', '0.1', 10, -5, '1.423425408', 6),
        (1, 0, -2, '0.10', '0.1', 10, 0, '2.852748850', 0),
        (1, 1, -5, '0.20', '0.1', 10, 0, '3.517066442', 4),
        (1, 0, -2, '0.10', '0.1', 10, 5, '4.894455875', 0),
        (1, 1, -3, '0.15', '0.1', 10, 5, '5.414210564', 1),
        (2, 0, 1, '0.10', '0.10', 10, 0, '2.61886', 0),
        (2, 1, 2, '0.15', '0.20', 10, 0, '6.13553', 1),
        (2, 2, 1, '0.20', '0.25', 10, 0, '6.00361', 2),
    ]
    for (lim, n, kl, s0, a0, D, C, E, nd) in eig:
        w(f'    {{{lim}, {n}, {kl}, {s0}, {a0}, {D}, {C}, {E}, {nd}}},')
    w('};')
    w('')

    w('// Numerov phase samples: channels with a regular (power-law) origin,')
    w('// compared mod pi against the closed-form shift. lambda_form 0 uses the')
    w('// printed exponent radicand, 1 the indicial (small-r series) radicand;')
    w('// the two coincide in the pseudospin limit.')
    w('struct PhaseSample {')
    w('  int limit;  // 0: pseudospin, 1: spin')
    w('  int kappa;')
    w('  double sigma0;')
    w('  double alpha;')
    w('  double D;')
    w('  double C;')
    w('  double E;')
    w('  int lambda_form;  // 0: printed, 1: indicial')
    w('  double closed_delta_l0;  // l = 0 closed-form shift, 40-digit pin')
    w('};')
    w('')
    w('inline constexpr PhaseSample kPhaseSamples[] = {')
    for kap in (-1, -2, -3, -4, -5):
        v = pspin_phase(0, kap, mp.mpf('0.05'), 10, mp.mpf('0.1'), mp.mpf('0.1'))
        w(f'    {{0, {kap}, 0.10, 0.1, 10, 0.05, 1, 0, {d(v)}}},')
    v = spin_phase(0, 5, 5, 10, mp.mpf('0.5'), mp.mpf('0.5'), indicial=True)
    w(f'    {{1, 5, 0.50, 0.5, 10, 5, 1, 1, {d(v)}}},')
    for kap in (-1, -2, -3, -4, -5, 5):
        v = spin_phase(0, kap, 5, 10, mp.mpf('0.5'), mp.mpf('0.5'), E=6, indicial=True)
        w(f'    {{1, {kap}, 0.50, 0.5, 10, 5, 6, 1, {d(v)}}},')
    w('};')
    w('')
    w('}  // namespace dhs::refdata')
    w('')

    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, 'w') as fh:
        fh.write('\n'.join(L))
    print(f'wrote {os.path.normpath(OUT)} ({len(L)} lines)')


if __name__ == '__main__':
    emit()
