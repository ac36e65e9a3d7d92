"""
Nonperiodic autocorrelation basics
==================================

The building block behind everything in this package: the nonperiodic
autocorrelation function (NAF) of a +-1 sequence, and the quadruple
condition that defines a Turyn-type sequence TT(n).
"""

import numpy as np

from turynseq import BinarySeq, TurynQuad, naf_all, spectrum_value, verify_tt

# A +-1 sequence is written as a string of + and - signs.
a = BinarySeq.from_pm("+++-")
print("sequence A:", a)
print("entries:  ", a.entries)

# The NAF at lag s sums products of entries s apart:
#   N_A(s) = sum_j a_j * a_{j+s}
# Lag 0 is just the length; the top lag is a single product.
print("NAF of A: ", naf_all(a))

# Two invariants visible already at this size: |N(s)| <= n - s, and
# N(s) has the same parity as n - s.
n = len(a)
for s, value in enumerate(naf_all(a)):
    assert abs(value) <= n - s
    assert (value - (n - s)) % 2 == 0
print("magnitude and parity invariants hold for all lags")

# A Turyn-type quadruple (A; B; C; D) has lengths (n, n, n, n-1) and its
# weighted NAFs cancel at every positive lag:
#   N_A(s) + N_B(s) + 2 N_C(s) + 2 N_D(s) = 0    for 1 <= s <= n-1.
quad = TurynQuad.from_pm("++++", "++-+", "++--", "+-+")
print("\nquadruple:", quad)
for s in range(1, 4):
    rows = (quad.a, quad.b, quad.c, quad.d)
    parts = [naf_all(seq)[s] if s < len(seq) else 0 for seq in rows]
    total = parts[0] + parts[1] + 2 * parts[2] + 2 * parts[3]
    print(f"lag {s}: {parts[0]:+d} {parts[1]:+d} 2*{parts[2]:+d} 2*{parts[3]:+d} -> {total}")
print("verify_tt:", verify_tt(quad))

# At lag 0 the weighted sum is forced: n + n + 2n + 2(n-1) = 6n - 2.
parts0 = [naf_all(seq)[0] for seq in (quad.a, quad.b, quad.c, quad.d)]
print("lag 0 weighted sum:", parts0[0] + parts0[1] + 2 * parts0[2] + 2 * parts0[3], "= 6n-2 =", 6 * len(quad.a) - 2)

# The spectrum f(theta) = N(0) + 2 sum_s N(s) cos(s theta) equals the
# squared magnitude of the polynomial A(z) on the unit circle, so it is
# never negative; cross-check against a direct complex evaluation.
rng = np.random.default_rng(7)
for theta in rng.uniform(0.0, np.pi, size=5):
    direct = abs(sum(v * np.exp(1j * j * theta) for j, v in enumerate(a.entries))) ** 2
    via_naf = spectrum_value(a, theta)
    print(f"theta={theta:.3f}  |A(e^it)|^2={direct:.6f}  spectrum_value={via_naf:.6f}")
    assert abs(direct - via_naf) < 1e-9
