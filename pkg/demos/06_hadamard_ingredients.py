"""
From a quadruple to Hadamard-matrix ingredients
===============================================

Turyn-type sequences matter beyond their own combinatorics: each TT(n)
yields base sequences, and base sequences yield T-sequences, the
classical raw material for Hadamard matrices via the Goethals-Seidel
array (that last assembly step is outside this package's scope).
"""

from turynseq import (
    TurynQuad,
    base_to_t,
    decode,
    naf_all,
    tt_to_base,
    verify_base,
    verify_t,
    verify_tt,
)

# Start tiny so every number is checkable by eye: the unique TT(2).
quad = TurynQuad.from_pm("++", "++", "+-", "+")
assert verify_tt(quad)
print("TT(2):", quad)

# Base sequences (P, Q; R, S): P = C followed by D, Q = C followed by
# -D, R = A, S = B.  Lengths (2n-1, 2n-1, n, n) = (3, 3, 2, 2) here.
bs = tt_to_base(quad)
print("\nbase sequences, lengths", bs.lengths)
for name, row in zip("PQRS", (bs.p, bs.q, bs.r, bs.s)):
    print(f"  {name} = {row}   NAF {naf_all(row)}")

# Their defining property: the four NAFs cancel at every positive lag.
#   lag 1: -2 + 0 + 1 + 1 = 0      lag 2: 1 - 1 + 0 + 0 = 0
assert verify_base(bs)
print("combined NAF vanishes at positive lags:", verify_base(bs))

# T-sequences: half-sums and half-differences, zero-padded so supports
# cannot overlap.  Length is (2n-1) + n = 3n-1 = 5 here.
ts = base_to_t(bs)
print("\nT-sequences, length", len(ts))
for name, row in zip(("T1", "T2", "T3", "T4"), ts.rows):
    print(f"  {name} = {row}")

# Exactly one of the four is nonzero at each position; an all-zero row
# (T4 here, since R = S) is fine as long as the others cover the rest.
assert verify_t(ts)
print("exactly one nonzero per position:", verify_t(ts))

# The same chain at full scale: TT(38) gives T-sequences of length 113.
quad38 = decode("05128f55401f041adf7f65c53567822c9cb9c", 38)
bs38 = tt_to_base(quad38)
ts38 = base_to_t(bs38)
print("\nTT(38) -> base lengths", bs38.lengths, "-> T-sequence length", len(ts38))
assert verify_base(bs38) and verify_t(ts38)
print("every stage verifies")
