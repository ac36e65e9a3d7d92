"""
The symmetry group and canonical forms
======================================

Negating or reversing any one sequence, swapping A with B, or
alternating the signs of all four at once maps one valid quadruple to
another.  These moves generate a group of order 1024; its orbits are
the natural equivalence classes, and each orbit contains exactly one
member in canonical form.
"""

import random

from turynseq import (
    all_elements,
    canonicalize,
    decode,
    encode,
    g_apply,
    g_mul,
    is_canonical,
    orbit,
    verify_tt,
)

# The group itself: 10 generator bits, 1024 elements in normal form.
elements = list(all_elements())
print("group order:", len(elements))

# The group law is not plain XOR: swapping A/B conjugates the A-bits
# with the B-bits, and alternation twists reversals.  Composition is
# still closed, as a spot check shows.
rng = random.Random(3)
g, h = rng.choice(elements), rng.choice(elements)
print("g       =", g.bits)
print("h       =", h.bits)
print("g * h   =", g_mul(g, h).bits)

# Start from a canonical representative at n=6 and walk its orbit.
rep = decode("006d6", 6)
print("\nrepresentative:", rep)
members = orbit(rep)
print("orbit size:", len(members))

# Every member is still a valid quadruple; exactly one is canonical.
assert all(verify_tt(m) for m in members)
canonical_members = [m for m in members if is_canonical(m)]
print("canonical members in the orbit:", len(canonical_members))
assert canonical_members == [rep]

# canonicalize() brings any member back to that unique representative.
scrambled = g_apply(rng.choice(elements), rep)
print("\nscrambled: ", scrambled)
print("restored:  ", canonicalize(scrambled))
assert canonicalize(scrambled) == rep
print("compact code either way:", encode(canonicalize(scrambled), form="compact"))

# Orbit sizes divide 1024 but can be smaller, because some
# transformations fix the quadruple (a palindromic row, for instance,
# is unchanged by its reversal).
sizes = {code: len(orbit(decode(code, 6))) for code in ("006d6", "01396", "045ec", "0608d")}
print("\norbit sizes at n=6:", sizes)
