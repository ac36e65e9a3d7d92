"""Turyn-type quadruples, their symmetry group, and canonical forms.

A TT(n) is a quadruple S = (A; B; C; D) of {+1,-1} sequences with
lengths (n, n, n, n-1) such that

    N_A(s) + N_B(s) + 2 N_C(s) + 2 N_D(s) = 0   for all s >= 1.

The lag-0 sum is automatic: n + n + 2n + 2(n-1) = 6n - 2.

Equivalence of quadruples is generated by four elementary moves:
negating or reversing any one sequence, alternating all four, and
swapping A with B.  These moves generate a group of order 1024 acting
on quadruples (for even n); its orbits are the equivalence classes.
Each class contains exactly one member in canonical form, a set of six
sign conditions pinning down signs, orientations and the A/B order.

Group elements are kept in the normal form

    n1^e1 r1^f1 n2^e2 r2^f2 n3^e3 r3^f3 n4^e4 r4^f4 sg^w al^t

where n_i negates sequence i, r_i reverses it, sg swaps A and B, and
al alternates all four sequences.  The n_i, r_i generate an elementary
abelian group of order 2^8.  The remaining relations: sg swaps the
(n1, r1) and (n2, r2) generator pairs and commutes with the rest;
al r_i al = r_i n_i for i = 1, 2, 3, and al commutes with r4, sg and
every n_i.  (Alternation commutes with negation as a sequence map,
which settles n4; it commutes with reversal exactly for odd lengths,
which settles r4 since D has odd length n-1.)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .seqs import BinarySeq, naf_all


@dataclass(frozen=True)
class TurynQuad:
    """Quadruple (A; B; C; D) of binary sequences, lengths (n, n, n, n-1)."""

    a: BinarySeq
    b: BinarySeq
    c: BinarySeq
    d: BinarySeq

    def __post_init__(self):
        n = len(self.a)
        if n < 2:
            raise ValueError("quadruple needs n >= 2")
        if len(self.b) != n or len(self.c) != n or len(self.d) != n - 1:
            raise ValueError(
                f"bad shape: lengths {(len(self.a), len(self.b), len(self.c), len(self.d))}, "
                f"expected {(n, n, n, n - 1)}"
            )

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_pm(cls, a: str, b: str, c: str, d: str) -> "TurynQuad":
        return cls(
            BinarySeq.from_pm(a), BinarySeq.from_pm(b), BinarySeq.from_pm(c), BinarySeq.from_pm(d)
        )

    def row_sums(self) -> tuple[int, int, int, int]:
        return (
            sum(self.a.entries),
            sum(self.b.entries),
            sum(self.c.entries),
            sum(self.d.entries),
        )

    def __str__(self) -> str:
        return f"({self.a}; {self.b}; {self.c}; {self.d})"


def verify_tt(s: TurynQuad) -> bool:
    """True iff the combined weighted NAF vanishes at every positive lag."""
    n = s.n
    na, nb, nc, nd = naf_all(s.a), naf_all(s.b), naf_all(s.c), naf_all(s.d)
    for i in range(1, n):
        di = nd[i] if i < n - 1 else 0
        if na[i] + nb[i] + 2 * nc[i] + 2 * di != 0:
            return False
    return True


# --- the symmetry group -------------------------------------------------

# Bit layout of the normal form: (e1, f1, e2, f2, e3, f3, e4, f4, w, t).
_NBITS = 10


@dataclass(frozen=True)
class GroupElement:
    """Symmetry-group element in 10-bit normal form."""

    bits: tuple[int, int, int, int, int, int, int, int, int, int]

    def __post_init__(self):
        bits = tuple(int(v) for v in self.bits)
        if len(bits) != _NBITS or any(v not in (0, 1) for v in bits):
            raise ValueError("group element needs 10 bits in {0,1}")
        object.__setattr__(self, "bits", bits)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return g_mul(self, other)


IDENTITY = GroupElement((0,) * _NBITS)


def _gen(i: int) -> GroupElement:
    bits = [0] * _NBITS
    bits[i] = 1
    return GroupElement(tuple(bits))


# The ten involutory generators, in normal-form bit order.
NEGATE_A, REVERSE_A = _gen(0), _gen(1)
NEGATE_B, REVERSE_B = _gen(2), _gen(3)
NEGATE_C, REVERSE_C = _gen(4), _gen(5)
NEGATE_D, REVERSE_D = _gen(6), _gen(7)
SWAP_AB = _gen(8)
ALTERNATE = _gen(9)

GENERATORS = (
    NEGATE_A,
    REVERSE_A,
    NEGATE_B,
    REVERSE_B,
    NEGATE_C,
    REVERSE_C,
    NEGATE_D,
    REVERSE_D,
    SWAP_AB,
    ALTERNATE,
)


def g_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """Normal-form product g*h.

    Push h's negate/reverse part left through g's trailing sg^w al^t:
    conjugation by al maps r_i -> r_i n_i (i = 1, 2, 3), so e_i picks up
    f_i; conjugation by sg swaps the (e1, f1) and (e2, f2) pairs.
    """
    eg = g.bits[:8]
    wg, tg = g.bits[8], g.bits[9]
    eh = list(h.bits[:8])
    wh, th = h.bits[8], h.bits[9]
    if tg:
        for i in (0, 2, 4):
            eh[i] ^= eh[i + 1]
    if wg:
        eh[0], eh[1], eh[2], eh[3] = eh[2], eh[3], eh[0], eh[1]
    bits = tuple(eg[i] ^ eh[i] for i in range(8)) + (wg ^ wh, tg ^ th)
    return GroupElement(bits)


def g_apply(g: GroupElement, s: TurynQuad) -> TurynQuad:
    """Act on a quadruple; defined only for even n.

    The normal form is applied right to left: alternate, then swap,
    then the per-sequence negations and reversals.
    """
    if s.n % 2:
        raise ValueError(f"group action needs even n, got {s.n}")
    e1, f1, e2, f2, e3, f3, e4, f4, w, t = g.bits
    a, b, c, d = s.a, s.b, s.c, s.d
    if t:
        a, b, c, d = a.alternate(), b.alternate(), c.alternate(), d.alternate()
    if w:
        a, b = b, a
    if f1:
        a = a.reverse()
    if e1:
        a = a.negate()
    if f2:
        b = b.reverse()
    if e2:
        b = b.negate()
    if f3:
        c = c.reverse()
    if e3:
        c = c.negate()
    if f4:
        d = d.reverse()
    if e4:
        d = d.negate()
    return TurynQuad(a, b, c, d)


def all_elements():
    """Iterate all 1024 group elements."""
    for bits in product((0, 1), repeat=_NBITS):
        yield GroupElement(bits)


def _generator_images(s: TurynQuad) -> list[TurynQuad]:
    """Images of s under the ten generators, built directly."""
    a, b, c, d = s.a, s.b, s.c, s.d
    return [
        TurynQuad(a.negate(), b, c, d),
        TurynQuad(a.reverse(), b, c, d),
        TurynQuad(a, b.negate(), c, d),
        TurynQuad(a, b.reverse(), c, d),
        TurynQuad(a, b, c.negate(), d),
        TurynQuad(a, b, c.reverse(), d),
        TurynQuad(a, b, c, d.negate()),
        TurynQuad(a, b, c, d.reverse()),
        TurynQuad(b, a, c, d),
        TurynQuad(a.alternate(), b.alternate(), c.alternate(), d.alternate()),
    ]


def orbit(s: TurynQuad) -> set[TurynQuad]:
    """Closure of {s} under the ten generators; the equivalence class of s."""
    if not verify_tt(s):
        raise ValueError("orbit needs a valid quadruple")
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for q in frontier:
            for img in _generator_images(q):
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


# --- canonical form ------------------------------------------------------


def is_canonical(s: TurynQuad) -> bool:
    """The six canonical sign conditions.

    (i)   a_1 = a_n = b_1 = b_n = c_1 = d_1 = +1;
    (ii)  at the least i with a_i != a_{n+1-i}: a_i = +1;
    (iii) the same for B;
    (iv)  at the least i with c_i = c_{n+1-i}: c_i = +1;
    (v)   at the least i with d_i d_{n-i} != d_{n-1}: d_i = +1;
    (vi)  for n > 2: if a_2 != b_2 then a_2 = +1, and if a_2 = b_2
          then a_{n-1} = +1 and b_{n-1} = -1.

    Each "least index" clause is vacuous when no such index exists.
    """
    a, b, c, d = s.a.entries, s.b.entries, s.c.entries, s.d.entries
    n = s.n
    if not (a[0] == 1 and a[n - 1] == 1 and b[0] == 1 and b[n - 1] == 1 and c[0] == 1 and d[0] == 1):
        return False
    for x in (a, b):
        for i in range(n):
            if x[i] != x[n - 1 - i]:
                if x[i] != 1:
                    return False
                break
    for i in range(n):
        if c[i] == c[n - 1 - i]:
            if c[i] != 1:
                return False
            break
    eps = d[n - 2]
    for i in range(1, n):  # 1-based scan over positions of D
        if d[i - 1] * d[n - 1 - i] != eps:
            if d[i - 1] != 1:
                return False
            break
    if n > 2:
        if a[1] != b[1]:
            if a[1] != 1:
                return False
        elif not (a[n - 2] == 1 and b[n - 2] == -1):
            return False
    return True


def canonicalize(s: TurynQuad) -> TurynQuad:
    """The unique canonical member of the orbit of s.

    A full orbit scan; uniqueness of the canonical member is relied on
    and double-checked, so a zero or double hit raises instead of being
    silently resolved.
    """
    if not verify_tt(s):
        raise ValueError("canonicalize needs a valid quadruple")
    hits = [q for q in orbit(s) if is_canonical(q)]
    if len(hits) != 1:
        raise RuntimeError(
            f"orbit of {s} contains {len(hits)} canonical members; expected exactly 1"
        )
    return hits[0]


def equivalent(s1: TurynQuad, s2: TurynQuad) -> bool:
    """True iff the two quadruples lie in the same equivalence class."""
    if s1.n != s2.n:
        raise ValueError(f"cannot compare quadruples with n={s1.n} and n={s2.n}")
    return canonicalize(s1) == canonicalize(s2)


def phi(s: TurynQuad) -> int:
    """The endpoint product a_1 * a_n.

    Alternation flips it (n is even); every other generator preserves
    it, since the lag n-1 identity forces a_1 a_n = b_1 b_n.
    """
    return s.a.entries[0] * s.a.entries[-1]
