"""Exhaustive enumeration of equivalence classes and small-n cross-checks.

`enumerate_canonical` walks the pairwise two-ended search with canonical
pruning switched on, so it visits exactly one member of every
equivalence class and returns the sorted compact codes.  `brute_force_classes`
recomputes the same classes for tiny n by raw constraint filtering over
all 2^(4n-1) quadruples (meet-in-the-middle over the defining identity),
entirely independent of the search engine, the group-action code path
being the only shared ingredient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import NamedTuple

import numpy as np

from .codec import decode, encode, write_listing
from .core import TurynQuad, g_apply, is_canonical, orbit, verify_tt, ALTERNATE
from .engine import PairDfs, full_plan
from .seqs import BinarySeq


class FeasibilityError(ValueError):
    """Raised when an exhaustive run would exceed the configured size cap."""


class Decomposition(NamedTuple):
    """Solution of a^2 + b^2 + 2 c^2 + 2 d^2 = 6n - 2 with a >= b >= 0, c, d >= 0."""

    a: int
    b: int
    c: int
    d: int


def decompositions(n: int) -> list[Decomposition]:
    """All row-sum decompositions for length n, sorted lexicographically.

    Row sums of a valid quadruple satisfy
    r_A^2 + r_B^2 + 2 r_C^2 + 2 r_D^2 = 6n - 2 with r_A, r_B, r_C = n (mod 2)
    and r_D = n - 1 (mod 2); entries are listed as (a, b, c, d) with
    a >= b >= 0 and c, d >= 0.
    """
    if n < 2 or n % 2:
        raise ValueError(f"decompositions need even n >= 2, got {n}")
    target = 6 * n - 2
    out = []
    for a in range(n % 2, math.isqrt(target) + 1, 2):
        for b in range(n % 2, a + 1, 2):
            rest = target - a * a - b * b
            if rest < 0:
                break
            for c in range(n % 2, math.isqrt(rest // 2) + 1, 2):
                rest2 = rest - 2 * c * c
                if rest2 < 0:
                    break
                d, r = divmod(rest2, 2)
                ds = math.isqrt(d)
                if r == 0 and ds * ds == d and ds % 2 == (n - 1) % 2:
                    out.append(Decomposition(a, b, c, ds))
    out.sort()
    return out


@dataclass(frozen=True)
class ClassListing:
    """Sorted compact codes of the canonical representatives for one length."""

    n: int
    codes: tuple[str, ...]

    def __post_init__(self):
        for prev, cur in itertools.pairwise(self.codes):
            if prev >= cur:
                raise ValueError(f"codes out of order: {prev!r} >= {cur!r}")

    def __len__(self):
        return len(self.codes)

    def to_text(self) -> str:
        return write_listing(
            list(enumerate(self.codes, start=1)), header=f"n={self.n}"
        )


def _quad_from_rows(rows) -> TurynQuad:
    a, b, c, d = rows
    return TurynQuad(BinarySeq(a), BinarySeq(b), BinarySeq(c), BinarySeq(d))


def _checked_code(rows) -> str:
    quad = _quad_from_rows(rows)
    if not verify_tt(quad):
        raise RuntimeError(f"search walk produced an invalid quadruple: {quad}")
    if not is_canonical(quad):
        raise RuntimeError(f"search walk produced a non-canonical quadruple: {quad}")
    return encode(quad, form="compact")


def _enumerate_worker(args):
    n, paths = args
    codes = []
    for path in paths:
        eng = PairDfs(n, full_plan(n), canonical=True)
        for _ in eng.walk(path):
            codes.append(_checked_code(eng.snapshot()))
    return codes


def _runtime_estimate(n: int) -> str:
    # Leaf counts grow roughly 8x per length step; n = 14 takes about a minute.
    hours = (1.0 / 60.0) * 8.0 ** ((n - 14) / 2)
    if hours < 48:
        return f"roughly {hours:.0f} hours"
    return f"roughly {hours / 24:.0f} days"


def enumerate_canonical(
    n: int, jobs: int = 1, cap: int = 20, split_steps: int = 2
) -> ClassListing:
    """All canonical representatives of length n as a sorted listing.

    Refuses n beyond `cap` (the walk grows ~8x per length step); raise the
    cap explicitly to run longer jobs.  `jobs` > 1 splits the walk at depth
    `split_steps` steps into independent subtrees run across processes;
    the result is independent of the split.
    """
    if n < 2 or n % 2:
        raise ValueError(f"enumeration needs even n >= 2, got {n}")
    if n > cap:
        raise FeasibilityError(
            f"full enumeration at n={n} exceeds the cap ({cap}); "
            f"estimated runtime {_runtime_estimate(n)}. "
            "Pass a larger cap to run it anyway."
        )
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1:
        eng = PairDfs(n, full_plan(n), canonical=True)
        codes = [_checked_code(eng.snapshot()) for _ in eng.walk()]
    else:
        splitter = PairDfs(n, full_plan(n), canonical=True)
        paths = list(splitter.prefix_paths(4 * split_steps))
        batches = [(n, paths[i::jobs]) for i in range(jobs)]
        with Pool(jobs) as pool:
            parts = pool.map(_enumerate_worker, batches)
        codes = [code for part in parts for code in part]
    codes.sort()
    for prev, cur in itertools.pairwise(codes):
        if prev == cur:
            raise RuntimeError(f"duplicate canonical representative {cur!r}")
    return ClassListing(n, tuple(codes))


def _pm_rows(length: int) -> np.ndarray:
    """All 2^length rows over {-1, +1} as an int8 matrix, index = bit pattern."""
    ints = np.arange(1 << length, dtype=np.uint32)
    bits = (ints[:, None] >> np.arange(length, dtype=np.uint32)) & 1
    return (1 - 2 * bits).astype(np.int8)


def _profiles(rows: np.ndarray) -> np.ndarray:
    """Aperiodic autocorrelations at lags 1..L-1 for every row."""
    count, length = rows.shape
    out = np.zeros((count, length - 1), dtype=np.int16)
    for s in range(1, length):
        out[:, s - 1] = np.sum(
            rows[:, : length - s].astype(np.int16) * rows[:, s:], axis=1
        )
    return out


def brute_force_classes(n: int, limit: int = 8) -> tuple[int, ClassListing]:
    """Classes of length n by raw filtering over all 2^(4n-1) quadruples.

    Completely independent of the pairwise walk: enumerate every (C, D)
    profile, index by the required A/B profile sum, and scan all (A, B)
    pairs.  Valid quadruples are then partitioned into orbits under the
    full transformation group.  Only practical for n <= 8.
    """
    if n < 2:
        raise ValueError(f"brute force needs n >= 2, got {n}")
    if n > limit:
        raise ValueError(f"brute force over 2^{4 * n - 1} quadruples refused (n > {limit})")
    rows_n = _pm_rows(n)
    rows_d = _pm_rows(n - 1)
    prof_n = _profiles(rows_n)
    prof_d = _profiles(rows_d)
    # Lags 1..n-1; D contributes nothing at lag n-1.
    prof_d_full = np.zeros((rows_d.shape[0], n - 1), dtype=np.int16)
    prof_d_full[:, : n - 2] = prof_d
    cd_index: dict[bytes, list[tuple[int, int]]] = {}
    for ic in range(rows_n.shape[0]):
        needs = -2 * (prof_n[ic][None, :] + prof_d_full)
        for idx in range(rows_d.shape[0]):
            cd_index.setdefault(needs[idx].tobytes(), []).append((ic, idx))
    quads = []
    for ia in range(rows_n.shape[0]):
        have = prof_n[ia][None, :] + prof_n
        for ib in range(rows_n.shape[0]):
            for ic, idx in cd_index.get(have[ib].tobytes(), ()):
                quads.append(
                    TurynQuad(
                        BinarySeq(rows_n[ia]),
                        BinarySeq(rows_n[ib]),
                        BinarySeq(rows_n[ic]),
                        BinarySeq(rows_d[idx]),
                    )
                )
    for quad in quads:
        if not verify_tt(quad):
            raise RuntimeError(f"profile index produced an invalid quadruple: {quad}")
    if n % 2:
        if quads:
            raise RuntimeError(f"odd n={n} unexpectedly admits valid quadruples")
        return 0, ClassListing(n, ())
    seen: set[TurynQuad] = set()
    codes = []
    for quad in quads:
        if quad in seen:
            continue
        orb = orbit(quad)
        seen.update(orb)
        canon = [member for member in orb if is_canonical(member)]
        if len(canon) != 1:
            raise RuntimeError(f"orbit of {quad} has {len(canon)} canonical members")
        codes.append(encode(canon[0], form="compact"))
    codes.sort()
    return len(codes), ClassListing(n, tuple(codes))


def _sum_profile(quad: TurynQuad) -> Decomposition:
    ra, rb, rc, rd = (abs(r) for r in quad.row_sums())
    return Decomposition(max(ra, rb), min(ra, rb), rc, rd)


def class_sum_profiles(quad: TurynQuad, full_orbit: bool = False) -> set[Decomposition]:
    """Row-sum decompositions realized across a quadruple's class.

    Negation and swap only permute/negate the row sums, and reversal fixes
    them, so up to absolute values the class realizes exactly the profiles
    of the quadruple and of its image under the alternation generator.
    Set `full_orbit` to recompute this the slow way over the whole orbit.
    """
    if full_orbit:
        return {_sum_profile(member) for member in orbit(quad)}
    return {_sum_profile(quad), _sum_profile(g_apply(ALTERNATE, quad))}


def realizability_report(
    n: int, listing: ClassListing | None = None, jobs: int = 1, cap: int = 20
) -> dict[Decomposition, bool]:
    """Which row-sum decompositions are realized by actual classes at length n."""
    if listing is None:
        listing = enumerate_canonical(n, jobs=jobs, cap=cap)
    realized: set[Decomposition] = set()
    for code in listing.codes:
        realized.update(class_sum_profiles(decode(code, n)))
    report = {dec: dec in realized for dec in decompositions(n)}
    extra = realized.difference(report)
    if extra:
        raise RuntimeError(f"realized profiles {extra} are not valid decompositions")
    return report


def max_initial_zeros(listing: ClassListing) -> int:
    """Largest run of leading zero digits over the listing's compact codes."""
    best = 0
    for code in listing.codes:
        run = len(code) - len(code.lstrip("0"))
        best = max(best, run)
    return best
