"""Sequences over {+1,-1} and {0,+1,-1} with nonperiodic autocorrelation.

The nonperiodic autocorrelation function (NAF) of a finite sequence
A = a_1, ..., a_m is

    N_A(i) = sum_j a_j * a_{i+j},

where entries outside 1..m count as zero.  Only the lags 0..m-1 are
stored: N_A(-i) = N_A(i), and N_A(i) = 0 for i >= m, are implied and
never materialized.

Three elementary transforms act on binary sequences: negation -A,
reversal A', and alternation A* (the sign of every second entry is
flipped).  Negation and reversal preserve the NAF; alternation flips
the sign of every odd lag:

    N_{-A} = N_{A'} = N_A,        N_{A*}(i) = (-1)^i N_A(i).

The spectral value

    f_A(theta) = N_A(0) + 2 sum_{j>=1} N_A(j) cos(j*theta)

equals |A(e^{i*theta})|^2 where A(x) = sum_k a_k x^{k-1}, so it is
nonnegative up to floating rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_PM_CHARS = {"+": 1, "-": -1, "0": 0}


@dataclass(frozen=True)
class BinarySeq:
    """Immutable sequence with entries in {+1, -1}, length >= 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if len(entries) < 1:
            raise ValueError("binary sequence needs at least one entry")
        for v in entries:
            if v != 1 and v != -1:
                raise ValueError(f"binary sequence entries must be +1 or -1, got {v}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pm(cls, text: str) -> "BinarySeq":
        """Parse a '+'/'-' display string, e.g. '++-+'."""
        return cls(tuple(_parse_pm(text, allow_zero=False)))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "".join("+" if v > 0 else "-" for v in self.entries)

    def negate(self) -> "BinarySeq":
        return BinarySeq(tuple(-v for v in self.entries))

    def reverse(self) -> "BinarySeq":
        return BinarySeq(self.entries[::-1])

    def alternate(self) -> "BinarySeq":
        # a_1, -a_2, a_3, -a_4, ...: odd positions (1-based) keep their sign.
        return BinarySeq(tuple(v if i % 2 == 0 else -v for i, v in enumerate(self.entries)))


@dataclass(frozen=True)
class TernarySeq:
    """Immutable sequence with entries in {0, +1, -1}; may be empty."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        for v in entries:
            if v != 0 and v != 1 and v != -1:
                raise ValueError(f"ternary sequence entries must be 0, +1 or -1, got {v}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pm(cls, text: str) -> "TernarySeq":
        """Parse a '+'/'-'/'0' display string, e.g. '+0-'."""
        return cls(tuple(_parse_pm(text, allow_zero=True)))

    @classmethod
    def zeros(cls, m: int) -> "TernarySeq":
        return cls((0,) * m)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.entries)


def _parse_pm(text: str, allow_zero: bool) -> list[int]:
    values = []
    for pos, ch in enumerate(text, start=1):
        if ch not in _PM_CHARS or (ch == "0" and not allow_zero):
            raise ValueError(f"bad sequence character {ch!r} at position {pos}")
        values.append(_PM_CHARS[ch])
    return values


Seq = BinarySeq | TernarySeq


def naf_all(seq: Seq) -> tuple[int, ...]:
    """All stored NAF values N(0), N(1), ..., N(m-1) of a length-m sequence."""
    e = seq.entries
    m = len(e)
    if m < 1:
        raise ValueError("NAF needs a nonempty sequence")
    return tuple(sum(e[j] * e[j + i] for j in range(m - i)) for i in range(m))


def transform(seq: BinarySeq, kind: str) -> BinarySeq:
    """Apply one elementary transform: 'negate', 'reverse' or 'alternate'."""
    if kind == "negate":
        return seq.negate()
    if kind == "reverse":
        return seq.reverse()
    if kind == "alternate":
        return seq.alternate()
    raise ValueError(f"unknown transform kind {kind!r}")


def row_sum(seq: Seq) -> int:
    """Sum of the entries; this is the value A(1) of the generating polynomial."""
    return sum(seq.entries)


def spectrum_value(seq: Seq, theta: float) -> float:
    """Evaluate f(theta) = N(0) + 2 sum_{j>=1} N(j) cos(j*theta).

    Plain double-precision accumulation of the cosine sum; equals
    |A(e^{i*theta})|^2 up to rounding, hence nonnegative.
    """
    prof = naf_all(seq)
    acc = float(prof[0])
    for j in range(1, len(prof)):
        acc += 2.0 * prof[j] * math.cos(j * theta)
    return acc


def half_combine(a: BinarySeq, b: BinarySeq, sign: int) -> TernarySeq:
    """Entrywise (a_i + sign*b_i)/2, a {0,+1,-1} sequence; sign is +1 or -1."""
    if sign != 1 and sign != -1:
        raise ValueError("sign must be +1 or -1")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return TernarySeq(tuple((x + sign * y) // 2 for x, y in zip(a.entries, b.entries)))


def concat(a, b):
    """Concatenate two sequences of the same kind."""
    if type(a) is not type(b):
        raise TypeError(f"cannot concatenate {type(a).__name__} with {type(b).__name__}")
    return type(a)(a.entries + b.entries)
