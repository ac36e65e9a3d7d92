"""Shared regression data.

Reference listings live in tests/data as plain listing files.  The
constants below are independently published values used as oracles:
the per-n class counts, six known canonical codes for n = 26..36, and
one fully displayed TT(38) together with its compact code and row sums.
"""

from pathlib import Path

import pytest

from turynseq.codec import read_listing

DATA_DIR = Path(__file__).parent / "data"

# Number of equivalence classes for each even n up to 32.
REFERENCE_COUNTS = {
    2: 1,
    4: 1,
    6: 4,
    8: 6,
    10: 43,
    12: 127,
    14: 186,
    16: 739,
    18: 675,
    20: 913,
    22: 3105,
    24: 3523,
    26: 3753,
    28: 4161,
    30: 4500,
    32: 6226,
}

# Known canonical compact codes for n = 26, 28, 30, 32, 34, 36.
KNOWN_LARGE_CODES = {
    26: "0560110f0f9ec89d54a6867dc",
    28: "0005189b4d2e583e5571efc9196",
    30: "00788193c52741c99e060a73a22d5",
    32: "005088b3dc4d69db0a13438a6c2e916",
    34: "052351540cf016cfbe5809958b32825bc",
    36: "000f0f51c9bbd750cb048e3902185ca6a96",
}

# A fully displayed TT(38): sign rows, compact code, and row sums (8, -4, 8, -3).
TT38_A = "++++--+++++-+++---+-++-+++++-++------+"
TT38_B = "+-+++----++-+-++--------+---+++-+-++-+"
TT38_C = "+++-+-+++++-+++-+----+++-+--+--+++-++-"
TT38_D = "+--++---++--++-+----+-+---+-++++-+--+"
TT38_CODE = "05128f55401f041adf7f65c53567822c9cb9c"
TT38_ROW_SUMS = (8, -4, 8, -3)


def load_reference_text(name: str) -> str:
    return (DATA_DIR / name).read_text()


def load_reference_codes(name: str) -> list[str]:
    return [code for _, code in read_listing(load_reference_text(name))]


@pytest.fixture(scope="session")
def reference_codes():
    """Full reference listings keyed by length, for n <= 10."""
    return {n: load_reference_codes(f"reference_n{n}.txt") for n in (2, 4, 6, 8, 10)}


@pytest.fixture(scope="session")
def listing_cache():
    """Memoized full enumeration, shared across tests (n = 12 takes ~20s)."""
    from turynseq.enumeration import enumerate_canonical

    cache = {}

    def get(n: int):
        if n not in cache:
            cache[n] = enumerate_canonical(n)
        return cache[n]

    return get
