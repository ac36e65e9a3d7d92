"""Two-phase search for large lengths.

Phase one enumerates boundary seeds: the first and last `head_len`
entries of A, B, C and the first and last `d_head_len` entries of D,
exactly the assignments that satisfy every boundary-determined lag
constraint (the combined lag sum vanishes for s >= n - head_len) and
every prefix-decidable canonical condition.

Phase two pairs each seed with full candidate rows for C and D drawn
from precomputed pools.  A pool holds every full-length row with a given
signed row sum whose spectrum

    f(theta) = N(0) + 2 sum_s N(s) cos(s theta)

stays within `spectral_bound` on the grid theta = j*pi/grid_points,
j = 1..grid_points; since every f is nonnegative and the four spectra
of a valid quadruple sum pointwise to 6n - 2, no valid row is ever
excluded by the bound (6n - 2)/2, nor any valid (C, D) pair by
f_C + f_D <= bound.  Pools are bucketed by their boundary entries so a
seed only meets candidates extending it exactly.  The middles of A and
B are then filled by the pairwise walk with the remaining lag
constraints enforced, which completes the quadruple.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import os
from dataclasses import dataclass
from multiprocessing import Pool as ProcessPool
from pathlib import Path

import numpy as np

from .codec import decode, encode, read_listing
from .core import TurynQuad, is_canonical, verify_tt
from .engine import PairDfs, fill_plan, seed_plan
from .enumeration import ClassListing, Decomposition, FeasibilityError, decompositions
from .seqs import BinarySeq

_SPECTRAL_TOL = 1e-6
_BATCH_SEEDS = 256


class CheckpointError(ValueError):
    """Raised when a checkpoint file is unreadable or belongs to another run."""


def default_head_len(n: int) -> int:
    """ceil(n/5) clamped to [2, 7] and below n/2."""
    return max(1, min(7, max(2, -(-n // 5)), n // 2 - 1))


@dataclass(frozen=True)
class SearchConfig:
    """Targets and pruning parameters for one search run.

    `squares` carries the signed row-sum targets (a, b, c, d): pools are
    keyed by the signed sums c and d, and completed quadruples are kept
    only when A and B hit the signed sums a and b.
    """

    n: int
    squares: Decomposition
    head_len: int | None = None
    d_head_len: int | None = None
    grid_points: int = 600
    spectral_bound: float | None = None
    stop_after: int | None = None

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise ValueError(f"search needs even n >= 4, got {self.n}")
        object.__setattr__(self, "squares", Decomposition(*self.squares))
        if self.head_len is None:
            object.__setattr__(self, "head_len", default_head_len(self.n))
        if self.d_head_len is None:
            object.__setattr__(self, "d_head_len", max(0, self.head_len - 1))
        if not 1 <= self.head_len < self.n / 2:
            raise ValueError(f"head_len must be in [1, n/2), got {self.head_len}")
        if not 0 <= self.d_head_len <= self.head_len:
            raise ValueError(
                f"d_head_len must be in [0, head_len], got {self.d_head_len}"
            )
        if self.grid_points < 1:
            raise ValueError("grid_points must be >= 1")
        if self.spectral_bound is None:
            object.__setattr__(self, "spectral_bound", (6 * self.n - 2) / 2)
        if not 0 < self.spectral_bound <= 6 * self.n - 2:
            raise ValueError(
                f"spectral_bound must be in (0, 6n-2], got {self.spectral_bound}"
            )
        if self.stop_after is not None and self.stop_after < 1:
            raise ValueError("stop_after must be >= 1 or None")

    def describe(self) -> str:
        a, b, c, d = self.squares
        return (
            f"n={self.n};squares={a},{b},{c},{d};head={self.head_len};"
            f"d_head={self.d_head_len};grid={self.grid_points};"
            f"bound={float(self.spectral_bound)!r}"
        )

    def run_hash(self) -> str:
        return hashlib.sha256(self.describe().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class SeedQuad:
    """Boundary-determined part of a quadruple; 0 marks undetermined entries.

    Rows a, b, c carry their first and last `head_len` entries, d its
    first and last `d_head_len` entries.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]
    head_len: int
    d_head_len: int

    def __post_init__(self):
        n = len(self.a)
        if n % 2 or n < 4:
            raise ValueError(f"seed length must be even and >= 4, got {n}")
        if (len(self.b), len(self.c), len(self.d)) != (n, n, n - 1):
            raise ValueError("seed rows must have lengths (n, n, n, n-1)")
        if not 1 <= self.head_len < n / 2 or not 0 <= self.d_head_len <= self.head_len:
            raise ValueError("bad seed head lengths")
        for row, h, length in (
            (self.a, self.head_len, n),
            (self.b, self.head_len, n),
            (self.c, self.head_len, n),
            (self.d, self.d_head_len, n - 1),
        ):
            for j, v in enumerate(row):
                boundary = j < h or j >= length - h
                if boundary and v not in (-1, 1):
                    raise ValueError(f"boundary entry {j} must be +-1, got {v}")
                if not boundary and v != 0:
                    raise ValueError(f"middle entry {j} must be undetermined, got {v}")

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_quad(cls, quad: TurynQuad, head_len: int, d_head_len: int) -> "SeedQuad":
        def mask(entries, h):
            length = len(entries)
            return tuple(
                v if j < h or j >= length - h else 0 for j, v in enumerate(entries)
            )

        return cls(
            mask(quad.a.entries, head_len),
            mask(quad.b.entries, head_len),
            mask(quad.c.entries, head_len),
            mask(quad.d.entries, d_head_len),
            head_len,
            d_head_len,
        )

    def c_bucket_key(self):
        h = self.head_len
        return (self.c[:h], self.c[len(self.c) - h :])

    def d_bucket_key(self):
        h = self.d_head_len
        return (self.d[:h], self.d[len(self.d) - h :] if h else ())

    def combined_lag_sum(self, s: int) -> int:
        """Sum N_A + N_B + 2N_C + 2N_D at lag s over determined entries only."""
        total = 0
        for row, w in ((self.a, 1), (self.b, 1), (self.c, 2), (self.d, 2)):
            total += w * sum(
                row[j] * row[j + s] for j in range(len(row) - s)
            )
        return total

    def fill_flags(self) -> tuple[int, int, int, int, int]:
        """Canonical scan state after the boundary steps, for middle fill-in."""
        n = self.n
        sym_a = int(all(self.a[i] == self.a[n - 1 - i] for i in range(self.head_len)))
        sym_b = int(all(self.b[i] == self.b[n - 1 - i] for i in range(self.head_len)))
        asym_c = int(all(self.c[i] == -self.c[n - 1 - i] for i in range(self.head_len)))
        if self.d_head_len == 0:
            return (sym_a, sym_b, asym_c, 1, 0)
        eps = self.d[n - 2]
        d_open = int(
            all(self.d[i] * self.d[n - 2 - i] == eps for i in range(self.d_head_len))
        )
        return (sym_a, sym_b, asym_c, d_open, eps)


def generate_seeds(cfg: SearchConfig):
    """Stream every boundary seed exactly once, in a fixed deterministic order."""
    eng = PairDfs(
        cfg.n, seed_plan(cfg.n, cfg.head_len, cfg.d_head_len), canonical=True
    )
    for _ in eng.walk():
        a, b, c, d = eng.snapshot()
        yield SeedQuad(a, b, c, d, cfg.head_len, cfg.d_head_len)


@dataclass(frozen=True)
class PoolBucket:
    """Candidate rows sharing one boundary pattern, with their grid spectra."""

    rows: np.ndarray  # (count, length) of +-1, int8
    spectra: np.ndarray  # (count, grid_points) of f(theta_j), float64


@dataclass(frozen=True)
class SequencePool:
    """All spectrum-passing rows of one kind and signed row sum, bucketed."""

    kind: str
    length: int
    target_sum: int
    bucket_len: int
    buckets: dict

    @property
    def total(self) -> int:
        return sum(bucket.rows.shape[0] for bucket in self.buckets.values())


def _chunk_spectra(rows: np.ndarray, cos_table: np.ndarray) -> np.ndarray:
    """f(theta_j) for each row: N(0) + 2 sum_s N(s) cos(s theta_j)."""
    length = rows.shape[1]
    wide = rows.astype(np.float64)
    nafs = np.empty((rows.shape[0], length - 1))
    for s in range(1, length):
        nafs[:, s - 1] = np.sum(wide[:, : length - s] * wide[:, s:], axis=1)
    return length + 2.0 * (nafs @ cos_table)


def build_pool(
    n: int,
    kind: str,
    target_sum: int,
    cfg: SearchConfig,
    cap_rows: int = 5_000_000,
) -> SequencePool:
    """All full rows of the given kind and signed sum passing the grid bound.

    C rows have length n, D rows length n - 1.  Buckets are keyed by the
    (first, last) `head_len` entries (`d_head_len` for D).  A row sum
    whose square already exceeds the bound (f(0) = sum^2) gives an empty
    pool, as does a sum of impossible parity or magnitude.
    """
    if kind not in ("C", "D"):
        raise ValueError(f"kind must be 'C' or 'D', got {kind!r}")
    length = n if kind == "C" else n - 1
    bucket_len = cfg.head_len if kind == "C" else cfg.d_head_len
    empty = SequencePool(kind, length, target_sum, bucket_len, {})
    negatives, rem = divmod(length - target_sum, 2)
    if rem or not 0 <= negatives <= length:
        return empty
    if target_sum * target_sum > cfg.spectral_bound + _SPECTRAL_TOL:
        return empty
    count = math.comb(length, negatives)
    if count > cap_rows:
        raise FeasibilityError(
            f"pool for {kind} with sum {target_sum} has {count} candidate rows "
            f"(cap {cap_rows}); raise cap_rows to build it anyway"
        )
    lags = np.arange(1, length)
    grid = np.arange(1, cfg.grid_points + 1) * (np.pi / cfg.grid_points)
    cos_table = np.cos(lags[:, None] * grid[None, :])
    kept_rows, kept_spectra = [], []
    combos = itertools.combinations(range(length), negatives)
    while True:
        chunk = list(itertools.islice(combos, 4096))
        if not chunk:
            break
        rows = np.ones((len(chunk), length), dtype=np.int8)
        for i, neg_positions in enumerate(chunk):
            rows[i, list(neg_positions)] = -1
        spectra = _chunk_spectra(rows, cos_table)
        mask = spectra.max(axis=1) <= cfg.spectral_bound + _SPECTRAL_TOL
        if mask.any():
            kept_rows.append(rows[mask])
            kept_spectra.append(spectra[mask])
    if not kept_rows:
        return empty
    all_rows = np.concatenate(kept_rows)
    all_spectra = np.concatenate(kept_spectra)
    groups: dict[tuple, list[int]] = {}
    for i in range(all_rows.shape[0]):
        head = tuple(int(v) for v in all_rows[i, :bucket_len])
        tail = tuple(int(v) for v in all_rows[i, length - bucket_len :]) if bucket_len else ()
        groups.setdefault((head, tail), []).append(i)
    buckets = {
        key: PoolBucket(all_rows[idx], all_spectra[idx])
        for key, idx in groups.items()
    }
    return SequencePool(kind, length, target_sum, bucket_len, buckets)


def _fill_engine(seed: SeedQuad, c_row, d_row, canonical: bool) -> PairDfs:
    n = seed.n
    preset = [(2, j, int(v)) for j, v in enumerate(c_row)]
    preset += [(3, j, int(v)) for j, v in enumerate(d_row)]
    preset += [(0, j, v) for j, v in enumerate(seed.a) if v]
    preset += [(1, j, v) for j, v in enumerate(seed.b) if v]
    return PairDfs(
        n,
        fill_plan(n, seed.head_len),
        canonical=canonical,
        preset=preset,
        start_flags=seed.fill_flags(),
    )


def _check_fill_args(seed: SeedQuad, c_entries, d_entries):
    n = seed.n
    if len(c_entries) != n or len(d_entries) != n - 1:
        raise ValueError("C and D must be full rows of lengths n and n-1")
    h, dh = seed.head_len, seed.d_head_len
    for j in itertools.chain(range(h), range(n - h, n)):
        if c_entries[j] != seed.c[j]:
            raise ValueError(f"C boundary entry {j} differs from the seed")
    for j in itertools.chain(range(dh), range(n - 1 - dh, n - 1)):
        if d_entries[j] != seed.d[j]:
            raise ValueError(f"D boundary entry {j} differs from the seed")


def fill_middle(seed: SeedQuad, c: BinarySeq, d: BinarySeq, cfg: SearchConfig):
    """Stream every completion of A and B middles into a verified quadruple.

    C and D must extend the seed's boundary entries; the caller is
    expected to have applied the pair bound f_C + f_D <= spectral_bound.
    """
    _check_fill_args(seed, c.entries, d.entries)
    return _fill_completions(seed, c, d)


def _fill_completions(seed: SeedQuad, c: BinarySeq, d: BinarySeq):
    eng = _fill_engine(seed, c.entries, d.entries, canonical=False)
    for _ in eng.walk():
        rows = eng.snapshot()
        quad = TurynQuad(
            BinarySeq(rows[0]), BinarySeq(rows[1]), BinarySeq(rows[2]), BinarySeq(rows[3])
        )
        if not verify_tt(quad):
            raise RuntimeError(f"fill-in emitted an invalid quadruple: {quad}")
        yield quad


def _canonical_fill_codes(seed, c_row, d_row, cfg, ab_filter) -> list[str]:
    """Compact codes of canonical quadruples from one (seed, C, D) triple.

    Continues the canonical prefix pruning through the A/B middles and
    keeps exactly the canonical completions, so the class of every valid
    completion is still represented: a class's canonical member extends
    its own boundary seed and passes every filter.
    """
    eng = _fill_engine(seed, c_row, d_row, canonical=True)
    a_target, b_target = cfg.squares.a, cfg.squares.b
    codes = []
    for _ in eng.walk():
        rows = eng.snapshot()
        if ab_filter and (sum(rows[0]) != a_target or sum(rows[1]) != b_target):
            continue
        quad = TurynQuad(
            BinarySeq(rows[0]), BinarySeq(rows[1]), BinarySeq(rows[2]), BinarySeq(rows[3])
        )
        if not verify_tt(quad):
            raise RuntimeError(f"fill-in emitted an invalid quadruple: {quad}")
        if is_canonical(quad):
            codes.append(encode(quad, form="compact"))
    return codes


def _seed_hits(seed, cfg, pool_c, pool_d, pair_cache, ab_filter=True) -> list[str]:
    """All canonical hits for one seed, in deterministic pool order."""
    c_bucket = pool_c.buckets.get(seed.c_bucket_key())
    d_bucket = pool_d.buckets.get(seed.d_bucket_key())
    if c_bucket is None or d_bucket is None:
        return []
    key = (seed.c_bucket_key(), seed.d_bucket_key())
    pairs = pair_cache.get(key)
    if pairs is None:
        limit = cfg.spectral_bound + _SPECTRAL_TOL
        pairs = []
        for ic in range(c_bucket.rows.shape[0]):
            sums = c_bucket.spectra[ic] + d_bucket.spectra
            ids = np.nonzero(sums.max(axis=1) <= limit)[0]
            if ids.size:
                pairs.append((ic, ids))
        pair_cache[key] = pairs
    codes = []
    for ic, ids in pairs:
        c_row = c_bucket.rows[ic]
        for idx in ids:
            codes.extend(
                _canonical_fill_codes(seed, c_row, d_bucket.rows[idx], cfg, ab_filter)
            )
    return codes


_WORKER_STATE: dict = {}


def _init_worker(cfg, pool_c, pool_d, ab_filter):
    _WORKER_STATE["args"] = (cfg, pool_c, pool_d, ab_filter)
    _WORKER_STATE["pair_cache"] = {}


def _worker_batch(seeds):
    cfg, pool_c, pool_d, ab_filter = _WORKER_STATE["args"]
    cache = _WORKER_STATE["pair_cache"]
    return [_seed_hits(seed, cfg, pool_c, pool_d, cache, ab_filter) for seed in seeds]


def _map_seed_batches(batches, cfg, pool_c, pool_d, jobs, ab_filter):
    """Yield per-seed hit lists batch by batch, in deterministic seed order."""
    if jobs <= 1:
        _init_worker(cfg, pool_c, pool_d, ab_filter)
        for batch in batches:
            yield _worker_batch(batch)
        return
    with ProcessPool(
        jobs, initializer=_init_worker, initargs=(cfg, pool_c, pool_d, ab_filter)
    ) as pool:
        yield from pool.imap(_worker_batch, batches)


def _batched(iterator, size):
    while True:
        batch = list(itertools.islice(iterator, size))
        if not batch:
            return
        yield batch


def _write_checkpoint(path, cfg, seed_index, done):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(f"config={cfg.run_hash()}\nseed_index={seed_index}\ndone={int(done)}\n")
    os.replace(tmp, path)


def _read_checkpoint(path, cfg) -> tuple[int, bool]:
    fields = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CheckpointError(f"bad checkpoint line: {line!r}")
        fields[key] = value
    try:
        config_hash = fields["config"]
        seed_index = int(fields["seed_index"])
        done = bool(int(fields["done"]))
    except (KeyError, ValueError) as exc:
        raise CheckpointError(f"unreadable checkpoint {path}: {exc}") from exc
    if config_hash != cfg.run_hash():
        raise CheckpointError(
            f"checkpoint {path} belongs to config {config_hash}, "
            f"current config is {cfg.run_hash()}"
        )
    if seed_index < 0:
        raise CheckpointError(f"negative seed index in {path}")
    return seed_index, done


def search(
    cfg: SearchConfig,
    jobs: int = 1,
    checkpoint_path: str | None = None,
    results_path: str | None = None,
    max_seeds_per_run: int | None = None,
) -> list[TurynQuad]:
    """Run one configured search; returns canonical quadruples sorted by code.

    With `checkpoint_path` the run records progress every 256 seeds and a
    later call resumes where it stopped (the checkpoint is bound to the
    config hash).  New hits are appended to `results_path` in listing
    format as they are found.  `max_seeds_per_run` caps how many seeds
    this call processes, leaving the rest for a resumed call.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    pool_c = build_pool(cfg.n, "C", cfg.squares.c, cfg)
    pool_d = build_pool(cfg.n, "D", cfg.squares.d, cfg)
    found: dict[str, None] = {}
    start = 0
    done = False
    if checkpoint_path and os.path.exists(checkpoint_path):
        start, done = _read_checkpoint(checkpoint_path, cfg)
        if results_path and os.path.exists(results_path):
            for _, code in read_listing(Path(results_path).read_text()):
                found[code] = None
    elif results_path:
        with open(results_path, "w") as fh:
            fh.write(f"# search {cfg.describe()}\n")
    if done:
        return [decode(code, cfg.n) for code in sorted(found)]

    seed_stream = itertools.islice(generate_seeds(cfg), start, None)
    if max_seeds_per_run is not None:
        seed_stream = itertools.islice(seed_stream, max_seeds_per_run)
    processed = start
    stopped = False
    exhausted = True
    batches = _batched(seed_stream, _BATCH_SEEDS)
    batch_iter = _map_seed_batches(batches, cfg, pool_c, pool_d, jobs, True)
    for hit_lists in batch_iter:
        batch_size = len(hit_lists)
        new_codes = []
        for i, hits in enumerate(hit_lists):
            for code in hits:
                if code in found:
                    continue
                found[code] = None
                new_codes.append(code)
                if cfg.stop_after is not None and len(found) >= cfg.stop_after:
                    stopped = True
                    break
            if stopped:
                processed += i + 1
                break
        if not stopped:
            processed += batch_size
        if results_path and new_codes:
            with open(results_path, "a") as fh:
                base = len(found) - len(new_codes)
                for offset, code in enumerate(new_codes, start=1):
                    fh.write(f"{base + offset} {code}\n")
        if checkpoint_path:
            _write_checkpoint(checkpoint_path, cfg, processed, stopped)
        if stopped:
            exhausted = False
            break
    else:
        if max_seeds_per_run is not None:
            # Ran out of this call's slice; only a full pass marks completion.
            exhausted = processed - start < max_seeds_per_run
    if checkpoint_path and not stopped:
        _write_checkpoint(checkpoint_path, cfg, processed, exhausted)
    return [decode(code, cfg.n) for code in sorted(found)]


def sweep_configs(
    n: int,
    head_len: int | None = None,
    d_head_len: int | None = None,
    grid_points: int = 600,
    spectral_bound: float | None = None,
) -> list[SearchConfig]:
    """One SearchConfig per signed/ordered row-sum target at length n."""
    variants = set()
    for a, b, c, d in decompositions(n):
        orders = {(a, b), (b, a)}
        for aa, bb in orders:
            for sa in ((1,) if aa == 0 else (1, -1)):
                for sb in ((1,) if bb == 0 else (1, -1)):
                    for sc in ((1,) if c == 0 else (1, -1)):
                        for sd in ((1,) if d == 0 else (1, -1)):
                            variants.add((sa * aa, sb * bb, sc * c, sd * d))
    return [
        SearchConfig(
            n=n,
            squares=Decomposition(*squares),
            head_len=head_len,
            d_head_len=d_head_len,
            grid_points=grid_points,
            spectral_bound=spectral_bound,
        )
        for squares in sorted(variants)
    ]


def run_sweep(
    n: int,
    jobs: int = 1,
    head_len: int | None = None,
    d_head_len: int | None = None,
    grid_points: int = 600,
    spectral_bound: float | None = None,
) -> ClassListing:
    """Every equivalence class at length n via the two-phase search.

    Unions the search over all signed (c, d) pool targets; the row sums
    of A and B are left free, which cannot miss a class since each
    class's canonical member is found under its own (c, d) target.
    """
    configs = sweep_configs(n, head_len, d_head_len, grid_points, spectral_bound)
    targets = sorted({(cfg.squares.c, cfg.squares.d) for cfg in configs})
    by_target = {(cfg.squares.c, cfg.squares.d): cfg for cfg in configs}
    base = configs[0]
    seeds = list(generate_seeds(base))
    pools: dict[tuple[str, int], SequencePool] = {}
    codes: set[str] = set()
    for c_sum, d_sum in targets:
        cfg = by_target[(c_sum, d_sum)]
        if ("C", c_sum) not in pools:
            pools[("C", c_sum)] = build_pool(n, "C", c_sum, cfg)
        if ("D", d_sum) not in pools:
            pools[("D", d_sum)] = build_pool(n, "D", d_sum, cfg)
        pool_c, pool_d = pools[("C", c_sum)], pools[("D", d_sum)]
        if not pool_c.buckets or not pool_d.buckets:
            continue
        for hit_lists in _map_seed_batches(
            _batched(iter(seeds), _BATCH_SEEDS), cfg, pool_c, pool_d, jobs, False
        ):
            for hits in hit_lists:
                codes.update(hits)
    return ClassListing(n, tuple(sorted(codes)))
