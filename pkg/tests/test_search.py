"""Tests for the two-phase search: seeds, pools, fill-in, orchestration."""

import itertools
import random

import numpy as np
import pytest

from conftest import TT38_A, TT38_B, TT38_C, TT38_D, TT38_CODE, load_reference_codes
from turynseq.codec import decode, encode
from turynseq.core import TurynQuad, verify_tt
from turynseq.enumeration import Decomposition, FeasibilityError, enumerate_canonical
from turynseq.search import (
    CheckpointError,
    SearchConfig,
    SeedQuad,
    build_pool,
    default_head_len,
    fill_middle,
    generate_seeds,
    run_sweep,
    search,
    sweep_configs,
)
from turynseq.seqs import BinarySeq, spectrum_value


def tt38_quad() -> TurynQuad:
    return TurynQuad(*(BinarySeq.from_pm(s) for s in (TT38_A, TT38_B, TT38_C, TT38_D)))


def cfg10(**kw) -> SearchConfig:
    kw.setdefault("squares", Decomposition(0, 0, 2, 5))
    return SearchConfig(n=10, **kw)


class TestSearchConfig:
    def test_paper_defaults_at_n38(self):
        cfg = SearchConfig(n=38, squares=Decomposition(8, -4, 8, -3))
        assert cfg.head_len == 7
        assert cfg.d_head_len == 6
        assert cfg.grid_points == 600
        assert cfg.spectral_bound == 113.0

    def test_default_head_len_clamps(self):
        assert default_head_len(4) == 1
        assert default_head_len(6) == 2
        assert default_head_len(10) == 2
        assert default_head_len(20) == 4
        assert default_head_len(38) == 7
        assert default_head_len(100) == 7

    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(n=7, squares=Decomposition(0, 0, 2, 5))
        with pytest.raises(ValueError):
            cfg10(head_len=5)  # head_len must stay below n/2
        with pytest.raises(ValueError):
            cfg10(head_len=2, d_head_len=3)
        with pytest.raises(ValueError):
            cfg10(grid_points=0)
        with pytest.raises(ValueError):
            cfg10(spectral_bound=100.0)  # above 6n-2
        with pytest.raises(ValueError):
            cfg10(stop_after=0)

    def test_run_hash_separates_configs(self):
        base = cfg10()
        assert base.run_hash() == cfg10().run_hash()
        assert base.run_hash() != cfg10(squares=Decomposition(2, 2, 0, 5)).run_hash()
        assert base.run_hash() != cfg10(grid_points=500).run_hash()


class TestSeedQuad:
    def test_from_quad_masks_middles(self):
        seed = SeedQuad.from_quad(tt38_quad(), 7, 6)
        assert seed.n == 38
        assert seed.a[:7] == tuple(tt38_quad().a.entries[:7])
        assert seed.a[7:31] == (0,) * 24
        assert seed.d[6:31] == (0,) * 25
        assert seed.c_bucket_key() == (
            tuple(tt38_quad().c.entries[:7]),
            tuple(tt38_quad().c.entries[31:]),
        )

    def test_validation_rejects_bad_rows(self):
        good = SeedQuad.from_quad(tt38_quad(), 7, 6)
        with pytest.raises(ValueError):
            SeedQuad(good.a, good.b, good.c, good.d[:10], 7, 6)
        with pytest.raises(ValueError):
            SeedQuad(good.a[:10] + (0,) * 28, good.b, good.c, good.d, 7, 6)
        bad_mid = good.a[:19] + (1,) + good.a[20:]
        with pytest.raises(ValueError):
            SeedQuad(bad_mid, good.b, good.c, good.d, 7, 6)

    def test_boundary_lag_sums_vanish(self):
        # Lags s >= n - head_len are fully boundary-determined, so the
        # defining sum must already be zero there.
        cfg = cfg10(head_len=2, d_head_len=1)
        for seed in itertools.islice(generate_seeds(cfg), 25):
            for s in range(seed.n - seed.head_len, seed.n):
                assert seed.combined_lag_sum(s) == 0


class TestGenerateSeeds:
    def test_count_matches_exhaustive_boundary_filter_n10(self):
        # Independent oracle: scan all 2^14 boundary assignments for
        # head_len=2, d_head_len=1 and keep those satisfying the two
        # boundary-complete lag constraints plus every prefix-decidable
        # canonical condition.
        survivors = 0
        for a1, a8, b1, b8, c1, c8, c9, d8 in itertools.product((1, -1), repeat=8):
            a0 = a9 = b0 = b9 = c0 = d0 = 1
            # prefix-decidable canonical conditions
            if a1 != a8 and a1 != 1:
                continue
            if b1 != b8 and b1 != 1:
                continue
            if c9 == -1 and c1 == c8 and c1 != 1:
                continue
            if a1 != b1:
                if a1 != 1:
                    continue
            elif not (a8 == 1 and b8 == -1):
                continue
            # boundary-complete lag constraints (s = 8 and s = 9)
            if a0 * a9 + b0 * b9 + 2 * c0 * c9 != 0:
                continue
            if a0 * a8 + a1 * a9 + b0 * b8 + b1 * b9 + 2 * (c0 * c8 + c1 * c9) + 2 * d0 * d8 != 0:
                continue
            survivors += 1
        cfg = cfg10(head_len=2, d_head_len=1)
        seeds = list(generate_seeds(cfg))
        assert len(seeds) == survivors

    def test_deterministic_order(self):
        cfg = cfg10()
        assert list(generate_seeds(cfg)) == list(generate_seeds(cfg))

    def test_seeds_unique_and_canonically_constrained(self):
        cfg = cfg10()
        seeds = list(generate_seeds(cfg))
        assert len(set(seeds)) == len(seeds)
        n = cfg.n
        for seed in seeds:
            assert seed.a[0] == seed.a[n - 1] == 1
            assert seed.b[0] == seed.b[n - 1] == 1
            assert seed.c[0] == 1
            assert seed.d[0] == 1

    def test_seed_count_independent_of_squares(self):
        a = list(generate_seeds(cfg10(squares=Decomposition(0, 0, 2, 5))))
        b = list(generate_seeds(cfg10(squares=Decomposition(2, 2, 0, 5))))
        assert a == b


class TestBuildPool:
    def test_matches_brute_filter_n10(self):
        cfg = cfg10()
        pool = build_pool(10, "C", 0, cfg)
        # Independent filter: every +-1 row of length 10 with zero sum
        # whose spectrum stays within the bound on the whole grid.
        thetas = [j * np.pi / cfg.grid_points for j in range(1, cfg.grid_points + 1)]
        expected = set()
        for bits in itertools.product((1, -1), repeat=10):
            if sum(bits) != 0:
                continue
            seq = BinarySeq(bits)
            if all(spectrum_value(seq, t) <= cfg.spectral_bound + 1e-6 for t in thetas):
                expected.add(bits)
        pooled = set()
        for bucket in pool.buckets.values():
            for row in bucket.rows:
                pooled.add(tuple(int(v) for v in row))
        assert pooled == expected
        assert pool.total == len(expected)

    def test_bucket_membership_is_partition(self):
        pool = build_pool(10, "C", 2, cfg10())
        seen = set()
        for (head, tail), bucket in pool.buckets.items():
            assert len(head) == len(tail) == pool.bucket_len
            for row in bucket.rows:
                key = tuple(int(v) for v in row)
                assert key not in seen
                seen.add(key)
                assert tuple(key[:2]) == head
                assert tuple(key[-2:]) == tail
        assert len(seen) == pool.total

    def test_sum_square_above_bound_gives_empty_pool(self):
        # f(0) = (row sum)^2, so target 6 with bound 29 is impossible.
        pool = build_pool(10, "C", 6, cfg10())
        assert pool.total == 0

    def test_parity_mismatch_gives_empty_pool(self):
        assert build_pool(10, "C", 3, cfg10()).total == 0
        assert build_pool(10, "D", 2, cfg10()).total == 0

    def test_d_pool_uses_d_head_len_buckets(self):
        pool = build_pool(10, "D", 5, cfg10())
        assert pool.length == 9
        assert pool.bucket_len == 1
        for head, tail in pool.buckets:
            assert len(head) == len(tail) == 1

    def test_row_cap_refusal(self):
        with pytest.raises(FeasibilityError, match="cap_rows"):
            build_pool(38, "C", 8, SearchConfig(n=38, squares=Decomposition(8, -4, 8, -3)))

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            build_pool(10, "E", 0, cfg10())


class TestSpectralSoundness:
    def test_pointwise_identity_on_all_tt10(self, reference_codes):
        rng = random.Random(20240817)
        thetas = [rng.uniform(0.0, np.pi) for _ in range(1000)]
        for code in reference_codes[10]:
            quad = decode(code, 10)
            for theta in rng.sample(thetas, 25):
                total = (
                    spectrum_value(quad.a, theta)
                    + spectrum_value(quad.b, theta)
                    + 2 * spectrum_value(quad.c, theta)
                    + 2 * spectrum_value(quad.d, theta)
                )
                assert abs(total - 58.0) < 1e-6

    def test_valid_members_never_pruned(self, reference_codes):
        # Nonnegativity of each spectrum plus the identity caps every
        # f_C and f_C + f_D by (6n-2)/2, so the pool filters are sound.
        rng = random.Random(11)
        bound = 29.0
        for code in reference_codes[10]:
            quad = decode(code, 10)
            for _ in range(40):
                theta = rng.uniform(0.0, np.pi)
                fc = spectrum_value(quad.c, theta)
                fd = spectrum_value(quad.d, theta)
                assert -1e-9 <= fc <= bound + 1e-6
                assert fc + fd <= bound + 1e-6


class TestFillMiddle:
    def test_recovers_published_tt38(self):
        quad = tt38_quad()
        cfg = SearchConfig(n=38, squares=Decomposition(8, -4, 8, -3))
        seed = SeedQuad.from_quad(quad, cfg.head_len, cfg.d_head_len)
        fills = list(fill_middle(seed, quad.c, quad.d, cfg))
        assert all(verify_tt(q) for q in fills)
        assert encode(quad, form="full") in {encode(q, form="full") for q in fills}

    def test_every_output_extends_seed_and_verifies(self):
        cfg = cfg10()
        listing = enumerate_canonical(10)
        quad = decode(listing.codes[0], 10)
        seed = SeedQuad.from_quad(quad, cfg.head_len, cfg.d_head_len)
        outputs = list(fill_middle(seed, quad.c, quad.d, cfg))
        assert outputs
        for out in outputs:
            assert verify_tt(out)
            assert out.c == quad.c and out.d == quad.d
            assert tuple(out.a.entries[:2]) == seed.a[:2]
            assert tuple(out.b.entries[-2:]) == seed.b[-2:]

    def test_boundary_mismatch_rejected(self):
        cfg = cfg10()
        quad = decode(enumerate_canonical(10).codes[0], 10)
        seed = SeedQuad.from_quad(quad, cfg.head_len, cfg.d_head_len)
        with pytest.raises(ValueError, match="boundary"):
            fill_middle(seed, quad.c.negate(), quad.d, cfg)
        with pytest.raises(ValueError, match="full rows"):
            next(fill_middle(seed, quad.d, quad.d, cfg))


class TestSearch:
    def test_finds_exactly_the_classes_with_target_sums(self, reference_codes):
        # Derived oracle: the canonical representatives with row sums
        # exactly (0, 0, 2, 5), taken from the reference listing.
        expected = sorted(
            code
            for code in reference_codes[10]
            if decode(code, 10).row_sums() == (0, 0, 2, 5)
        )
        hits = search(cfg10())
        assert [encode(q, form="compact") for q in hits] == expected

    def test_stop_after_limits_output(self):
        hits = search(cfg10(stop_after=1))
        assert len(hits) == 1

    def test_jobs_deterministic(self):
        serial = search(cfg10())
        parallel = search(cfg10(), jobs=2)
        assert [str(q) for q in serial] == [str(q) for q in parallel]

    def test_sliced_runs_resume_to_same_result(self, tmp_path):
        cfg = cfg10()
        one_shot = search(cfg)
        ck = tmp_path / "checkpoint.txt"
        rs = tmp_path / "results.txt"
        sliced = []
        for _ in range(1000):
            sliced = search(
                cfg,
                checkpoint_path=str(ck),
                results_path=str(rs),
                max_seeds_per_run=3,
            )
            if "done=1" in ck.read_text():
                break
        assert [str(q) for q in sliced] == [str(q) for q in one_shot]
        # A further call is a no-op returning the same set.
        again = search(cfg, checkpoint_path=str(ck), results_path=str(rs))
        assert [str(q) for q in again] == [str(q) for q in one_shot]

    def test_checkpoint_config_mismatch_rejected(self, tmp_path):
        ck = tmp_path / "checkpoint.txt"
        search(cfg10(), checkpoint_path=str(ck), max_seeds_per_run=2)
        with pytest.raises(CheckpointError, match="config"):
            search(
                cfg10(squares=Decomposition(2, 2, 0, 5)), checkpoint_path=str(ck)
            )

    def test_corrupt_checkpoint_rejected(self, tmp_path):
        ck = tmp_path / "checkpoint.txt"
        ck.write_text("config=abc\nseed_index=not_a_number\ndone=0\n")
        with pytest.raises(CheckpointError):
            search(cfg10(), checkpoint_path=str(ck))
        ck.write_text("seed_index=3\n")
        with pytest.raises(CheckpointError):
            search(cfg10(), checkpoint_path=str(ck))


class TestSweep:
    def test_config_sweep_covers_signed_variants(self):
        configs = sweep_configs(38)
        squares = {cfg.squares for cfg in configs}
        assert Decomposition(8, -4, 8, -3) in squares
        assert all(cfg.n == 38 for cfg in configs)
        # Deterministic order.
        assert [c.squares for c in sweep_configs(38)] == sorted(squares)

    @pytest.mark.parametrize("n", [8, 10])
    def test_reproduces_enumeration(self, n, reference_codes):
        assert list(run_sweep(n).codes) == reference_codes[n]

    def test_reproduces_enumeration_n12(self, listing_cache):
        assert run_sweep(12).codes == listing_cache(12).codes

    def test_jobs_deterministic(self):
        assert run_sweep(8, jobs=2).codes == run_sweep(8).codes

    def test_union_of_configured_searches_matches_sweep(self):
        # The per-config searches pin A's and B's signed sums as well;
        # their union over the full signed sweep is the same class set.
        codes = set()
        for cfg in sweep_configs(8):
            codes.update(encode(q, form="compact") for q in search(cfg))
        assert sorted(codes) == list(run_sweep(8).codes)
