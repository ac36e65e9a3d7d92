"""Two-ended pairwise depth-first search over partial quadruples.

Positions are assigned in symmetric pairs: step k (1-based) decides
positions k and n+1-k of A, B and C and positions k and n-k of D.
Since D has odd length n-1, its step-n/2 "pair" is the single middle
entry.  Filling from both ends makes each high lag fully determined as
early as possible: after step k every lag s >= n-k of the combined sum

    F(s) = N_A(s) + N_B(s) + 2 N_C(s) + 2 N_D(s)

is complete, and the last step completes all remaining lags at once.

The running state keeps, per lag s, the partial weighted sum P[s] of
determined product terms and the weighted count U[s] of undetermined
terms (weights 1, 1, 2, 2).  Undetermined terms can move the final sum
by at most U[s] in either direction, so a branch stays viable only
while |P[s]| <= U[s] for every lag; when U[s] hits zero this forces
the exact condition F(s) = 0.  (P[s] + U[s] is invariant mod 2 and
starts even, so no parity check is needed.)  Every cut branch violates
a necessary condition, hence no completion is ever lost.

With canonical pruning enabled the walk also restricts choices to the
prefix-decidable parts of the canonical-form conditions:

  * step 1 pins a_1 = a_n = b_1 = b_n = c_1 = d_1 = +1;
  * while A (or B) is end-symmetric so far, the first asymmetric pair
    must start with +1;
  * while C is end-antisymmetric so far, the first symmetric pair must
    start with +1;
  * the first D pair whose product d_k d_{n-k} differs from d_{n-1}
    must start with +1 (the lone middle entry counts as product +1);
  * once a_2, b_2, a_{n-1}, b_{n-1} are known: a_2 != b_2 forces
    a_2 = +1, and a_2 = b_2 forces a_{n-1} = +1, b_{n-1} = -1.

These are exactly the six canonical conditions restricted to decided
entries, so with the full plan the leaves are precisely the canonical
quadruples.

Engines are single-use: build one, run `walk` or `prefix_paths` once.
"""

from __future__ import annotations

_PAIR_ALL = ((1, 1), (1, -1), (-1, 1), (-1, -1))
_SINGLE_ALL = ((1, 0), (-1, 0))


def full_plan(n: int) -> list[tuple[int, int]]:
    """(seq, step) items for complete enumeration: steps 1..n/2, all four rows."""
    return [(seq, k) for k in range(1, n // 2 + 1) for seq in range(4)]


def seed_plan(n: int, head_len: int, d_head_len: int) -> list[tuple[int, int]]:
    """Boundary-only items: steps 1..head_len for A, B, C; 1..d_head_len for D."""
    plan = []
    for k in range(1, head_len + 1):
        plan.extend((seq, k) for seq in range(3))
        if k <= d_head_len:
            plan.append((3, k))
    return plan


def fill_plan(n: int, head_len: int) -> list[tuple[int, int]]:
    """Middle items for A and B only: steps head_len+1..n/2."""
    return [(seq, k) for k in range(head_len + 1, n // 2 + 1) for seq in (0, 1)]


class PairDfs:
    """One depth-first walk over a plan of symmetric-pair assignments."""

    def __init__(self, n, plan, canonical, preset=(), start_flags=(1, 1, 1, 1, 0)):
        if n < 2 or n % 2:
            raise ValueError(f"pairwise walk needs even n >= 2, got {n}")
        self.n = n
        self.canonical = canonical
        self.rows = [[0] * n, [0] * n, [0] * n, [0] * (n - 1)]
        self._pos = [[], [], [], []]
        self._weight = (1, 1, 2, 2)
        # U[s]: weighted count of product terms at lag s over all four rows.
        self._P = [0] * n
        self._U = [0] + [4 * (n - s) + 2 * max(0, n - 1 - s) for s in range(1, n)]
        self.preset_ok = True
        for seq, j, v in preset:
            if not self._set(seq, j, v):
                self.preset_ok = False
        # Plan items: (seq, step k, j1, j2) with j2 = -1 for the D middle entry.
        # The filled positions at each depth depend only on the plan, so the
        # (partner position, lag) pairs each new entry touches are precomputed.
        self._plan = []
        self._sched = []
        filled = [list(p) for p in self._pos]
        for seq, k in plan:
            j1 = k - 1
            j2 = n - k if seq < 3 else n - k - 1
            if seq == 3 and j2 == j1:
                j2 = -1
            self._plan.append((seq, k, j1, j2))
            # High lags complete first and bind tightest, so check them first.
            touches1 = tuple(
                sorted(((p, abs(j1 - p)) for p in filled[seq]), key=lambda ps: -ps[1])
            )
            filled[seq].append(j1)
            touches2 = ()
            if j2 >= 0:
                touches2 = tuple(
                    sorted(((p, abs(j2 - p)) for p in filled[seq]), key=lambda ps: -ps[1])
                )
                filled[seq].append(j2)
            self._sched.append(
                (self.rows[seq], self._weight[seq], j1, touches1, j2, touches2)
            )
        # Flags: (sym_a, sym_b, antisym_c, d_scan_open, d_eps); one slot per
        # depth.  `start_flags` carries the scan state into a plan that
        # resumes midway (e.g. middle fill after a boundary seed).
        self._fl = [tuple(start_flags)] + [None] * len(self._plan)

    # -- state updates ----------------------------------------------------

    def _set(self, seq, j, v):
        """Assign one preset entry, updating every touched lag; False when a lag dies."""
        row = self.rows[seq]
        pos = self._pos[seq]
        w = self._weight[seq]
        P, U = self._P, self._U
        ok = True
        for p in pos:
            s = j - p
            if s < 0:
                s = -s
            U[s] -= w
            t = P[s] + w * v * row[p]
            P[s] = t
            if t < 0:
                t = -t
            if t > U[s]:
                ok = False
        row[j] = v
        pos.append(j)
        return ok

    def _roll_back(self, row, w, j, touches, upto):
        """Reverse the first `upto` touch updates of one entry and clear it."""
        P, U = self._P, self._U
        wv = w if row[j] == 1 else -w
        for p, s in touches[:upto]:
            U[s] += w
            P[s] -= wv * row[p]
        row[j] = 0

    def _apply(self, t, opt):
        """Try one option; on a dead lag, roll back immediately and return False.

        A failed `_apply` leaves the state untouched; `_undo` is only for
        fully applied items.
        """
        row, w, j1, touches1, j2, touches2 = self._sched[t]
        v1, v2, nf = opt
        P, U = self._P, self._U
        row[j1] = v1
        wv = w if v1 == 1 else -w
        done = 0
        for p, s in touches1:
            U[s] -= w
            x = P[s] + wv * row[p]
            P[s] = x
            if x < 0:
                x = -x
            done += 1
            if x > U[s]:
                self._roll_back(row, w, j1, touches1, done)
                return False
        if j2 >= 0:
            row[j2] = v2
            wv = w if v2 == 1 else -w
            done = 0
            for p, s in touches2:
                U[s] -= w
                x = P[s] + wv * row[p]
                P[s] = x
                if x < 0:
                    x = -x
                done += 1
                if x > U[s]:
                    self._roll_back(row, w, j2, touches2, done)
                    self._roll_back(row, w, j1, touches1, len(touches1))
                    return False
        self._fl[t + 1] = nf
        return True

    def _undo(self, t):
        row, w, j1, touches1, j2, touches2 = self._sched[t]
        if j2 >= 0:
            self._roll_back(row, w, j2, touches2, len(touches2))
        self._roll_back(row, w, j1, touches1, len(touches1))

    # -- option lists -----------------------------------------------------

    def _options(self, t):
        seq, k, j1, j2 = self._plan[t]
        fl = self._fl[t]
        if not self.canonical:
            if j2 < 0:
                return [(1, 0, fl), (-1, 0, fl)]
            return [(v1, v2, fl) for v1, v2 in _PAIR_ALL]
        sa, sb, ac, don, eps = fl
        if seq == 0:
            if k == 1:
                return [(1, 1, fl)]
            if sa:
                off = (0, sb, ac, don, eps)
                return [(1, 1, fl), (1, -1, off), (-1, -1, fl)]
            return [(v1, v2, fl) for v1, v2 in _PAIR_ALL]
        if seq == 1:
            if k == 1:
                opts = [(1, 1, fl)]
            elif sb:
                off = (sa, 0, ac, don, eps)
                opts = [(1, 1, fl), (1, -1, off), (-1, -1, fl)]
            else:
                opts = [(v1, v2, fl) for v1, v2 in _PAIR_ALL]
            if k == 2 and self.n > 2:
                # a_2, a_{n-1} are already placed; this pair is (b_2, b_{n-1}).
                a2 = self.rows[0][1]
                an1 = self.rows[0][self.n - 2]
                kept = []
                for v1, v2, nf in opts:
                    if a2 != v1:
                        if a2 == 1:
                            kept.append((v1, v2, nf))
                    elif an1 == 1 and v2 == -1:
                        kept.append((v1, v2, nf))
                opts = kept
            return opts
        if seq == 2:
            if k == 1:
                off = (sa, sb, 0, don, eps)
                return [(1, 1, off), (1, -1, fl)]
            if ac:
                off = (sa, sb, 0, don, eps)
                return [(1, 1, off), (1, -1, fl), (-1, 1, fl)]
            return [(v1, v2, fl) for v1, v2 in _PAIR_ALL]
        # seq == 3
        if j2 < 0:
            # Lone middle entry; its self-product is +1.
            if k == 1:
                return [(1, 0, fl)]  # d_1 = +1
            if don and eps == -1:
                off = (sa, sb, ac, 0, eps)
                return [(1, 0, off)]
            return [(1, 0, fl), (-1, 0, fl)]
        if k == 1:
            return [(1, 1, (sa, sb, ac, 1, 1)), (1, -1, (sa, sb, ac, 1, -1))]
        if don:
            off = (sa, sb, ac, 0, eps)
            opts = []
            for v1, v2 in _PAIR_ALL:
                if v1 * v2 == eps:
                    opts.append((v1, v2, fl))
                elif v1 == 1:
                    opts.append((v1, v2, off))
            return opts
        return [(v1, v2, fl) for v1, v2 in _PAIR_ALL]

    # -- walks --------------------------------------------------------

    def _iterate(self, t0, t_end):
        """Depth-first over plan items [t0, t_end); yields at complete depth."""
        if t0 == t_end:
            yield None
            return
        span = t_end
        oi = [0] * span
        opts = [None] * span
        opts[t0] = self._options(t0)
        t = t0
        while True:
            if oi[t] == len(opts[t]):
                if t == t0:
                    return
                t -= 1
                self._undo(t)
                oi[t] += 1
                continue
            if self._apply(t, opts[t][oi[t]]):
                if t == t_end - 1:
                    yield tuple(oi[t0 : t + 1])
                    self._undo(t)
                    oi[t] += 1
                else:
                    t += 1
                    oi[t] = 0
                    opts[t] = self._options(t)
            else:
                oi[t] += 1

    def walk(self, path=()):
        """Run the search below a (possibly empty) prefix path of option indices.

        Yields once per surviving complete assignment; read the state of
        `rows` at each yield.  Single use.
        """
        if not self.preset_ok:
            return
        for t, choice in enumerate(path):
            opts = self._options(t)
            if not self._apply(t, opts[choice]):
                raise RuntimeError(f"prefix path {path!r} is not viable at item {t}")
        yield from self._iterate(len(path), len(self._plan))

    def prefix_paths(self, items):
        """All viable option-index paths through the first `items` plan items.

        Used to split the walk into independent subtrees; replaying a
        yielded path in a fresh engine restores the exact subtree root.
        Single use.
        """
        if not self.preset_ok:
            return
        yield from self._iterate(0, min(items, len(self._plan)))

    def snapshot(self):
        """Current rows as tuples (A, B, C, D entries; 0 marks unassigned)."""
        return tuple(tuple(row) for row in self.rows)
