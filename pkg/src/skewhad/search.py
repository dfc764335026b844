"""Local search for skew-first-block supplementary difference sets.

The search space is restricted to blocks that are unions of H-orbits.  Block
1 always picks exactly one orbit from each negation pair, so it stays of skew
type; blocks 2-4 are free unions.  Each restart runs steepest descent on

    sum over s != 0 of (T(s) - lambda)^2

where T counts in-block differences.  Sideways moves are allowed for a
bounded number of consecutive steps, then the restart ends.

Per-block autocorrelations are updated incrementally.  With x the indicator
of a block and o, o' orbit indicators, write cross(a, b) for
corr(a, b) + corr(b, a); then

    add o:          corr(x,x) + cross(x, o) + corr(o, o)
    remove o:       corr(x,x) - cross(x, o) + corr(o, o)
    swap o -> o':   corr(x,x) - cross(x, o) + cross(x, o') + corr(o,o)
                    + corr(o',o') - cross(o, o')
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .equivalence import find_equivalence
from .families import (
    Block,
    SdsQuadruple,
    _shift_table,
    autocorrelation,
    difference_counts,
    expand,
    index_set_is_skew,
    is_skew_type,
    parameter_identities,
    verify_sds,
)
from .ring import OrbitIndexing, cyclic_subgroup, orbits_of, paper_indexing


class InfeasibleCardinals(ValueError):
    pass


@dataclass
class SearchConfig:
    v: int
    H_generator: int = 1
    lambda_target: int | None = None
    cardinal_targets: tuple[int, int, int, int] | None = None
    skew_first_block: bool = True
    seed: int = 0
    max_restarts: int = 1000
    max_steps_per_restart: int = 2000
    time_budget: float | None = 60.0
    plateau_cap: int = 50
    max_results: int = 1
    order: str = "ascending"
    initial: Sequence[Sequence[int]] | None = None
    workers: int = 1


@dataclass
class SearchResult:
    index_sets: tuple[tuple[int, ...], ...]
    objective: int
    verified: bool
    lam: int
    steps: int
    restart: int
    restarts: int = 0
    elapsed: float = 0.0

    def blocks(self, indexing: OrbitIndexing) -> tuple[Block, ...]:
        return tuple(expand(indexing, J) for J in self.index_sets)

    def quadruple(self, indexing: OrbitIndexing) -> SdsQuadruple:
        return SdsQuadruple(indexing.n, self.blocks(indexing), self.lam)


def objective(indexing: OrbitIndexing, sets: Sequence[Sequence[int]], lam: int) -> int:
    """Squared deviation of the difference counts from ``lam``, from scratch."""
    blocks = [expand(indexing, J) for J in sets]
    counts = difference_counts(blocks)
    return int(((counts - lam) ** 2).sum())


def build_indexing(cfg: SearchConfig) -> OrbitIndexing:
    H = cyclic_subgroup(cfg.v, cfg.H_generator)
    if cfg.skew_first_block or cfg.initial is not None:
        return paper_indexing(cfg.v, H, order=cfg.order)
    try:
        return paper_indexing(cfg.v, H, order=cfg.order)
    except ValueError:
        # no pairing needed; fall back to plain orbit order
        return OrbitIndexing(cfg.v, H, tuple(o for o in orbits_of(cfg.v, H) if o != (0,)))


@dataclass
class SearchState:
    """Orbit membership of the four blocks plus their autocorrelations."""

    members: np.ndarray  # (4, K) bool
    corr: np.ndarray  # (4, v) int64; corr[i, 0] is the size of block i

    def copy(self) -> SearchState:
        return SearchState(self.members.copy(), self.corr.copy())

    def index_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(i) for i in np.flatnonzero(row)) for row in self.members)


@dataclass(frozen=True)
class Move:
    block: int
    remove: int = -1
    add: int = -1


class Engine:
    """Precomputed orbit data for one search configuration."""

    def __init__(self, cfg: SearchConfig, indexing: OrbitIndexing | None = None):
        self.cfg = cfg
        self.indexing = indexing or build_indexing(cfg)
        v = self.v = cfg.v
        K = self.K = len(self.indexing.orbits)
        self.sizes = np.array(self.indexing.sizes, dtype=np.int64)
        self.omega = np.zeros((K, v), dtype=np.int64)
        for i, o in enumerate(self.indexing.orbits):
            self.omega[i, list(o)] = 1
        self.auto = np.array([autocorrelation(row) for row in self.omega]).reshape(K, v)
        plus = _shift_table(v)
        self._plus = plus
        self._minus = (np.arange(v)[:, None] - np.arange(v)[None, :]) % v
        self.pairs = self.indexing.pair_count if cfg.skew_first_block else 0
        if cfg.skew_first_block:
            self.pair_cross = np.array(
                [self.cross(self.omega[2 * i], self.omega[2 * i + 1]) for i in range(self.pairs)],
                dtype=np.int64,
            ).reshape(self.pairs, v)
        self.fixed_cards = cfg.cardinal_targets is not None
        if self.fixed_cards:
            self._check_cardinals()
            self.orbit_cross = np.einsum("ae,bes->abs", self.omega, self.omega[:, plus.T])
            self.orbit_cross = self.orbit_cross + self.orbit_cross[:, :, (-np.arange(v)) % v]
        if cfg.lambda_target is not None:
            self.fixed_lam = cfg.lambda_target
        elif self.fixed_cards:
            self.fixed_lam = sum(cfg.cardinal_targets) - v
        else:
            self.fixed_lam = None

    def cross(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        c = a @ b[self._plus.T]  # c[s] = sum_j a[j] b[j+s]
        return c + c[(-np.arange(self.v)) % self.v]

    def cross_all(self, x: np.ndarray) -> np.ndarray:
        """cross(x, o) for every orbit o, shape (K, v)."""
        return self.omega @ (x[self._minus] + x[self._plus])

    def _check_cardinals(self) -> None:
        targets = self.cfg.cardinal_targets
        if len(targets) != 4:
            raise InfeasibleCardinals("need four cardinal targets")
        if self.cfg.skew_first_block and targets[0] != (self.v - 1) // 2:
            raise InfeasibleCardinals(
                f"a skew-type first block has {(self.v - 1) // 2} elements, not {targets[0]}"
            )
        reachable = {0}
        for s in self.sizes:
            reachable |= {r + int(s) for r in reachable}
        for k in targets:
            if k not in reachable:
                raise InfeasibleCardinals(f"{k} is not a sum of orbit sizes {sorted(set(self.sizes.tolist()))}")

    # state construction

    def state_from_sets(self, sets: Sequence[Sequence[int]]) -> SearchState:
        members = np.zeros((4, self.K), dtype=bool)
        for i, J in enumerate(sets):
            members[i, list(J)] = True
        return self._state(members)

    def _state(self, members: np.ndarray) -> SearchState:
        corr = np.array(
            [autocorrelation(members[i].astype(np.int64) @ self.omega) for i in range(4)]
        ).reshape(4, self.v)
        return SearchState(members, corr)

    def _random_subset(self, rng: np.random.Generator, target: int) -> np.ndarray:
        order = rng.permutation(self.K)
        sizes = self.sizes[order]
        # suffix[i] = sums reachable with orbits order[i:]
        suffix = [set() for _ in range(self.K + 1)]
        suffix[self.K] = {0}
        for i in range(self.K - 1, -1, -1):
            suffix[i] = suffix[i + 1] | {r + int(sizes[i]) for r in suffix[i + 1]}
        chosen = np.zeros(self.K, dtype=bool)
        left = target
        for i in range(self.K):
            take = left - int(sizes[i]) in suffix[i + 1]
            skip = left in suffix[i + 1]
            if take and (not skip or rng.random() < 0.5):
                chosen[order[i]] = True
                left -= int(sizes[i])
        return chosen

    def random_state(self, rng: np.random.Generator) -> SearchState:
        members = np.zeros((4, self.K), dtype=bool)
        first = 0
        if self.cfg.skew_first_block:
            pick = rng.integers(0, 2, size=self.pairs)
            members[0, 2 * np.arange(self.pairs) + pick] = True
            first = 1
        for i in range(first, 4):
            if self.fixed_cards:
                members[i] = self._random_subset(rng, self.cfg.cardinal_targets[i])
            else:
                members[i] = rng.random(self.K) < 0.5
        return self._state(members)

    # moves

    def candidates(self, state: SearchState) -> tuple[list[Move], np.ndarray]:
        """All moves from ``state`` in canonical order with their corr deltas."""
        moves: list[Move] = []
        deltas: list[np.ndarray] = []
        for b in range(4):
            x = state.members[b].astype(np.int64) @ self.omega
            cx = self.cross_all(x)
            inside = state.members[b]
            if b == 0 and self.cfg.skew_first_block:
                even = inside[0::2]
                rem = np.where(even, 2 * np.arange(self.pairs), 2 * np.arange(self.pairs) + 1)
                add = rem ^ 1
                d = -cx[rem] + cx[add] + self.auto[rem] + self.auto[add] - self.pair_cross
                moves.extend(Move(0, int(r), int(a)) for r, a in zip(rem, add))
                deltas.append(d)
            elif self.fixed_cards:
                ins = np.flatnonzero(inside)
                outs = np.flatnonzero(~inside)
                for r in ins:
                    same = outs[self.sizes[outs] == self.sizes[r]]
                    if same.size == 0:
                        continue
                    d = (
                        -cx[r] + cx[same] + self.auto[r] + self.auto[same]
                        - self.orbit_cross[r, same]
                    )
                    moves.extend(Move(b, int(r), int(a)) for a in same)
                    deltas.append(d)
            else:
                sign = np.where(inside, -1, 1)[:, None]
                deltas.append(sign * cx + self.auto)
                moves.extend(
                    Move(b, int(o), -1) if inside[o] else Move(b, -1, int(o)) for o in range(self.K)
                )
        if not deltas:
            return [], np.zeros((0, self.v), dtype=np.int64)
        return moves, np.vstack(deltas)

    def apply(self, state: SearchState, move: Move, delta: np.ndarray | None = None) -> SearchState:
        """New state after ``move``; the delta is recomputed when not given."""
        if delta is None:
            delta = self.move_delta(state, move)
        new = state.copy()
        if move.remove >= 0:
            new.members[move.block, move.remove] = False
        if move.add >= 0:
            new.members[move.block, move.add] = True
        new.corr[move.block] += delta
        return new

    def move_delta(self, state: SearchState, move: Move) -> np.ndarray:
        x = state.members[move.block].astype(np.int64) @ self.omega
        d = np.zeros(self.v, dtype=np.int64)
        if move.remove >= 0:
            o = self.omega[move.remove]
            d += -self.cross(x, o) + self.auto[move.remove]
            x = x - o
        if move.add >= 0:
            d += self.cross(x, self.omega[move.add]) + self.auto[move.add]
        return d

    def lam_of(self, corr_zero_total: np.ndarray | int):
        if self.fixed_lam is not None:
            return self.fixed_lam
        return corr_zero_total - self.v

    def score(self, state: SearchState) -> int:
        total = state.corr.sum(axis=0)
        lam = self.lam_of(int(total[0]))
        return int(((total[1:] - lam) ** 2).sum())

    def scores(self, state: SearchState, deltas: np.ndarray) -> np.ndarray:
        total = state.corr.sum(axis=0)[None, :] + deltas
        lam = self.lam_of(total[:, 0])
        lam = np.broadcast_to(np.asarray(lam), (len(deltas),))
        return ((total[:, 1:] - lam[:, None]) ** 2).sum(axis=1)

    # acceptance

    def lam_for(self, state: SearchState) -> int:
        return int(self.lam_of(int(state.corr[:, 0].sum())))

    def accept(self, sets: Sequence[Sequence[int]], lam: int) -> bool:
        """Independent re-verification of a zero-objective state."""
        blocks = tuple(expand(self.indexing, J) for J in sets)
        q = SdsQuadruple(self.v, blocks, lam)
        if not verify_sds(q):
            return False
        p = parameter_identities(q)
        if not (p.counting_identity and p.lambda_relation and p.sum_of_squares):
            return False
        if self.cfg.skew_first_block:
            if not (is_skew_type(blocks[0]) and index_set_is_skew(sets[0], self.indexing.pair_count)):
                return False
        if self.fixed_cards and q.cardinals != tuple(self.cfg.cardinal_targets):
            return False
        return True


def neighborhood_move(engine: Engine, state: SearchState, rng: np.random.Generator) -> SearchState:
    """Apply one move drawn uniformly from the neighbourhood of ``state``."""
    moves, deltas = engine.candidates(state)
    if not moves:
        return state.copy()
    i = int(rng.integers(len(moves)))
    return engine.apply(state, moves[i], deltas[i])


def _touches(move: Move) -> tuple[tuple[int, int], ...]:
    return tuple((move.block, o) for o in (move.remove, move.add) if o >= 0)


def run_restart(
    engine: Engine,
    restart: int,
    deadline: float | None = None,
    progress: Callable[[int, int, int], None] | None = None,
    log_every: int = 0,
) -> SearchResult:
    """One steepest-descent run seeded with ``cfg.seed + restart``."""
    cfg = engine.cfg
    rng = np.random.default_rng(cfg.seed + restart)
    if restart == 0 and cfg.initial is not None:
        state = engine.state_from_sets(cfg.initial)
    else:
        state = engine.random_state(rng)
    obj = engine.score(state)
    best_state, best_obj = state, obj
    plateau = 0
    tabu: deque[tuple[int, int]] = deque(maxlen=max(4, engine.K // 4))
    steps = 0
    while steps < cfg.max_steps_per_restart and obj > 0:
        if deadline is not None and time.monotonic() > deadline:
            break
        moves, deltas = engine.candidates(state)
        if not moves:
            break
        new = engine.scores(state, deltas)
        best = int(new.min())
        if best < obj:
            i = int(np.argmax(new == best))
            plateau = 0
        elif best == obj and plateau < cfg.plateau_cap:
            ties = [
                j for j in np.flatnonzero(new == best)
                if not any(t in tabu for t in _touches(moves[j]))
            ]
            if not ties:
                break
            i = int(ties[int(rng.integers(len(ties)))])
            plateau += 1
        else:
            break
        tabu.extend(_touches(moves[i]))
        state = engine.apply(state, moves[i], deltas[i])
        obj = best
        steps += 1
        if obj < best_obj:
            best_state, best_obj = state, obj
        if progress and log_every and steps % log_every == 0:
            progress(restart, steps, obj)
    if progress:
        progress(restart, steps, best_obj)
    sets = best_state.index_sets()
    lam = engine.lam_for(best_state)
    verified = best_obj == 0 and engine.accept(sets, lam)
    return SearchResult(sets, best_obj, verified, lam, steps, restart)


_WORKER_ENGINE: dict = {}


def _worker(args):
    cfg, restart, deadline = args
    key = repr(cfg)
    engine = _WORKER_ENGINE.get(key)
    if engine is None:
        _WORKER_ENGINE.clear()
        engine = _WORKER_ENGINE[key] = Engine(cfg)
    return run_restart(engine, restart, deadline)


def _is_duplicate(engine: Engine, found: list[SearchResult], cand: SearchResult) -> bool:
    blocks = cand.blocks(engine.indexing)
    for r in found:
        other = r.blocks(engine.indexing)
        if all(find_equivalence(a, b) is not None for a, b in zip(blocks, other)):
            return True
    return False


def run_search(
    cfg: SearchConfig,
    progress: Callable[[int, int, int], None] | None = None,
    log_every: int = 0,
) -> list[SearchResult]:
    """Random-restart local search.

    Restarts are numbered from 0 and merged in that order, so the returned
    list depends only on the configuration (unless the time budget cuts the
    run short).  Verified results are deduplicated up to blockwise affine
    equivalence.  If nothing verifies, the single best attempt is returned
    with ``verified=False``.
    """
    start = time.monotonic()
    engine = Engine(cfg)
    deadline = start + cfg.time_budget if cfg.time_budget is not None else None
    found: list[SearchResult] = []
    best: SearchResult | None = None
    total_steps = 0
    done = 0

    def consume(res: SearchResult) -> bool:
        nonlocal best, total_steps, done
        total_steps += res.steps
        done += 1
        if res.verified:
            if not _is_duplicate(engine, found, res):
                found.append(res)
        elif best is None or res.objective < best.objective:
            best = res
        return len(found) >= cfg.max_results

    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            r = 0
            stop = False
            while r < cfg.max_restarts and not stop:
                if deadline is not None and time.monotonic() > deadline:
                    break
                batch = range(r, min(r + cfg.workers, cfg.max_restarts))
                for res in pool.map(_worker, [(cfg, i, deadline) for i in batch]):
                    if progress:
                        progress(res.restart, res.steps, res.objective)
                    if consume(res):
                        stop = True
                        break
                r = batch.stop
    else:
        for r in range(cfg.max_restarts):
            if deadline is not None and time.monotonic() > deadline:
                break
            if consume(run_restart(engine, r, deadline, progress, log_every)):
                break

    elapsed = time.monotonic() - start
    out = found if found else ([best] if best is not None else [])
    for res in out:
        res.restarts = done
        res.elapsed = elapsed
    return out
