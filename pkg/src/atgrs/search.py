"""Enumerating twist matrices and keeping the MDS ones."""

from __future__ import annotations

import itertools
import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .errors import SearchSpaceTooLarge
from .specio import SearchConfig
from .tgrs import CriterionKernel, MdsReport, classify_novelty

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE = 10**7


def _positions(cfg: SearchConfig) -> list[tuple]:
    return [(r, c) for r in range(cfg.k) for c in range(cfg.n - cfg.k)]


def _values(cfg: SearchConfig) -> range:
    return range(0 if cfg.allow_zero else 1, cfg.gf.q)


def _blank(cfg: SearchConfig) -> list[list[int]]:
    return [[0] * (cfg.n - cfg.k) for _ in range(cfg.k)]


def _freeze(eta) -> tuple:
    return tuple(tuple(r) for r in eta)


def search_space_size(cfg: SearchConfig) -> int:
    nv = len(_values(cfg))
    if cfg.support is not None:
        return nv ** len(cfg.support)
    npos = len(_positions(cfg))
    return sum(math.comb(npos, s) * nv**s for s in range(min(cfg.max_weight, npos) + 1))


def exhaustive_candidates(cfg: SearchConfig) -> Iterator[tuple]:
    """Odometer over the allowed positions in row-major order, last position fastest."""
    size = search_space_size(cfg)
    if size > MAX_EXHAUSTIVE:
        raise SearchSpaceTooLarge(f"{size} candidates exceeds the exhaustive limit {MAX_EXHAUSTIVE}")
    vals = _values(cfg)
    if cfg.support is not None:
        layouts = [list(cfg.support)]
    else:
        pos = _positions(cfg)
        layouts = [list(c) for s in range(min(cfg.max_weight, len(pos)) + 1) for c in itertools.combinations(pos, s)]
    for layout in layouts:
        for combo in itertools.product(vals, repeat=len(layout)):
            eta = _blank(cfg)
            for (r, c), x in zip(layout, combo):
                eta[r][c] = x
            yield _freeze(eta)


def random_candidates(cfg: SearchConfig, seed: int) -> Iterator[tuple]:
    """``cfg.samples`` distinct candidates drawn from one seeded generator."""
    rng = random.Random(seed)
    vals = _values(cfg)
    pos = _positions(cfg)
    seen = set()
    attempts = 0
    cap = search_space_size(cfg)
    while len(seen) < min(cfg.samples, cap) and attempts < 50 * cfg.samples:
        attempts += 1
        eta = _blank(cfg)
        if cfg.support is not None:
            layout = cfg.support
        else:
            weight = rng.randint(0, min(cfg.max_weight, len(pos)))
            layout = sorted(rng.sample(pos, weight))
        for r, c in layout:
            eta[r][c] = vals[rng.randrange(len(vals))]
        eta = _freeze(eta)
        if eta in seen:
            continue
        seen.add(eta)
        yield eta


_worker_kernel: dict = {}


def _kernel_for(cfg: SearchConfig) -> CriterionKernel:
    key = (cfg.gf, cfg.n, cfg.k, tuple(cfg.alpha))
    kern = _worker_kernel.get(key)
    if kern is None:
        kern = _worker_kernel[key] = CriterionKernel(cfg.gf, cfg.n, cfg.k, cfg.alpha)
    return kern


def _evaluate(cfg: SearchConfig, batch: list) -> list:
    kern = _kernel_for(cfg)
    out = []
    for eta in batch:
        if not kern.is_mds(eta):
            continue
        novelty = classify_novelty(eta)
        if cfg.novelty is not None and novelty not in cfg.novelty:
            continue
        out.append((eta, novelty))
    return out


def _batches(it: Iterator, size: int) -> Iterator[list]:
    while True:
        batch = list(itertools.islice(it, size))
        if not batch:
            return
        yield batch


def run_search(cfg: SearchConfig, jobs: int = 1, seed: int | None = None) -> dict:
    """Evaluate every candidate and return the matching ones in candidate order.

    The column multipliers ``v`` do not affect any criterion value, so they are
    only echoed in the report.
    """
    seed = cfg.seed if seed is None else seed
    if cfg.mode == "exhaustive":
        cands = exhaustive_candidates(cfg)
    else:
        cands = random_candidates(cfg, seed)
    results: list = []
    evaluated = 0
    batch_size = 2000

    def consume(parts):
        nonlocal evaluated
        for n_in, found in parts:
            evaluated += n_in
            results.extend(found)
            log.info("evaluated %d candidates, %d matches", evaluated, len(results))
            if cfg.limit is not None and len(results) >= cfg.limit:
                return True
        return False

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending = []
            for batch in _batches(cands, batch_size):
                pending.append((len(batch), pool.submit(_evaluate, cfg, batch)))
                if len(pending) >= 4 * jobs:
                    n_in, fut = pending.pop(0)
                    if consume([(n_in, fut.result())]):
                        pending = []
                        break
            else:
                consume((n_in, fut.result()) for n_in, fut in pending)
            for _, fut in pending:
                fut.cancel()
    else:
        for batch in _batches(cands, batch_size):
            if consume([(len(batch), _evaluate(cfg, batch))]):
                break
    if cfg.limit is not None:
        results = results[: cfg.limit]
    return {
        "command": "search",
        "config": cfg.to_dict(),
        "seed": seed,
        "candidates_evaluated": evaluated,
        "results": [
            dict(eta=[list(r) for r in eta], **MdsReport(True, [], "criterion", nov).to_dict())
            for eta, nov in results
        ],
    }
