"""Brute-force reference generator and verification reports.

``sw_next`` is the independent successor rule: given a permutation it decides
whether the Hamiltonian path leaves it by sigma or by tau, using only a local
scan.  Iterating it from the start permutation enumerates the whole path, so
it serves as the ground truth the compressed grammar, the ranker and the
unranker are all checked against at small n.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable, Iterator

from .permcore import CyclicOrder, Perm, apply_sigma, apply_tau, check_perm

MAX_NAIVE_N = 10  # 10! permutations is the most enumerate_naive will hold


def start_perm(n: int) -> Perm:
    """First permutation of the path: tau applied to (n, n-1, ..., 1)."""
    return (n - 1, n) + tuple(range(n - 2, 0, -1))


def end_perm(n: int) -> Perm:
    """Last permutation of the path: tau(sigma((n, ..., 1)))."""
    return (n - 2, n - 1) + tuple(range(n - 3, 0, -1)) + (n,)


def sw_next(p: Perm) -> str:
    """Letter ('s' or 't') by which the path leaves ``p``.

    Tau is chosen when the second entry is the cyclic successor of r, where
    r is the first element cyclically after n, skipping the single occurrence
    of the second entry; the full descending permutation (n, n-1, ..., 1) and
    permutations with n in second position always take sigma.
    """
    n = len(p)
    p2 = p[1]
    if p2 == n:
        return "s"
    if p == tuple(range(n, 0, -1)):
        return "s"
    q = p.index(n)
    i = (q + 1) % n
    if i == 1:  # position 2 holds p2 itself: jump over it
        i = 2
    r = p[i]
    return "t" if p2 == CyclicOrder(n).succ(r) else "s"


def sw_letters(n: int) -> Iterator[str]:
    """The n!-1 letters of the path, by iterating the successor rule."""
    dq = deque(start_perm(n))
    for _ in range(factorial(n) - 1):
        letter = sw_next(tuple(dq))
        yield letter
        if letter == "t":
            dq[0], dq[1] = dq[1], dq[0]
        else:
            dq.rotate(-1)


def walk(start: Perm, letters: Iterable[str]) -> Iterator[Perm]:
    """Yield ``start`` and every permutation reached by the letter stream."""
    dq = deque(start)
    yield tuple(dq)
    for letter in letters:
        if letter == "t":
            dq[0], dq[1] = dq[1], dq[0]
        elif letter == "s":
            dq.rotate(-1)
        else:
            raise ValueError(f"unknown letter {letter!r}")
        yield tuple(dq)


def enumerate_naive(n: int) -> list[Perm]:
    """The full path as a list, for 4 <= n <= 10 (memory guard)."""
    if not 4 <= n <= MAX_NAIVE_N:
        raise ValueError(f"enumerate_naive supports 4..{MAX_NAIVE_N}, got {n}")
    return list(walk(start_perm(n), sw_letters(n)))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"


@dataclass
class Report:
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    def lines(self) -> list[str]:
        out = [f"verify n={self.n}"]
        for c in self.checks:
            suffix = f"  ({c.detail})" if c.detail else ""
            out.append(f"  [{c.status}] {c.name}{suffix}")
        out.append(f"result: {'OK' if self.ok else 'FAILED'}")
        return out

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status, "counterexample": c.detail}
                for c in self.checks
            ],
        }
        return json.dumps(payload, indent=2)


def _first_mismatch(a: Iterable, b: Iterable) -> int | None:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return None


def verify(n: int, program=None, roundtrip_samples: int | None = None,
           shards: int = 1, rng_seed: int = 0) -> Report:
    """Run the oracle suite for one order and collect a report.

    ``program`` overrides the grammar under test (used to demonstrate fault
    localisation); ``roundtrip_samples`` bounds the number of rank/unrank
    round trips (default: exhaustive up to 7!, sampled above);
    ``shards`` splits the stream comparison into rank ranges, each shard
    re-deriving its start permutation by unranking.
    """
    from . import ranker, slpseq, unranker

    if not 4 <= n <= MAX_NAIVE_N:
        raise ValueError(f"verify supports 4..{MAX_NAIVE_N}, got {n}")
    report = Report(n)
    total = factorial(n)

    path = enumerate_naive(n)
    report.add("count", len(path) == total, f"{len(path)} permutations")
    report.add("distinct", len(set(path)) == total)
    endpoints = path[0] == start_perm(n) and path[-1] == end_perm(n)
    report.add("endpoints", endpoints, f"{path[0]} .. {path[-1]}")

    if program is None:
        program, tables = slpseq.build(n)
    else:
        _, tables = slpseq.build(n)
    mismatch = _first_mismatch(sw_letters(n), slpseq.letters(program))
    slp_count = sum(1 for _ in slpseq.letters(program))
    if mismatch is None and slp_count != total - 1:
        mismatch = min(slp_count, total - 1)
    report.add(
        "slp-letters",
        mismatch is None,
        "" if mismatch is None else f"first mismatching letter index {mismatch}",
    )

    if roundtrip_samples is None:
        roundtrip_samples = total if total <= 5040 else 2000
    step = max(1, total // roundtrip_samples)
    ranks = range(0, total, step)
    bad = None
    for lo in range(shards):
        for t in list(ranks)[lo::shards]:
            p = unranker.unrank(n, t, tables)
            if p != path[t]:
                bad = f"unrank({t}) = {p}, path says {path[t]}"
                break
            if ranker.rank(p, tables) != t:
                bad = f"rank({p}) != {t}"
                break
        if bad:
            break
    report.add("rank-unrank", bad is None, bad or f"{len(ranks)} ranks checked")
    return report
