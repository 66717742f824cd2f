"""Straight-line program for the full generation word and its length tables.

The word over {sigma, tau} driving the generation of all n! permutations has
length n!-1 but collapses to O(n^2) grammar symbols:

    W0  = s
    Wk  = t . prod_{i=1..n-2} s^i W_{delta(k,i)} g_{n-2-i}
    V   = g_{n-3} . prod_{i=2..n-3} s^i W_{delta(n-3,i)} g_{n-2-i} . s^{n-1}
    SEQ = g_1^{n-2} s^2 (V t)^{n-2} V

where g_k abbreviates s^k t and delta(k, i) = min(k-1, n-2-i).  Powers are
kept as atomic symbols so the rule size bound holds by construction; the
letter stream expands them on the fly.

Rules W1..W_{n-4} carry the subtree words the path ranker needs; W_{n-3} is
emitted as well (the cycle variant builds its two-cycle words from it) but
is not referenced by SEQ.

All lengths are plain Python ints (arbitrary precision).  ``sum_kj`` is the
prefix-length function SUM(k, j): the offset, within the bunch of a height-k
seed, of the representative of its j-th son.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Mapping

from .permcore import Perm

Sym = tuple
TAU: Sym = ("t",)


def sig(k: int) -> Sym:
    return ("s", k)


def gam(k: int) -> Sym:
    return ("g", k)


def ref(name: str) -> Sym:
    return ("N", name)


@dataclass(frozen=True)
class SlpProgram:
    """Grammar over {s, t} with power symbols; one nonterminal per rule."""

    n: int
    rules: Mapping[str, tuple[Sym, ...]]
    start: str = "SEQ"

    def symbol_count(self) -> int:
        return sum(len(rhs) for rhs in self.rules.values())


@dataclass(frozen=True)
class LengthTables:
    """Expanded lengths of the grammar words, plus prefix sums.

    ``wlen[k]`` is |W_k| for k = 0..n-3 (the n-3 entry only feeds the cycle
    variant); ``wprefix[k]`` = sum of wlen[0..k]; ``bsum[k]`` =
    sum_{i<=k} (wlen[i] + n - 1) for k = 0..n-4, the stably increasing
    sequence used for fast tree descent; ``vlen`` = |V|; ``seqlen`` = |SEQ|
    = n! - 1.
    """

    n: int
    wlen: tuple[int, ...]
    wprefix: tuple[int, ...]
    bsum: tuple[int, ...]
    vlen: int
    seqlen: int

    @property
    def seg(self) -> int:
        """Length of one (V t) segment of SEQ."""
        return self.vlen + 1


def delta(k: int, i: int, n: int) -> int:
    return min(k - 1, n - 2 - i)


def build(n: int) -> tuple[SlpProgram, LengthTables]:
    """Construct the grammar and its length tables for order n (>= 4)."""
    if n < 4:
        raise ValueError(f"order must be >= 4, got {n}")

    rules: dict[str, tuple[Sym, ...]] = {"W0": (sig(1),)}
    for k in range(1, n - 2):
        rhs: list[Sym] = [TAU]
        for i in range(1, n - 1):
            rhs += [sig(i), ref(f"W{delta(k, i, n)}"), gam(n - 2 - i)]
        rules[f"W{k}"] = tuple(rhs)

    v: list[Sym] = [gam(n - 3)]
    for i in range(2, n - 2):
        v += [sig(i), ref(f"W{delta(n - 3, i, n)}"), gam(n - 2 - i)]
    v.append(sig(n - 1))
    rules["V"] = tuple(v)

    seq: list[Sym] = [gam(1)] * (n - 2) + [sig(2)]
    for _ in range(n - 2):
        seq += [ref("V"), TAU]
    seq.append(ref("V"))
    rules["SEQ"] = tuple(seq)

    # |W_k| = 1 + (n-2)(n-1) + (n-1-k) |W_{k-1}| + sum_{q<=k-2} |W_q|
    wlen = [1]
    wprefix = [1]
    for k in range(1, n - 2):
        tail = wprefix[k - 2] if k >= 2 else 0
        total = 1 + (n - 2) * (n - 1) + (n - 1 - k) * wlen[k - 1] + tail
        wlen.append(total)
        wprefix.append(wprefix[-1] + total)
    bsum = []
    acc = 0
    for k in range(n - 3):
        acc += wlen[k] + n - 1
        bsum.append(acc)

    vlen = n - 2 + (n - 1)
    for i in range(2, n - 2):
        vlen += n - 1 + wlen[delta(n - 3, i, n)]
    seqlen = 2 * (n - 2) + 2 + (n - 1) * vlen + (n - 2)
    assert vlen == n * factorial(n - 2) - 3
    assert seqlen == factorial(n) - 1

    tables = LengthTables(
        n=n,
        wlen=tuple(wlen),
        wprefix=tuple(wprefix),
        bsum=tuple(bsum),
        vlen=vlen,
        seqlen=seqlen,
    )
    return SlpProgram(n=n, rules=rules), tables


def sum_kj(tables: LengthTables, k: int, j: int) -> int:
    """SUM(k, j): offset of the j-th son's representative inside a height-k bunch.

    Equals 1 + j + sum_{i=1..j-1} (n - 1 + |W_{delta(k,i)}|); evaluated in
    O(1) from the prefix tables.
    """
    n = tables.n
    if not 1 <= k <= n - 3 or not 1 <= j <= n - 2:
        raise ValueError(f"sum_kj out of range: k={k}, j={j}, n={n}")
    head = min(j - 1, n - 1 - k)  # sons of height k-1
    total = 1 + j + (n - 1) * (j - 1) + head * tables.wlen[k - 1]
    if j - 1 > head:
        # remaining sons have heights k-2 down to n-1-j
        total += tables.wprefix[k - 2] - tables.wprefix[n - 2 - j]
    return total


def letters(prog: SlpProgram, start: str | None = None) -> Iterator[str]:
    """Lazy left-to-right expansion of a nonterminal into 's'/'t' letters.

    Uses an explicit stack of rule positions (never recursion); depth is
    bounded by the nesting of W references, i.e. O(n).
    """
    rules = prog.rules
    stack: list[tuple[tuple[Sym, ...], int]] = [(rules[start or prog.start], 0)]
    while stack:
        seq, i = stack.pop()
        while i < len(seq):
            tag = seq[i]
            i += 1
            kind = tag[0]
            if kind == "s":
                for _ in range(tag[1]):
                    yield "s"
            elif kind == "t":
                yield "t"
            elif kind == "g":
                for _ in range(tag[1]):
                    yield "s"
                yield "t"
            else:
                stack.append((seq, i))
                seq, i = rules[tag[1]], 0


def permutations(prog: SlpProgram) -> Iterator[Perm]:
    """All n! permutations, streamed in generation order."""
    from .oracle import start_perm, walk

    return walk(start_perm(prog.n), letters(prog))


def serialize(prog: SlpProgram) -> str:
    """Textual rule format: one rule per line, e.g. ``W2 -> t s1 W1 g3 ...``."""

    def fmt(sym: Sym) -> str:
        kind = sym[0]
        if kind == "t":
            return "t"
        if kind == "N":
            return sym[1]
        return f"{kind}{sym[1]}"

    names = [f"W{k}" for k in range(prog.n - 2)] + ["V", "SEQ"]
    lines = []
    for name in names:
        if name in prog.rules:
            lines.append(f"{name} -> {' '.join(fmt(s) for s in prog.rules[name])}")
    return "\n".join(lines) + "\n"
