"""Permutations, seeds, and the pseudo-tree the seeds form.

A *permutation* is a tuple of the integers 1..n.  Two operations move through
the space of permutations: ``apply_sigma`` rotates one position to the left
and ``apply_tau`` swaps the first two entries.

A *seed* is an (n-1)-tuple ``(n, a2, ..., a_{n-1})`` of distinct values from
1..n whose single absent value ("missing element") equals the cyclic
successor of ``a2`` on {1..n-1}.  Inserting the missing element anywhere and
taking cyclic shifts yields the seed's *package* of n*(n-1) permutations.
Seeds are related by a parent/son relation that forms a pseudo-tree: a single
cycle of n-1 *hub* seeds with trees hanging off it.  All generation, ranking
and unranking machinery in this package navigates that tree.

Conventions:

* values are 1-based everywhere; Python indices are 0-based;
* ``height`` is capped at n-3, the value the generation grammar actually
  uses (a raw prefix scan would report n-2 for hub seeds and n-2 never
  occurs otherwise);
* the minimum supported order is n = 4.

The cycle variant of the generator reuses these functions with the
"otimes" :class:`CyclicOrder`, whose cycle is {2..n-1} with 1 grafted on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Perm = tuple[int, ...]
Seed = tuple[int, ...]


@dataclass(frozen=True)
class CyclicOrder:
    """Modified successor arithmetic used by seeds.

    ``plus`` mode: cyclic successor on {1..n-1}, so ``succ(n-1) == 1``.
    ``otimes`` mode: cyclic successor on {2..n-1} with the element 1 mapping
    into the cycle (``succ(1) == succ(n-1) == 2``); the predecessor of 2 is
    n-1 and the predecessor of 1 is undefined.
    """

    n: int
    mode: str = "plus"

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"order must be >= 4, got {self.n}")
        if self.mode not in ("plus", "otimes"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def _check(self, a: int) -> None:
        if not 1 <= a <= self.n - 1:
            raise ValueError(f"{a} outside cyclic domain 1..{self.n - 1}")

    def succ(self, a: int) -> int:
        self._check(a)
        if self.mode == "plus":
            return a % (self.n - 1) + 1
        if a in (1, self.n - 1):
            return 2
        return a + 1

    def pred(self, a: int) -> int:
        self._check(a)
        if self.mode == "plus":
            return (a - 2) % (self.n - 1) + 1
        if a == 1:
            raise ValueError("1 has no predecessor in otimes mode")
        if a == 2:
            return self.n - 1
        return a - 1

    def add(self, a: int, k: int) -> int:
        self._check(a)
        if self.mode == "plus":
            return (a - 1 + k) % (self.n - 1) + 1
        if k == 0:
            return a
        if k < 0:
            return self.sub(a, -k)
        if a == 1:
            a, k = 2, k - 1
        return (a - 2 + k) % (self.n - 2) + 2

    def sub(self, a: int, k: int) -> int:
        if self.mode == "plus":
            return self.add(a, -k)
        self._check(a)
        if k == 0:
            return a
        if k < 0:
            return self.add(a, -k)
        if a == 1:
            raise ValueError("1 has no predecessor in otimes mode")
        return (a - 2 - k) % (self.n - 2) + 2

    def desc_rank(self, anchor: int, value: int) -> int:
        """Position of ``value`` in the descending chain anchored at ``anchor``.

        The chain is ``anchor, pred(anchor), pred(pred(anchor)), ...`` and the
        returned rank is 0 for the anchor itself.  In otimes mode the element
        1 is placed in front of the chain as the minimal element, and an
        anchor of 1 behaves like an anchor of 2.
        """
        if self.mode == "plus":
            self._check(anchor)
            self._check(value)
            return (anchor - value) % (self.n - 1)
        if value == 1:
            return 0
        if anchor == 1:
            anchor = 2
        return 1 + (anchor - value) % (self.n - 2)


def cyc_succ(a: int, order: CyclicOrder) -> int:
    return order.succ(a)


def cyc_pred(a: int, order: CyclicOrder) -> int:
    return order.pred(a)


def cyc_add_k(a: int, k: int, order: CyclicOrder) -> int:
    return order.add(a, k)


# ---------------------------------------------------------------------------
# permutations


def check_perm(p: Iterable[int]) -> Perm:
    """Validate and normalise a permutation of 1..n to a tuple."""
    t = tuple(p)
    n = len(t)
    if n < 1 or set(t) != set(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {t}")
    return t


def apply_sigma(p: Perm) -> Perm:
    """Rotate left by one: (a1,a2,...,an) -> (a2,...,an,a1)."""
    return p[1:] + p[:1]


def apply_tau(p: Perm) -> Perm:
    """Swap the first two entries."""
    return (p[1], p[0]) + p[2:]


def apply_letter(p: Perm, letter: str) -> Perm:
    if letter == "s":
        return apply_sigma(p)
    if letter == "t":
        return apply_tau(p)
    raise ValueError(f"unknown letter {letter!r}")


def apply_word(p: Perm, word: Iterable[str]) -> Iterator[Perm]:
    """Yield ``p`` and then the image after each successive letter of ``word``.

    Letters are ``'s'`` (sigma) and ``'t'`` (tau), applied left to right.
    """
    yield p
    for letter in word:
        p = apply_letter(p, letter)
        yield p


def rotate_left(p: Perm, k: int) -> Perm:
    k %= len(p)
    return p[k:] + p[:k]


def rotate_right(p: Perm, k: int) -> Perm:
    return rotate_left(p, -k)


def parse_perm(text: str) -> Perm:
    """Parse the space-separated decimal text form, e.g. ``"3 1 2"``."""
    try:
        values = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"malformed permutation text: {text!r}") from None
    return check_perm(values)


def format_perm(p: Iterable[int]) -> str:
    return " ".join(str(v) for v in p)


# ---------------------------------------------------------------------------
# seeds


def _order_for(s: Seed, order: CyclicOrder | None) -> CyclicOrder:
    return order if order is not None else CyclicOrder(len(s) + 1)


def check_seed(s: Iterable[int], order: CyclicOrder | None = None) -> Seed:
    """Validate a seed: (n, a2, ..., a_{n-1}) missing exactly succ(a2)."""
    t = tuple(s)
    n = len(t) + 1
    if n < 4:
        raise ValueError(f"seed order must be >= 4, got {n}")
    if t[0] != n:
        raise ValueError(f"seed must start with n={n}: {t}")
    absent = set(range(1, n + 1)) - set(t)
    if len(set(t)) != n - 1 or len(absent) != 1:
        raise ValueError(f"seed entries must be n-1 distinct values of 1..{n}: {t}")
    ordr = _order_for(t, order)
    if absent != {ordr.succ(t[1])}:
        raise ValueError(f"missing element of {t} is not succ(a2)")
    return t


def mis(s: Seed, order: CyclicOrder | None = None) -> int:
    """The unique element of 1..n absent from the seed (= succ(a2))."""
    return _order_for(s, order).succ(s[1])


def seed_perms(s: Seed, order: CyclicOrder | None = None) -> set[Perm]:
    """The package of ``s``: every insertion of the missing element, rotated.

    Quadratic size; intended for tests and small-n verification.
    """
    x = mis(s, order)
    out: set[Perm] = set()
    for i in range(len(s) + 1):
        base = s[:i] + (x,) + s[i:]
        for k in range(len(base)):
            out.add(rotate_left(base, k))
    return out


def seed_reps(s: Seed, order: CyclicOrder | None = None) -> tuple[Perm, list[Perm]]:
    """Representative and connecting permutations of a seed.

    Returns ``(rep, [p1, ..., p_{n-1}])`` where ``rep`` is the missing
    element inserted right after n, and ``p_i`` is the missing element
    prepended to the seed rotated right by i-1.
    """
    x = mis(s, order)
    rep = (s[0], x) + s[1:]
    reps = [(x,) + rotate_right(s, i - 1) for i in range(1, len(s) + 1)]
    return rep, reps


def seed_rep(s: Seed, order: CyclicOrder | None = None) -> Perm:
    """The package representative: missing element inserted after n."""
    return (s[0], mis(s, order)) + s[1:]


def rotate_to_front(p: Perm, value: int) -> Perm:
    return rotate_left(p, p.index(value))


def seeds_of(p: Perm, order: CyclicOrder | None = None) -> list[Seed]:
    """The identifiers of every package containing ``p``, parent first.

    Every permutation belongs to one or two packages.  Two are returned
    exactly when, in the rotation starting with n, the second element is the
    successor of the third; the first entry is then the parent of the second.
    """
    n = len(p)
    ordr = order if order is not None else CyclicOrder(n)
    rho = rotate_to_front(p, n)
    x = ordr.succ(rho[1])
    j = rho.index(x)
    out = [rho[:j] + rho[j + 1 :]]
    if rho[1] == ordr.succ(rho[2]):
        out.append((rho[0],) + rho[2:])
    return out


def height(s: Seed, order: CyclicOrder | None = None) -> int:
    """Length of the descending prefix of the tail, capped at n-3.

    The scan counts the longest prefix a2, a3, ... with each entry the
    successor of the next.  Hub seeds are the only ones whose whole tail
    descends; they are capped at n-3, the height at which the grammar
    treats them.
    """
    ordr = _order_for(s, order)
    n = len(s) + 1
    k = 1
    while k < n - 2 and s[k] == ordr.succ(s[k + 1]):
        k += 1
    return min(k, n - 3)


def delta(k: int, i: int, n: int) -> int:
    """Height of the i-th son of a height-k seed: min(k-1, n-2-i)."""
    if k < 1 or not 1 <= i <= n - 2:
        raise ValueError(f"delta out of range: k={k}, i={i}, n={n}")
    return min(k - 1, n - 2 - i)


def parent(s: Seed, order: CyclicOrder | None = None) -> Seed:
    """The parent seed: missing element moves to the front of the tail.

    Defined for every seed; on hub seeds it steps around the hub cycle.
    """
    ordr = _order_for(s, order)
    x = ordr.succ(s[1])
    drop = ordr.succ(x)
    tail = tuple(v for v in s[1:] if v != drop)
    return (s[0], x) + tail


def son(s: Seed, i: int, order: CyclicOrder | None = None) -> Seed:
    """The i-th son: drop a2, insert the missing element i places from the end."""
    n = len(s) + 1
    if not 1 <= i <= n - 3:
        raise ValueError(f"son index must be in 1..{n - 3}, got {i}")
    if height(s, order) <= 1:
        raise ValueError(f"seed {s} has height 1 and therefore no sons")
    x = mis(s, order)
    tail = s[2:]
    cut = len(tail) - (i - 1)
    return (s[0],) + tail[:cut] + (x,) + tail[cut:]


def ord_in_parent(s: Seed, order: CyclicOrder | None = None) -> int:
    """Which son of its parent this seed is.

    Equals the position, counted from the right, of the successor of the
    missing element.
    """
    ordr = _order_for(s, order)
    target = ordr.succ(ordr.succ(s[1]))
    return len(s) - s.index(target)


def connector(s: Seed, j: int, order: CyclicOrder | None = None) -> Perm:
    """The permutation starting with n whose missing element sits j from the end.

    For j <= n-3 this is the representative of ``son(s, j)``; j = n-2 gives
    the pseudo-representative swept by the final loop of the seed's package.
    """
    n = len(s) + 1
    if not 1 <= j <= n - 2:
        raise ValueError(f"connector index must be in 1..{n - 2}, got {j}")
    x = mis(s, order)
    cut = n - 1 - j
    return s[:cut] + (x,) + s[cut:]


# ---------------------------------------------------------------------------
# plus-mode tree geometry (hub cycle, levels, anchors)


def dec_seq(s: Seed) -> tuple[int, ...]:
    """The descending value chain of the seed.

    Starting at a2, repeatedly look for the predecessor value strictly to
    the right of the previous link; the collected values form the chain.
    """
    ordr = CyclicOrder(len(s) + 1)
    pos = {v: i for i, v in enumerate(s)}
    chain = [s[1]]
    at = 1
    while True:
        nxt = ordr.pred(chain[-1])
        i = pos.get(nxt)
        if i is None or i <= at:
            return tuple(chain)
        chain.append(nxt)
        at = i


def level(s: Seed) -> int:
    """Distance-to-hub measure: n - len(dec_seq) - 2.

    Hub seeds have level 0, seeds whose parent is a hub have level 1, and in
    general the parent chain from a seed to its tree root has level-1 steps.
    """
    return len(s) + 1 - len(dec_seq(s)) - 2


def is_hub(s: Seed, order: CyclicOrder | None = None) -> bool:
    """True for the n-1 seeds on the cycle of the pseudo-tree.

    In plus mode the whole tail descends; in otimes mode the tail is a
    descending chain over {2..n-1} followed by the element 1.
    """
    ordr = _order_for(s, order)
    if ordr.mode == "plus":
        return all(s[k] == ordr.succ(s[k + 1]) for k in range(1, len(s) - 1))
    if s[-1] != 1 or s[1] == 1:
        return False
    return all(s[k] == s[k + 1] + 1 or (s[k] == 2 and s[k + 1] == ordr.n - 1)
               for k in range(1, len(s) - 2))


def hub_seed(n: int, b: int, order: CyclicOrder | None = None) -> Seed:
    """The hub seed whose tail starts with ``b``."""
    ordr = order if order is not None else CyclicOrder(n)
    if ordr.mode == "plus":
        return (n,) + tuple(ordr.add(b, -k) for k in range(n - 2))
    return (n,) + tuple(ordr.sub(b, k) for k in range(n - 3)) + (1,)


def hub_seeds(n: int) -> list[Seed]:
    """All hub seeds, in the order their segments appear in the generation.

    The first segment belongs to the hub with tail head n-1; subsequent
    segments step the head through 1, 2, ..., n-2.
    """
    heads = [n - 1] + list(range(1, n - 2))
    return [hub_seed(n, b) for b in heads]


def hub(s: Seed) -> Seed:
    """The hub seed whose tree contains ``s`` (closed form, plus mode)."""
    if is_hub(s):
        raise ValueError(f"{s} is a hub seed")
    n = len(s) + 1
    b = CyclicOrder(n).add(s[1], level(s))
    return hub_seed(n, b)


def anchor(s: Seed) -> Seed:
    """The highest non-hub ancestor of ``s`` (a son of ``hub(s)``)."""
    if is_hub(s):
        raise ValueError(f"{s} is a hub seed")
    for _ in range(level(s) - 1):
        s = parent(s)
    return s
