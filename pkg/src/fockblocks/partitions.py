"""Partitions, residues, and abacus combinatorics (cores, quotients, charges).

Conventions used throughout the package:

* nodes are 0-indexed (row, column) pairs, rows counted from the top;
* the residue of node (i, j) is (j - i) mod e;
* an abacus for lambda uses b beads at positions lambda_k + b - k
  (k = 1..b), where b is the smallest multiple of e that is at least the
  number of parts; runner r holds the positions congruent to r mod e and the
  quotient components are listed in runner order.

Because b is always a multiple of e, adding e more beads shifts every runner
by one level and leaves the quotient unchanged, so quotients of partitions of
different lengths are directly comparable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction.  Partitions compare and hash
    like plain tuples, so lexicographic order is tuple order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        parts = parts[:n]
        for i, p in enumerate(parts):
            if p <= 0 or (i and parts[i - 1] < p):
                raise ValueError(f"not a partition: {parts!r}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _make(cls, parts: Iterable[int]) -> "Partition":
        # trusted fast path: parts already weakly decreasing and positive
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a literal such as "3,1" or "[3,1]"; "" is the empty partition."""
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1].strip()
        if not s:
            return EMPTY
        try:
            return cls(int(p) for p in s.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition literal {text!r}") from exc

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-indexed), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def nodes(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def label(self) -> str:
        """Exponential notation such as '41^2' or '2^21^2'; '0' for the empty partition."""
        if not self:
            return "0"
        if self[0] >= 10:
            return str(self)
        out = []
        for value, mult in _runs(self):
            out.append(str(value) if mult == 1 else f"{value}^{mult}")
        return "".join(out)

    def to_json(self) -> List[int]:
        return list(self)


EMPTY = Partition._make(())


def _runs(parts: Sequence[int]) -> List[Tuple[int, int]]:
    runs: List[Tuple[int, int]] = []
    for p in parts:
        if runs and runs[-1][0] == p:
            runs[-1] = (p, runs[-1][1] + 1)
        else:
            runs.append((p, 1))
    return runs


def _check_e(e: int) -> None:
    if not isinstance(e, int) or e < 2:
        raise ValueError(f"e must be an integer >= 2, got {e!r}")


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in lexicographically decreasing order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: List[Partition] = []

    def rec(rem: int, cap: int, acc: List[int]) -> None:
        if rem == 0:
            out.append(Partition._make(acc))
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return Partition._make(sum(1 for p in lam if p > j) for j in range(lam[0]))


def add_scaled(mu: Sequence[int], alpha: Sequence[int], e: int) -> Partition:
    """Part-wise mu + e*alpha, padding the shorter sequence with zeros."""
    n = max(len(mu), len(alpha))
    return Partition(
        (mu[i] if i < len(mu) else 0) + e * (alpha[i] if i < len(alpha) else 0)
        for i in range(n)
    )


def multiset_union(mu: Sequence[int], alpha: Sequence[int], e: int = 1) -> Partition:
    """Partition whose parts are those of mu together with e copies of each part of alpha."""
    parts = list(mu) + [a for a in alpha for _ in range(e)]
    return Partition(sorted(parts, reverse=True))


def is_e_regular(lam: Sequence[int], e: int) -> bool:
    _check_e(e)
    return all(m < e for m in Counter(lam).values())


def decompose_singular(lam: Sequence[int], e: int) -> Tuple[Partition, Partition]:
    """Split the multiplicities of lam as m = r + e*q with 0 <= r < e.

    mu collects the parts with multiplicities r (so it is e-regular), alpha the
    parts with multiplicities q, and lam = mu together with e copies of alpha.
    """
    _check_e(e)
    mu: List[int] = []
    alpha: List[int] = []
    for value, mult in _runs(lam):
        q, r = divmod(mult, e)
        mu.extend([value] * r)
        alpha.extend([value] * q)
    return Partition._make(mu), Partition._make(alpha)


def residues(lam: Sequence[int], e: int) -> Counter:
    """Multiset of node residues (j - i) mod e, as a Counter."""
    _check_e(e)
    return Counter((j - i) % e for i, row in enumerate(lam) for j in range(row))


def residue_vector(lam: Sequence[int], e: int) -> Tuple[int, ...]:
    c = residues(lam, e)
    return tuple(c.get(r, 0) for r in range(e))


def addable_nodes(lam: Sequence[int]) -> List[Tuple[int, int]]:
    """Addable nodes, top row first."""
    out = []
    for i in range(len(lam) + 1):
        row = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > row:
            out.append((i, row))
    return out


def removable_nodes(lam: Sequence[int]) -> List[Tuple[int, int]]:
    """Removable nodes, top row first."""
    out = []
    for i, row in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if row > nxt:
            out.append((i, row - 1))
    return out


def add_node(lam: Sequence[int], row: int) -> Partition:
    parts = list(lam)
    if row < len(parts):
        parts[row] += 1
    else:
        parts.append(1)
    return Partition._make(parts)


def remove_node(lam: Sequence[int], row: int) -> Partition:
    parts = list(lam)
    parts[row] -= 1
    if not parts[row]:
        parts.pop()
    return Partition._make(parts)


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam is dominated by mu (equal sizes required)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance order compares partitions of equal size")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


# -- abacus ----------------------------------------------------------------

def bead_count(lam: Sequence[int], e: int) -> int:
    """Smallest multiple of e that is >= the number of parts."""
    return -(-len(lam) // e) * e


def beta_numbers(lam: Sequence[int], b: int) -> List[int]:
    """Bead positions lambda_k + b - k for k = 1..b, decreasing."""
    if b < len(lam):
        raise ValueError("too few beads for this partition")
    return [(lam[i] if i < len(lam) else 0) + b - 1 - i for i in range(b)]


def from_beta_numbers(beads: Iterable[int], b: int) -> Partition:
    pos = sorted(beads, reverse=True)
    if len(pos) != b or len(set(pos)) != b or (pos and pos[-1] < 0):
        raise ValueError("invalid bead configuration")
    return Partition._make(p for p in (x - (b - 1 - i) for i, x in enumerate(pos)) if p > 0)


def _runner_levels(lam: Sequence[int], e: int, b: int) -> List[List[int]]:
    levels: List[List[int]] = [[] for _ in range(e)]
    for x in beta_numbers(lam, b):
        levels[x % e].append(x // e)
    return levels  # each list decreasing


def _levels_to_partition(levels: Sequence[int]) -> Partition:
    m = len(levels)
    return Partition._make(p for p in (c - (m - 1 - j) for j, c in enumerate(levels)) if p > 0)


class QuotientTuple(tuple):
    """An ordered e-tuple of partitions (an e-quotient or multipartition label)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Sequence[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        return tuple.__new__(cls, comps)

    @property
    def e(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def __str__(self) -> str:
        return "(" + ", ".join("(" + str(c) + ")" if c else "0" for c in self) + ")"

    def __repr__(self) -> str:
        return f"QuotientTuple({[tuple(c) for c in self]!r})"

    def to_json(self) -> List[List[int]]:
        return [list(c) for c in self]


@lru_cache(maxsize=None)
def _core_quotient(lam: Partition, e: int) -> Tuple[Partition, QuotientTuple]:
    b = bead_count(lam, e)
    levels = _runner_levels(lam, e, b)
    quotient = QuotientTuple(_levels_to_partition(lv) for lv in levels)
    core_beads = [r + e * l for r in range(e) for l in range(len(levels[r]))]
    return from_beta_numbers(core_beads, b), quotient


def core_and_quotient(lam: Sequence[int], e: int) -> Tuple[Partition, QuotientTuple]:
    """The e-core and e-quotient of lam (quotient in runner order)."""
    _check_e(e)
    return _core_quotient(Partition(lam), e)


def e_core(lam: Sequence[int], e: int) -> Partition:
    return core_and_quotient(lam, e)[0]


def e_quotient(lam: Sequence[int], e: int) -> QuotientTuple:
    return core_and_quotient(lam, e)[1]


def e_weight(lam: Sequence[int], e: int) -> int:
    return core_and_quotient(lam, e)[1].size


def is_core(lam: Sequence[int], e: int) -> bool:
    return e_weight(lam, e) == 0


def from_core_and_quotient(core: Sequence[int], quotient: Sequence[Sequence[int]], e: int) -> Partition:
    """Inverse of core_and_quotient."""
    _check_e(e)
    core = Partition(core)
    quotient = QuotientTuple(quotient)
    if len(quotient) != e:
        raise ValueError(f"quotient must have {e} components")
    if not is_core(core, e):
        raise ValueError(f"{core!r} is not an {e}-core")
    b = bead_count(core, e)
    counts = [len(lv) for lv in _runner_levels(core, e, b)]
    # more beads per runner until every quotient component fits
    extra = max(0, max(len(q) - c for q, c in zip(quotient, counts)))
    b += e * extra
    counts = [c + extra for c in counts]
    beads = []
    for r, (q, m) in enumerate(zip(quotient, counts)):
        for j in range(m):
            beads.append(r + e * (q.part(j) + m - 1 - j))
    return from_beta_numbers(beads, b)


@dataclass(frozen=True)
class ChargeVector:
    """Charges s_0..s_{e-1} labelling an e-core, with sum d."""

    charges: Tuple[int, ...]
    d: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "charges", tuple(int(s) for s in self.charges))
        if sum(self.charges) != self.d:
            raise ValueError(f"charges {self.charges} do not sum to d={self.d}")

    @property
    def e(self) -> int:
        return len(self.charges)

    def to_json(self) -> List[int]:
        return list(self.charges)


def core_to_charge(core: Sequence[int], e: int, d: int = 0) -> ChargeVector:
    """Runner bead counts minus the baseline m, on an abacus with e*m + d beads."""
    _check_e(e)
    core = Partition(core)
    if not is_core(core, e):
        raise ValueError(f"{core!r} is not an {e}-core")
    m = max(0, -(-(len(core) - d) // e))
    b = e * m + d
    while b < 0:
        m += 1
        b += e
    counts = [0] * e
    for x in beta_numbers(core, b):
        counts[x % e] += 1
    return ChargeVector(tuple(c - m for c in counts), d)


def charge_to_core(s: ChargeVector, e: int) -> Partition:
    _check_e(e)
    if not isinstance(s, ChargeVector):
        s = ChargeVector(tuple(s), sum(s))
    if s.e != e:
        raise ValueError(f"charge vector has {s.e} entries, expected {e}")
    m = max(0, -min(s.charges))
    b = e * m + s.d
    beads = [r + e * l for r, c in enumerate(s.charges) for l in range(c + m)]
    return from_beta_numbers(beads, b)


def e_cores(max_size: int, e: int) -> List[Partition]:
    """All e-cores of size at most max_size."""
    return [lam for n in range(max_size + 1) for lam in partitions_of(n) if is_core(lam, e)]
