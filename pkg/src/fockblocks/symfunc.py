"""Integer symmetric-function coefficients in the Schur basis.

Kostka numbers come from iterated Pieri steps and their inverse from exact
unitriangular back-substitution.  Littlewood-Richardson coefficients are
counted as LR skew tableaux (lattice-word rule).  The plethysm p_e(s_mu) is
expanded through e-quotients: the coefficient of s_nu is the rim-hook sign of
nu times the LR coefficient of s_mu in the product of the quotient's Schur
functions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .matrices import TransitionMatrix
from .partitions import (
    EMPTY,
    Partition,
    QuotientTuple,
    _check_e,
    bead_count,
    beta_numbers,
    core_and_quotient,
    from_beta_numbers,
    partitions_of,
)


class SchurExpansion(dict):
    """Finitely supported map Partition -> nonzero int."""

    def __init__(self, terms: Optional[Mapping] = None):
        super().__init__()
        for lam, c in (terms or {}).items():
            if c:
                self[Partition(lam)] = int(c)

    def add(self, lam: Partition, c: int) -> None:
        s = self.get(lam, 0) + c
        if s:
            self[lam] = s
        else:
            self.pop(lam, None)

    def to_json(self) -> Dict[str, int]:
        return {str(lam): c for lam, c in sorted(self.items(), reverse=True)}


def _horizontal_strip_extensions(lam: Sequence[int], k: int) -> List[Partition]:
    """All mu with mu/lam a horizontal strip of size k."""
    base = list(lam) + [0]
    out: List[Partition] = []

    def rec(i: int, rem: int, acc: List[int]) -> None:
        if i == len(base):
            if rem == 0:
                out.append(Partition._make(p for p in acc if p))
            return
        cap = rem if i == 0 else min(rem, base[i - 1] - base[i])
        for a in range(cap, -1, -1):
            acc.append(base[i] + a)
            rec(i + 1, rem - a, acc)
            acc.pop()

    rec(0, k, [])
    return out


def schur_times_h(lam: Sequence[int], k: int) -> SchurExpansion:
    """Pieri rule: s_lam * h_k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return SchurExpansion({mu: 1 for mu in _horizontal_strip_extensions(Partition(lam), k)})


@lru_cache(maxsize=None)
def _kostka(n: int) -> Tuple[Tuple[Partition, ...], Tuple[Tuple[int, ...], ...]]:
    labels = partitions_of(n)
    idx = {l: i for i, l in enumerate(labels)}
    cols = []
    for rho in labels:
        vec: Dict[Partition, int] = {EMPTY: 1}
        for part in rho:
            nxt: Dict[Partition, int] = {}
            for lam, c in vec.items():
                for mu in _horizontal_strip_extensions(lam, part):
                    nxt[mu] = nxt.get(mu, 0) + c
            vec = nxt
        cols.append([vec.get(lam, 0) for lam in labels])
    # K[lam][rho]
    mat = tuple(tuple(cols[idx[rho]][i] for rho in labels) for i in range(len(labels)))
    return labels, mat


def kostka_matrix(n: int) -> TransitionMatrix:
    """K[lam][rho] = coefficient of s_lam in h_rho (upper unitriangular in lex-decreasing order)."""
    labels, mat = _kostka(n)
    return TransitionMatrix(labels, mat, name=f"K_{n}")


@lru_cache(maxsize=None)
def _kostka_inverse(n: int) -> Tuple[Tuple[int, ...], ...]:
    labels, K = _kostka(n)
    size = len(labels)
    # K is upper unitriangular: solve K X = I by back substitution
    inv = [[0] * size for _ in range(size)]
    for j in range(size):
        for i in range(size - 1, -1, -1):
            acc = 1 if i == j else 0
            for k in range(i + 1, size):
                if K[i][k] and inv[k][j]:
                    acc -= K[i][k] * inv[k][j]
            inv[i][j] = acc
    return tuple(tuple(r) for r in inv)


def kostka_inverse_matrix(n: int) -> TransitionMatrix:
    labels, _ = _kostka(n)
    return TransitionMatrix(labels, _kostka_inverse(n), name=f"K_{n}^-1")


def inverse_kostka(mu: Sequence[int], rho: Sequence[int]) -> int:
    """kappa_{mu,rho} with s_mu = sum_rho kappa_{mu,rho} h_rho."""
    mu, rho = Partition(mu), Partition(rho)
    if mu.size != rho.size:
        raise ValueError("inverse Kostka numbers need partitions of equal size")
    labels, _ = _kostka(mu.size)
    idx = {l: i for i, l in enumerate(labels)}
    # h = K^T s, so s = (K^-1)^T h
    return _kostka_inverse(mu.size)[idx[rho]][idx[mu]]


def inverse_kostka_row(mu: Sequence[int]) -> Dict[Partition, int]:
    """Nonzero kappa_{mu,rho} for fixed mu."""
    mu = Partition(mu)
    labels, _ = _kostka(mu.size)
    inv = _kostka_inverse(mu.size)
    j = labels.index(mu)
    return {labels[i]: inv[i][j] for i in range(len(labels)) if inv[i][j]}


# -- Littlewood-Richardson ----------------------------------------------------

def _contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def _lr(nu: Partition, lam: Partition, mu: Partition) -> int:
    if not (_contains(nu, lam) and _contains(nu, mu)):
        return 0
    # cells of nu/lam in reading order: rows top to bottom, each right to left
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, lam.part(i) - 1, -1)]
    if not cells:
        return 1
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)
    total = 0

    def rec(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        hi = filling.get((i, j + 1), len(mu))  # row weakly increases left to right
        lo = filling.get((i - 1, j), 0) + 1  # column strictly increases downward
        for x in range(lo, hi + 1):
            if counts[x] >= mu[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            filling[(i, j)] = x
            rec(pos + 1)
            del filling[(i, j)]
            counts[x] -= 1

    rec(0)
    return total


def lr_coefficient(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> int:
    """c^nu_{lam,mu}: multiplicity of s_nu in s_lam * s_mu."""
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if nu.size != lam.size + mu.size:
        raise ValueError("LR coefficient needs |nu| = |lam| + |mu|")
    return _lr(nu, lam, mu)


@lru_cache(maxsize=None)
def _product(lam: Partition, mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    if lam < mu:
        lam, mu = mu, lam
    n = lam.size + mu.size
    out = []
    for nu in partitions_of(n):
        c = _lr(nu, lam, mu) if _contains(nu, lam) and _contains(nu, mu) else 0
        if c:
            out.append((nu, c))
    return tuple(out)


def schur_product(lam: Sequence[int], mu: Sequence[int]) -> SchurExpansion:
    return SchurExpansion(dict(_product(Partition(lam), Partition(mu))))


def expansion_product(a: Mapping[Partition, int], b: Mapping[Partition, int]) -> SchurExpansion:
    out = SchurExpansion()
    for lam, x in a.items():
        for mu, y in b.items():
            for nu, c in _product(lam, mu):
                out.add(nu, x * y * c)
    return out


@lru_cache(maxsize=None)
def _skew(nu: Partition, lam: Partition) -> Tuple[Tuple[Partition, int], ...]:
    if not _contains(nu, lam):
        return ()
    k = nu.size - lam.size
    return tuple((b, c) for b in partitions_of(k) for c in [_lr(nu, lam, b)] if c)


def skew_schur(nu: Sequence[int], lam: Sequence[int]) -> SchurExpansion:
    """s_{nu/lam} = sum_beta c^nu_{lam,beta} s_beta."""
    return SchurExpansion(dict(_skew(Partition(nu), Partition(lam))))


def lr_multi(components: Sequence[Sequence[int]], mu: Sequence[int]) -> int:
    """Coefficient of s_mu in the product of the component Schur functions."""
    comps = [Partition(c) for c in components]
    mu = Partition(mu)
    if sum(c.size for c in comps) != mu.size:
        raise ValueError("component sizes must add up to |mu|")
    acc: Mapping[Partition, int] = {EMPTY: 1}
    for c in comps:
        acc = expansion_product(acc, {c: 1})
    return acc.get(mu, 0)


def skew_lr_multi(outer: Sequence[Sequence[int]], inner: Sequence[Sequence[int]], mu: Sequence[int]) -> int:
    """Coefficient of s_mu in prod_i s_{outer_i / inner_i}."""
    mu = Partition(mu)
    acc: Mapping[Partition, int] = {EMPTY: 1}
    for o, i in zip(outer, inner):
        sk = _skew(Partition(o), Partition(i))
        if not sk:
            return 0
        acc = expansion_product(acc, dict(sk))
    return acc.get(mu, 0)


# -- rim hooks, psi_e and plethysm -------------------------------------------

def rim_hook_spin_to_core(nu: Sequence[int], e: int) -> int:
    """Total leg length of one rim-hook removal sequence from nu to its e-core.

    Only the parity is independent of the removal sequence; this routine
    always slides the highest movable bead first.
    """
    _check_e(e)
    nu = Partition(nu)
    b = bead_count(nu, e)
    beads = set(beta_numbers(nu, b))
    spin = 0
    moved = True
    while moved:
        moved = False
        for x in sorted(beads, reverse=True):
            if x - e >= 0 and x - e not in beads:
                spin += sum(1 for y in beads if x - e < y < x)
                beads.remove(x)
                beads.add(x - e)
                moved = True
                break
    return spin


def rim_hook_sign(nu: Sequence[int], e: int, spin: str = "leg") -> int:
    """(-1)^(total spin) of a rim-hook tiling of nu down to its e-core.

    spin='leg' counts rows - 1 per hook; spin='arm' counts columns - 1.
    """
    s = rim_hook_spin_to_core(nu, e)
    if spin == "arm":
        s = (e - 1) * core_and_quotient(nu, e)[1].size - s
    elif spin != "leg":
        raise ValueError(f"unknown spin statistic {spin!r}")
    return -1 if s % 2 else 1


def psi_e(nu: Sequence[int], e: int, spin: str = "leg") -> Optional[Tuple[int, QuotientTuple]]:
    """(sign, e-quotient) of nu when its e-core is empty, else None (the zero value)."""
    core, quot = core_and_quotient(nu, e)
    if core:
        return None
    return rim_hook_sign(nu, e, spin), quot


@lru_cache(maxsize=None)
def _plethysm(mu: Partition, e: int, spin: str) -> Tuple[Tuple[Partition, int], ...]:
    out = []
    for nu in partitions_of(e * mu.size):
        ps = psi_e(nu, e, spin)
        if ps is None:
            continue
        sign, quot = ps
        c = lr_multi(quot, mu)
        if c:
            out.append((nu, sign * c))
    return tuple(out)


def plethysm_pe_schur(mu: Sequence[int], e: int, spin: str = "leg") -> SchurExpansion:
    """Schur expansion of p_e[s_mu] = s_mu(x_1^e, x_2^e, ...).

    With spin='arm' the rim-hook signs use column counts instead, which
    multiplies the result by (-1)^((e-1)|mu|).
    """
    _check_e(e)
    return SchurExpansion(dict(_plethysm(Partition(mu), e, spin)))


def partitions_containing(inner: Sequence[int], size: int) -> List[Partition]:
    """All partitions of the given size that contain inner."""
    inner = Partition(inner)
    return [p for p in partitions_of(size) if _contains(p, inner)]


def single_ribbon_additions(lam: Sequence[int], m: int) -> List[Tuple[Partition, int]]:
    """(mu, leg length) for every mu with mu/lam a single rim hook of size m."""
    lam = Partition(lam)
    b = len(lam) + m
    beads = beta_numbers(lam, b)
    occupied = set(beads)
    out = []
    for x in beads:
        if x + m not in occupied:
            leg = sum(1 for y in occupied if x < y < x + m)
            new = [y for y in beads if y != x] + [x + m]
            out.append((from_beta_numbers(new, b), leg))
    return out


def single_ribbon_removals(lam: Sequence[int], m: int) -> List[Tuple[Partition, int]]:
    """(mu, leg length) for every mu with lam/mu a single rim hook of size m."""
    lam = Partition(lam)
    b = len(lam)
    beads = beta_numbers(lam, b)
    occupied = set(beads)
    out = []
    for x in beads:
        if x - m >= 0 and x - m not in occupied:
            leg = sum(1 for y in occupied if x - m < y < x)
            new = [y for y in beads if y != x] + [x - m]
            out.append((from_beta_numbers(new, b), leg))
    return out


def iter_power_sum(m: int, lam: Iterable[int] = ()) -> SchurExpansion:
    """Murnaghan-Nakayama: s_lam * p_m."""
    out = SchurExpansion()
    for mu, leg in single_ribbon_additions(lam, m):
        out.add(mu, -1 if leg % 2 else 1)
    return out
