"""Bar involution, canonical bases and decomposition matrices.

The bar involution is the unique semilinear map on the Fock space that fixes
|0>, commutes with every f_r, and fixes the highest-weight vectors
V_rho|0> (``leg`` spin).  It is computed degree by degree.  For most
partitions lambda there is a removable node b of some residue r with no
addable r-node above it; then f_r|lambda - b> = v^N|lambda> + (terms strictly
lower in dominance), which expresses bar|lambda> through degree n-1 and
earlier partitions with no division.  The remaining partitions (few) are
solved for with the relations coming from all f_r|nu> and from the
highest-weight vectors, by fraction-free elimination with exact division at
the end.

G+(lambda) is the bar-invariant vector |lambda> + sum v Z[v] |mu>, found by the
usual triangular elimination.  D[mu][lambda] is the coefficient of |mu> in
G+(lambda) at v = 1.  G-(lambda) is row lambda of D(v^-1)^-1; at v = 1 these rows
form D^-1, i.e. Brauer characters written in terms of unipotent characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .exact_ring import ONE, ZERO, LaurentPoly
from .fock import LEG, FockVector, SpinConvention, apply_f, apply_S, apply_V_rho
from .lusztig import CharacterVector, CuspidalPairSpec, block_partition, levi_spec, lusztig_L
from .matrices import TransitionMatrix, unitriangular_inverse
from .partitions import (
    EMPTY,
    Partition,
    _check_e,
    addable_nodes,
    conjugate,
    core_and_quotient,
    decompose_singular,
    partitions_of,
    remove_node,
    removable_nodes,
)


class BarConstructionError(RuntimeError):
    """The relations available in some degree did not determine the bar involution."""


# -- bar involution ------------------------------------------------------------------

_Rep = Tuple[FockVector, Dict[Partition, LaurentPoly]]  # known part, coefficients of unknowns


def _good_node(lam: Partition, e: int) -> Optional[Tuple[int, int]]:
    """A removable node with no addable node of the same residue in an earlier row."""
    add = addable_nodes(lam)
    for i, j in removable_nodes(lam):
        r = (j - i) % e
        if not any(a < i and (b - a) % e == r for a, b in add):
            return (i, j)
    return None


def _substitute(x: FockVector, rep: Dict[Partition, _Rep], e: int) -> _Rep:
    """bar(x) in terms of the representations of bar on the degree-n basis."""
    known = FockVector.zero(e)
    coeffs: Dict[Partition, LaurentPoly] = {}
    for mu, c in x.entries.items():
        cb = c.bar()
        k, u = rep[mu]
        if k:
            known = known + k.scale(cb)
        for w, a in u.items():
            s = coeffs.get(w, ZERO) + cb * a
            if s:
                coeffs[w] = s
            else:
                coeffs.pop(w, None)
    return known, coeffs


def _solve(unknown: List[Partition], rows: List[_Rep], n: int, e: int) -> Dict[Partition, FockVector]:
    """Solve sum_w M[w] X_w = R for the unknown images X_w.

    Each row is (R, M).  Fraction-free elimination keeps everything in
    Z[v, v^-1]; back substitution divides exactly.
    """
    pivots = []
    rows = [(r, dict(m)) for r, m in rows if m]
    for w in unknown:
        cand = [i for i, (_, m) in enumerate(rows) if w in m]
        if not cand:
            missing = ", ".join(str(u) for u in unknown if u not in {p[0] for p in pivots})
            raise BarConstructionError(
                f"degree {n}, e={e}: relations do not determine bar on |{missing}>"
            )
        i = min(cand, key=lambda i: (len(rows[i][1][w]), len(rows[i][1])))
        pr, pm = rows.pop(i)
        a = pm[w]
        new_rows = []
        for r, m in rows:
            if w in m:
                c = m.pop(w)
                m2 = {}
                for key in set(m) | set(pm):
                    if key == w:
                        continue
                    val = a * m.get(key, ZERO) - c * pm.get(key, ZERO)
                    if val:
                        m2[key] = val
                r2 = r.scale(a) - pr.scale(c)
                if m2:
                    new_rows.append((r2, m2))
                elif r2:
                    raise BarConstructionError(f"degree {n}, e={e}: inconsistent relations")
            else:
                new_rows.append((r, m))
        rows = new_rows
        pivots.append((w, pr, pm))
    solution: Dict[Partition, FockVector] = {}
    for w, pr, pm in reversed(pivots):
        r = pr
        for key, c in pm.items():
            if key != w:
                r = r - solution[key].scale(c)
        try:
            solution[w] = FockVector._raw({l: c.divexact(pm[w]) for l, c in r.entries.items()}, e)
        except ArithmeticError as exc:
            raise BarConstructionError(f"degree {n}, e={e}: non-integral image for |{w}>") from exc
    return solution


class _BarTable:
    """bar|lambda> for all partitions of degrees 0..n, one table per e."""

    def __init__(self, e: int):
        self.e = e
        self.images: List[Dict[Partition, FockVector]] = [{EMPTY: FockVector.basis(EMPTY, e)}]

    def extend_to(self, n: int) -> None:
        while len(self.images) <= n:
            self._next_degree()

    def _next_degree(self) -> None:
        e = self.e
        n = len(self.images)
        lower = self.images[n - 1]
        rep: Dict[Partition, _Rep] = {}
        unknown: List[Partition] = []
        for lam in sorted(partitions_of(n)):  # lex increasing refines dominance
            node = _good_node(lam, e)
            if node is None:
                unknown.append(lam)
                rep[lam] = (FockVector.zero(e), {lam: ONE})
                continue
            r = (node[1] - node[0]) % e
            low = remove_node(lam, node[0])
            fx = apply_f(FockVector.basis(low, e), r)
            lead = fx.entries.pop(lam)  # a power of v; the rest is dominance-lower
            k, u = _substitute(fx, rep, e)
            known = apply_f(lower[low], r) - k
            inv = lead.bar().unit_inverse()
            rep[lam] = (known.scale(inv), {w: -(a * inv) for w, a in u.items()})
        solution: Dict[Partition, FockVector] = {}
        if unknown:
            rows: List[_Rep] = []
            for nu in partitions_of(n - 1):
                for r in range(e):
                    fx = apply_f(FockVector.basis(nu, e), r)
                    if not fx:
                        continue
                    k, u = _substitute(fx, rep, e)
                    if u:
                        rows.append((apply_f(lower[nu], r) - k, u))
            if n % e == 0:
                for rho in partitions_of(n // e):
                    hw = apply_V_rho(FockVector.basis(EMPTY, e), rho, LEG)
                    k, u = _substitute(hw, rep, e)
                    if u:
                        rows.append((hw - k, u))
            solution = _solve(unknown, rows, n, e)
        images: Dict[Partition, FockVector] = {}
        for lam in partitions_of(n):
            k, u = rep[lam]
            x = k
            for w, a in u.items():
                x = x + solution[w].scale(a)
            images[lam] = x
        self.images.append(images)


_TABLES: Dict[int, _BarTable] = {}


def bar_images(n: int, e: int) -> Dict[Partition, FockVector]:
    """bar|lambda> for every lambda of n."""
    _check_e(e)
    if n < 0:
        raise ValueError("n must be non-negative")
    table = _TABLES.setdefault(e, _BarTable(e))
    table.extend_to(n)
    return table.images[n]


def bar(x: FockVector) -> FockVector:
    """The bar involution applied to an arbitrary vector."""
    out = FockVector.zero(x.e, x.d)
    for lam, c in x.entries.items():
        out = out + bar_images(lam.size, x.e)[lam].scale(c.bar())
    return out


def bar_matrix(n: int, e: int) -> TransitionMatrix:
    """entries[i][j] = coefficient of |labels[i]> in bar|labels[j]>, labels lex-decreasing."""
    images = bar_images(n, e)
    labels = list(partitions_of(n))
    ents = [[images[col].coefficient(row) for col in labels] for row in labels]
    return TransitionMatrix(labels, ents, name=f"bar_{n}")


# -- canonical bases -------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalVector:
    label: Partition
    vector: FockVector

    def at_one(self) -> Dict[Partition, int]:
        return self.vector.at_one()


def conjugate_order(n: int) -> List[Partition]:
    """A second linear extension of dominance (decreasing): by conjugate, lex increasing."""
    return sorted(partitions_of(n), key=lambda l: tuple(conjugate(l)))


@lru_cache(maxsize=None)
def _plus_all(n: int, e: int, order: Tuple[Partition, ...]) -> Dict[Partition, Dict[Partition, LaurentPoly]]:
    images = bar_images(n, e)
    block_of = {lam: core_and_quotient(lam, e)[0] for lam in order}
    out: Dict[Partition, Dict[Partition, LaurentPoly]] = {}
    for pos, lam in enumerate(order):
        coeffs: Dict[Partition, LaurentPoly] = {lam: ONE}
        for mu in order[pos + 1:]:
            if block_of[mu] != block_of[lam]:
                continue
            r = ZERO
            for nu, d in coeffs.items():
                b = images[nu].entries.get(mu)
                if b is not None:
                    r = r + d.bar() * b
            if not r:
                continue
            if r.coefficient(0) or r.bar() != -r:
                raise BarConstructionError(f"elimination failed at {lam} / {mu}: {r}")
            coeffs[mu] = r.positive_part()
        out[lam] = coeffs
    return out


def canonical_plus_all(n: int, e: int, order: Optional[Sequence[Partition]] = None) -> Dict[Partition, FockVector]:
    """G+(lambda) for all lambda of n; order must be a linear extension of dominance, largest first."""
    order_t = tuple(Partition(l) for l in (order if order is not None else partitions_of(n)))
    if sorted(order_t) != sorted(partitions_of(n)):
        raise ValueError("order must list every partition of n once")
    raw = _plus_all(n, e, order_t)
    return {lam: FockVector._raw(dict(c), e) for lam, c in raw.items()}


def canonical_plus(lam: Sequence[int], e: int) -> CanonicalVector:
    lam = Partition(lam)
    return CanonicalVector(lam, canonical_plus_all(lam.size, e)[lam])


def _generic_d(n: int, e: int) -> TransitionMatrix:
    labels = list(partitions_of(n))
    plus = _plus_all(n, e, tuple(labels))
    ents = [[plus[col].get(row, ZERO) for col in labels] for row in labels]
    return TransitionMatrix(labels, ents, name=f"D_{n}(v)")


@lru_cache(maxsize=None)
def _minus_rows(n: int, e: int) -> Dict[Partition, Dict[Partition, LaurentPoly]]:
    labels = list(partitions_of(n))
    plus = _plus_all(n, e, tuple(labels))
    rows: Dict[Partition, Dict[Partition, LaurentPoly]] = {}
    for _core, block in block_partition(n, e):
        # D(v^-1) on the block, then its inverse
        dbar = TransitionMatrix(
            block, [[plus[col].get(row, ZERO).bar() for col in block] for row in block]
        )
        inv = unitriangular_inverse(dbar)
        for i, lam in enumerate(block):
            rows[lam] = {mu: LaurentPoly.coerce(inv.entries[i][j]) for j, mu in enumerate(block) if inv.entries[i][j]}
    return rows


def canonical_minus_all(n: int, e: int) -> Dict[Partition, FockVector]:
    return {lam: FockVector(dict(r), e) for lam, r in _minus_rows(n, e).items()}


def canonical_minus(lam: Sequence[int], e: int) -> CanonicalVector:
    lam = Partition(lam)
    return CanonicalVector(lam, FockVector(dict(_minus_rows(lam.size, e)[lam]), e))


def _conjugate_labels(m: TransitionMatrix) -> TransitionMatrix:
    return m.relabel(conjugate)


def decomposition_matrix(n: int, e: int, generic: bool = False, f_rule: str = "above") -> TransitionMatrix:
    """D_n: column lambda holds G+(lambda); labels lex-decreasing.

    With f_rule='below' the mirrored Chevalley rule is used, which amounts to
    conjugating every label of the 'above' matrix.
    """
    _check_e(e)
    d = _generic_d(n, e)
    if not generic:
        d = d.at_one()
    d.name = f"D_{n}"
    return _conjugate_labels(d) if f_rule == "below" else d


def inverse_decomposition_matrix(n: int, e: int, generic: bool = False, f_rule: str = "above") -> TransitionMatrix:
    """Row lambda holds G-(lambda); at v = 1 this is D_n^-1."""
    _check_e(e)
    labels = list(partitions_of(n))
    rows = _minus_rows(n, e)
    ents = [[rows[row].get(col, ZERO) for col in labels] for row in labels]
    m = TransitionMatrix(labels, ents, name=f"E_{n}")
    if not generic:
        m = m.at_one()
    return _conjugate_labels(m) if f_rule == "below" else m


def inverse_transpose_matrix(n: int, e: int, generic: bool = False) -> TransitionMatrix:
    """E_n in the orientation of D_n: column lambda holds G-(lambda).

    At v = 1 this is the inverse transpose of D_n; generically
    D_n(v^-1) E_n(v)^T is the identity.
    """
    m = inverse_decomposition_matrix(n, e, generic=generic).transpose()
    m.name = f"E_{n}"
    return m


def block_matrix(m: TransitionMatrix, core: Sequence[int], e: int) -> TransitionMatrix:
    core = Partition(core)
    return m.restrict([l for l in m.labels if core_and_quotient(l, e)[0] == core])


# -- Steinberg factorization and Brauer characters --------------------------------------------

@dataclass(frozen=True)
class SteinbergCheck:
    lam: Partition
    mu: Partition
    alpha: Partition
    at_one: bool
    generic: bool

    @property
    def verified(self) -> bool:
        return self.at_one


def steinberg_factor(
    lam: Sequence[int], e: int, spin: Union[None, str, SpinConvention] = None
) -> SteinbergCheck:
    """Compare G-(lambda) with S_alpha G-(mu) where lambda = mu + e-fold alpha."""
    lam = Partition(lam)
    mu, alpha = decompose_singular(lam, e)
    target = canonical_minus(lam, e).vector
    if not alpha:
        return SteinbergCheck(lam, mu, alpha, True, True)
    image = apply_S(canonical_minus(mu, e).vector, alpha, spin)
    return SteinbergCheck(
        lam, mu, alpha, at_one=image.at_one() == target.at_one(), generic=image == target
    )


@dataclass(frozen=True)
class BrauerFactorization:
    lam: Partition
    levi: CuspidalPairSpec
    expansion: CharacterVector
    singular: bool
    matches: bool


def brauer_as_lusztig(
    lam: Sequence[int], e: int, spin: Union[None, str, SpinConvention] = None
) -> BrauerFactorization:
    """G-(lambda) at v = 1 as the Lusztig induction of G-(mu) x chi_alpha."""
    lam = Partition(lam)
    levi = levi_spec(lam, e)
    mu, alpha = levi.mu, levi.alpha
    base = CharacterVector.from_fock(canonical_minus(mu, e).vector)
    expansion = lusztig_L(base, alpha, e, spin)
    target = CharacterVector.from_fock(canonical_minus(lam, e).vector)
    return BrauerFactorization(lam, levi, expansion, bool(alpha), expansion == target)
