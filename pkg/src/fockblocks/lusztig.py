"""Unipotent character labels, blocks, and Lusztig induction on labels.

Characters are integer combinations of chi_lambda.  Lusztig induction from
G_m x GL(k, q^e) is computed on e-quotients: the coefficient of chi_nu in
L_mu(chi_lambda) is eps * c, where c is the coefficient of s_mu in the product
of the skew Schur functions of the quotient components of nu over those of
lambda, and eps is the relative rim-hook sign of nu and lambda (same spin
statistic as the Fock-space operators, ``arm`` by default).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .fock import FockVector, SpinConvention, _compositions, as_spin
from .partitions import (
    EMPTY,
    Partition,
    QuotientTuple,
    _check_e,
    core_and_quotient,
    decompose_singular,
    from_core_and_quotient,
    partitions_of,
)
from .symfunc import expansion_product, partitions_containing, rim_hook_sign, skew_lr_multi

FLAVORS = ("GL", "U")


@dataclass(frozen=True)
class UnipotentLabel:
    partition: Partition
    flavor: str = "GL"

    def __post_init__(self) -> None:
        object.__setattr__(self, "partition", Partition(self.partition))
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")

    @property
    def n(self) -> int:
        return self.partition.size

    def __str__(self) -> str:
        return f"chi_{self.partition.label()}"


class CharacterVector:
    """Integer combination of unipotent characters chi_lambda of one flavor."""

    __slots__ = ("entries", "flavor")

    def __init__(self, entries: Optional[Mapping] = None, flavor: str = "GL"):
        if flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")
        self.flavor = flavor
        self.entries: Dict[Partition, int] = {}
        for lam, c in (entries or {}).items():
            if isinstance(lam, UnipotentLabel):
                lam = lam.partition
            if c:
                key = lam if isinstance(lam, Partition) else Partition(lam)
                self.entries[key] = self.entries.get(key, 0) + int(c)
        self.entries = {l: c for l, c in self.entries.items() if c}

    @classmethod
    def basis(cls, lam: Sequence[int], flavor: str = "GL") -> "CharacterVector":
        return cls({Partition(lam): 1}, flavor)

    @classmethod
    def from_fock(cls, x: FockVector, flavor: str = "GL") -> "CharacterVector":
        """|nu> -> chi_nu after specializing v = 1."""
        return cls(x.at_one(), flavor)

    def to_fock(self, e: int, d: int = 0) -> FockVector:
        return FockVector(dict(self.entries), e, d)

    def __iter__(self):
        return iter(self.entries)

    def items(self):
        return self.entries.items()

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.entries.get(Partition(lam), 0)

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if self.flavor != other.flavor:
            raise ValueError("cannot add characters of different flavors")
        out = dict(self.entries)
        for l, c in other.entries.items():
            out[l] = out.get(l, 0) + c
        return CharacterVector(out, self.flavor)

    def __neg__(self) -> "CharacterVector":
        return CharacterVector({l: -c for l, c in self.entries.items()}, self.flavor)

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        return self + (-other)

    def scale(self, k: int) -> "CharacterVector":
        return CharacterVector({l: k * c for l, c in self.entries.items()}, self.flavor)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharacterVector):
            return self.flavor == other.flavor and self.entries == other.entries
        if isinstance(other, Mapping):
            return self.entries == CharacterVector(other, self.flavor).entries
        return NotImplemented

    def support(self) -> List[Partition]:
        return sorted(self.entries, key=lambda l: (l.size, tuple(-p for p in l)))

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        out = []
        for lam in self.support():
            c = self.entries[lam]
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            term = f"{mag}chi_{lam.label()}"
            if not out:
                out.append(("-" if c < 0 else "") + term)
            else:
                out.append((" - " if c < 0 else " + ") + term)
        return "".join(out)

    def __repr__(self) -> str:
        return f"CharacterVector({str(self)!r})"

    def entries_json(self) -> Dict[str, int]:
        return {str(l): self.entries[l] for l in self.support()}

    def to_json(self) -> dict:
        return {"flavor": self.flavor, "entries": self.entries_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "CharacterVector":
        if "entries" in data:
            return cls({Partition.parse(k): v for k, v in data["entries"].items()}, data.get("flavor", "GL"))
        return cls({Partition.parse(k): v for k, v in data.items()})


def character_pairing(x: CharacterVector, y: CharacterVector) -> int:
    return sum(c * y.entries.get(l, 0) for l, c in x.entries.items())


# -- blocks ----------------------------------------------------------------------

def block_partition(n: int, e: int) -> List[Tuple[Partition, List[Partition]]]:
    """Partitions of n grouped by e-core, in order of first appearance."""
    _check_e(e)
    blocks: Dict[Partition, List[Partition]] = {}
    for lam in partitions_of(n):
        blocks.setdefault(core_and_quotient(lam, e)[0], []).append(lam)
    return list(blocks.items())


def bmm_label(lam: Sequence[int], e: int) -> QuotientTuple:
    """Label of the character of Z_e wr S_w attached to chi_lam: its e-quotient."""
    return core_and_quotient(lam, e)[1]


def multipartitions(w: int, e: int) -> List[QuotientTuple]:
    """All e-multipartitions of total size w."""
    out = []
    for sizes in _compositions(w, e):
        for comps in itertools.product(*(partitions_of(s) for s in sizes)):
            out.append(QuotientTuple(comps))
    return out


# -- Lusztig induction ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _lusztig_basis(lam: Partition, mu: Partition, e: int, statistic: str) -> Tuple[Tuple[Partition, int], ...]:
    core, quot = core_and_quotient(lam, e)
    sign_lam = rim_hook_sign(lam, e, statistic)
    out: Dict[Partition, int] = {}
    k = mu.size
    for split in _compositions(k, e):
        options = [partitions_containing(quot[i], quot[i].size + split[i]) for i in range(e)]
        for outer in itertools.product(*options):
            c = skew_lr_multi(outer, quot, mu)
            if not c:
                continue
            nu = from_core_and_quotient(core, outer, e)
            out[nu] = out.get(nu, 0) + c * sign_lam * rim_hook_sign(nu, e, statistic)
    return tuple(sorted(((n, c) for n, c in out.items() if c), reverse=True))


def lusztig_L(
    x: Union[CharacterVector, Sequence[int]],
    mu: Sequence[int],
    e: int,
    spin: Union[None, str, SpinConvention] = None,
) -> CharacterVector:
    """Lusztig induction L_mu from G_m x GL(|mu|, q^e), applied to x."""
    _check_e(e)
    if not isinstance(x, CharacterVector):
        x = CharacterVector.basis(x)
    mu = Partition(mu)
    stat = as_spin(spin).statistic
    out: Dict[Partition, int] = {}
    for lam, a in x.entries.items():
        for nu, c in _lusztig_basis(lam, mu, e, stat):
            out[nu] = out.get(nu, 0) + a * c
    return CharacterVector(out, x.flavor)


def farahat_restrict(
    x: CharacterVector,
    e: int,
    k: Optional[int] = None,
    spin: Union[None, str, SpinConvention] = None,
) -> CharacterVector:
    """Adjoint of mu -> L_mu(chi_0): the coefficient of chi_mu is <L_mu(chi_0), x>.

    Labels with a nonempty e-core contribute nothing.  When k is given every
    label must have size e*k.
    """
    _check_e(e)
    stat = as_spin(spin).statistic
    out: Dict[Partition, int] = {}
    for nu, a in x.entries.items():
        if k is not None and nu.size != e * k:
            raise ValueError(f"{nu} does not have size {e * k}")
        core, quot = core_and_quotient(nu, e)
        if core:
            # psi_e vanishes off the principal block
            continue
        sign = rim_hook_sign(nu, e, stat)
        prod: Mapping[Partition, int] = {EMPTY: 1}
        for comp in quot:
            prod = expansion_product(prod, {comp: 1})
        for mu, c in prod.items():
            out[mu] = out.get(mu, 0) + a * sign * c
    return CharacterVector(out, x.flavor)


# -- e-split Levi labels -------------------------------------------------------------

@dataclass(frozen=True)
class CuspidalPairSpec:
    """L = G_m x H(k, q^f) with the cuspidal label mu of G_m and alpha for the H factor."""

    flavor: str
    e: int
    e_eff: int
    residual_rank: int
    torus_group: str
    torus_rank: int
    torus_degree: int
    mu: Partition
    alpha: Partition

    @property
    def n(self) -> int:
        return self.residual_rank + self.torus_degree * self.torus_rank

    def factors(self) -> List[str]:
        out = []
        if self.residual_rank or not self.torus_rank:
            out.append(f"{self.flavor}({self.residual_rank},q)")
        if self.torus_rank:
            q = "q" if self.torus_degree == 1 else f"q^{self.torus_degree}"
            out.append(f"{self.torus_group}({self.torus_rank},{q})")
        return out

    def __str__(self) -> str:
        return " x ".join(self.factors())

    def to_json(self) -> dict:
        return {
            "levi": str(self),
            "flavor": self.flavor,
            "e": self.e,
            "e_effective": self.e_eff,
            "mu": list(self.mu),
            "alpha": list(self.alpha),
        }


def effective_e(e: int, flavor: str = "GL") -> Tuple[int, str, int]:
    """(e', torus group, field degree) for the torus factors of an e-split Levi."""
    if flavor == "GL":
        _check_e(e)
        return e, "GL", e
    if flavor != "U":
        raise ValueError(f"flavor must be one of {FLAVORS}")
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"e must be a positive integer, got {e!r}")
    if e % 2:
        return 2 * e, "GL", 2 * e
    if e % 4 == 2:
        return e // 2, "U", e // 2
    return e, "GL", e


def levi_spec(lam: Sequence[int], e: int, flavor: str = "GL") -> CuspidalPairSpec:
    """The Levi G_|mu| x GL(|alpha|, q^e) attached to lam = mu + e-fold alpha."""
    lam = Partition(lam)
    e_eff, group, degree = effective_e(e, flavor)
    if e_eff < 2:
        raise ValueError(f"effective modulus {e_eff} is too small")
    mu, alpha = decompose_singular(lam, e_eff)
    return CuspidalPairSpec(
        flavor=flavor,
        e=e,
        e_eff=e_eff,
        residual_rank=mu.size,
        torus_group=group,
        torus_rank=alpha.size,
        torus_degree=degree,
        mu=mu,
        alpha=alpha,
    )
