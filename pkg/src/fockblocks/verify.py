"""Property suites run by ``fockblocks verify``.

Each suite returns a list of CaseResult in a fixed order, so reports are
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Union

from .canonical import decomposition_matrix, steinberg_factor, brauer_as_lusztig
from .fock import LEG, FockVector, SpinConvention, _tile_strip, apply_S, as_spin, ribbon_strips
from .lusztig import CharacterVector, block_partition, bmm_label, lusztig_L, multipartitions
from .partitions import (
    Partition,
    charge_to_core,
    core_and_quotient,
    core_to_charge,
    e_cores,
    from_core_and_quotient,
    is_e_regular,
    partitions_of,
    residue_vector,
)
from .symfunc import (
    kostka_inverse_matrix,
    kostka_matrix,
    lr_coefficient,
    partitions_containing,
    plethysm_pe_schur,
    schur_times_h,
)


@dataclass(frozen=True)
class CaseResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite} {self.name}{tail}"

    def to_json(self) -> dict:
        return {"suite": self.suite, "case": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    e: int
    nmax: int
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def failures(self) -> List[CaseResult]:
        return [c for c in self.cases if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({len(self.cases)} cases)"
        return f"FAIL ({len(self.failures)} of {len(self.cases)} cases failed)"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "e": self.e,
            "nmax": self.nmax,
            "passed": self.passed,
            "summary": self.summary(),
            "cases": [c.to_json() for c in self.cases],
        }


Spin = Union[None, str, SpinConvention]


def suite_lusztig_s(e: int, nmax: int = 6, spin: Spin = None, kmax: int = 3) -> List[CaseResult]:
    """S_mu at v = 1 against Lusztig induction, for every |lambda> with |lambda| <= nmax."""
    spin = as_spin(spin)
    out = []
    for n in range(nmax + 1):
        for lam in partitions_of(n):
            for k in range(kmax + 1):
                for mu in partitions_of(k):
                    lhs = apply_S(FockVector.basis(lam, e), mu, spin).at_one()
                    rhs = lusztig_L(CharacterVector.basis(lam), mu, e, spin).entries
                    out.append(
                        CaseResult("lusztig-s", f"e={e} lambda={lam.label()} mu={mu.label()}", lhs == rhs)
                    )
    return out


def suite_steinberg(e: int, nmax: int = 8, spin: Spin = None) -> List[CaseResult]:
    """G-(lambda) = S_alpha G-(mu) at v = 1 for every e-singular lambda; also reports generic v."""
    out = []
    for n in range(1, nmax + 1):
        for lam in partitions_of(n):
            if is_e_regular(lam, e):
                continue
            chk = steinberg_factor(lam, e, spin)
            bf = brauer_as_lusztig(lam, e, spin)
            detail = (
                f"mu={chk.mu.label()} alpha={chk.alpha.label()} levi={bf.levi} "
                f"generic_v={'equal' if chk.generic else 'differs'} row={bf.expansion}"
            )
            out.append(
                CaseResult("steinberg", f"e={e} lambda={lam.label()}", chk.at_one and bf.matches, detail)
            )
    return out


def suite_blocks(e: int, nmax: int = 10) -> List[CaseResult]:
    """Blocks against e-cores, residue contents, block-diagonality of D_n, and quotient labels."""
    out = []
    for n in range(1, nmax + 1):
        blocks = block_partition(n, e)
        label = f"e={e} n={n}"
        # (a) each class is exactly the partitions with that core
        ok_a = all(core_and_quotient(l, e)[0] == core for core, ls in blocks for l in ls)
        ok_a = ok_a and sum(len(ls) for _, ls in blocks) == len(partitions_of(n))
        out.append(CaseResult("blocks", f"{label} cores", ok_a, f"{len(blocks)} blocks"))
        # (b) equal residue content iff equal core
        ps = partitions_of(n)
        res = {l: residue_vector(l, e) for l in ps}
        core = {l: core_and_quotient(l, e)[0] for l in ps}
        ok_b = all((res[a] == res[b]) == (core[a] == core[b]) for a in ps for b in ps)
        out.append(CaseResult("blocks", f"{label} residues", ok_b))
        # (c) D_n has no entries between different blocks
        dm = decomposition_matrix(n, e)
        ok_c = all(
            not dm[a, b] for a in dm.labels for b in dm.labels if core[a] != core[b]
        )
        out.append(CaseResult("blocks", f"{label} block-diagonal", ok_c))
        # (d) the e-quotient is a bijection from each block onto the multipartitions of its weight
        ok_d = True
        singletons = 0
        for c, ls in blocks:
            w = (n - c.size) // e
            labels = [bmm_label(l, e) for l in ls]
            ok_d = ok_d and sorted(labels) == sorted(multipartitions(w, e)) and len(set(labels)) == len(ls)
            singletons += len(ls) == 1
        out.append(
            CaseResult("blocks", f"{label} quotient labels", ok_d, f"{singletons} singleton blocks")
        )
    return out


def suite_roundtrips(e: int, nmax: int = 10) -> List[CaseResult]:
    """Combinatorial round trips and dual-route checks in the symmetric-function kernel."""
    out = []
    for n in range(nmax + 1):
        ok = True
        for lam in partitions_of(n):
            c, q = core_and_quotient(lam, e)
            ok = ok and from_core_and_quotient(c, q, e) == lam and lam.size == c.size + e * q.size
            ok = ok and lam.conjugate().conjugate() == lam
        out.append(CaseResult("roundtrips", f"e={e} n={n} core/quotient", ok))
    for n in range(min(nmax, 12) + 1):
        ok = all(charge_to_core(core_to_charge(c, e), e) == c for c in e_cores(n, e))
        out.append(CaseResult("roundtrips", f"e={e} n={n} charge", ok))
    for n in range(1, nmax + 1):
        k, ki = kostka_matrix(n), kostka_inverse_matrix(n)
        out.append(CaseResult("roundtrips", f"n={n} kostka inverse", (k @ ki).is_identity()))
    for n in range(nmax + 1):
        ok = True
        for lam in partitions_of(n):
            for k in range(1, nmax - n + 1):
                pieri = schur_times_h(lam, k)
                lr = {
                    nu: lr_coefficient(nu, lam, (k,)) for nu in partitions_of(n + k)
                }
                ok = ok and {nu: c for nu, c in lr.items() if c} == dict(pieri)
        out.append(CaseResult("roundtrips", f"|lambda|={n} LR against Pieri", ok))
    for n in range(1, nmax + 1):
        ok = True
        for k in range(1, n // e + 1):
            for lam in partitions_of(n - e * k):
                try:
                    strips = {st.outer for st in ribbon_strips(lam, e, k)}
                except AssertionError:
                    ok = False
                    continue
                # every tileable skew shape must be one of the generated strips
                for mu in partitions_containing(lam, n):
                    ok = ok and (len(_tile_strip(lam, mu, e)) == 1) == (mu in strips)
        out.append(CaseResult("roundtrips", f"e={e} n={n} ribbon tiling uniqueness", ok))
    for k in range(5):
        ok = True
        for mu in partitions_of(k):
            # quotient route: psi_e signs times LR coefficients
            quotient_route = dict(plethysm_pe_schur(mu, e, "leg"))
            # ribbon route: horizontal ribbon strips with Kostka inversion, from the vacuum
            ribbon_route = apply_S(FockVector.basis((), e), mu, LEG).at_one()
            ok = ok and quotient_route == ribbon_route
        out.append(CaseResult("roundtrips", f"e={e} k={k} plethysm dual route", ok))
    return out


SUITES: Dict[str, Callable[..., List[CaseResult]]] = {
    "lusztig-s": suite_lusztig_s,
    "steinberg": suite_steinberg,
    "blocks": suite_blocks,
    "roundtrips": suite_roundtrips,
}

DEFAULT_NMAX = {"lusztig-s": 6, "steinberg": 8, "blocks": 10, "roundtrips": 10}


def run_suite(name: str, e: int, nmax: Optional[int] = None, spin: Spin = None) -> List[SuiteReport]:
    """Run one suite, or every suite for ``all``."""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for s in names:
        if s not in SUITES:
            raise KeyError(s)
        n = DEFAULT_NMAX[s] if nmax is None else nmax
        kwargs = {"spin": spin} if s in ("lusztig-s", "steinberg") else {}
        reports.append(SuiteReport(s, e, n, SUITES[s](e, n, **kwargs)))
    return reports
