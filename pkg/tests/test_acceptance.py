"""Acceptance criteria AC1-AC8, one test each.

Every test starts from empty memo tables so the runtime limits measure a
cold computation.  AC1 and AC2 go through the installed command line.
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

import oracles
from golden import D4_E4, D4_E4_LABELS, E6_E2, E6_E2_LABELS, e6_row
from fockblocks import canonical, fock, lusztig, partitions, symfunc
from fockblocks.canonical import (
    bar,
    bar_matrix,
    canonical_minus,
    canonical_plus_all,
    decomposition_matrix,
    inverse_transpose_matrix,
)
from fockblocks.exact_ring import LaurentPoly
from fockblocks.fock import LEG, FockVector, apply_S, horizontal_strips
from fockblocks.lusztig import CharacterVector, block_partition, bmm_label, levi_spec, lusztig_L, multipartitions
from fockblocks.matrices import TransitionMatrix
from fockblocks.partitions import (
    core_and_quotient,
    decompose_singular,
    from_core_and_quotient,
    is_core,
    is_e_regular,
    partitions_of,
    residues,
)
from fockblocks.symfunc import kostka_inverse_matrix, kostka_matrix, lr_coefficient, plethysm_pe_schur


def _clear_memo_tables():
    for mod in (partitions, symfunc, fock, lusztig, canonical):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
    canonical._TABLES.clear()


@contextmanager
def within(seconds):
    _clear_memo_tables()
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def cli_json(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "fockblocks", *argv, "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def test_ac1_golden_matrix_n4_e4():
    with within(1):
        data = cli_json("decomp", "--n", "4", "--e", "4")
    assert data["labels"] == [list(l) for l in D4_E4_LABELS]
    assert data["entries"] == D4_E4


def test_ac2_golden_inverse_matrix_n6_e2():
    with within(10):
        data = cli_json("decomp", "--n", "6", "--e", "2", "--inverse")
    assert data["labels"] == [list(l) for l in E6_E2_LABELS]
    assert data["entries"] == E6_E2


def test_ac3_lusztig_rows():
    with within(10):
        row_3_3 = lusztig_L((), (3,), 2)
        rows = {
            (1,) * 6: lusztig_L((), (1, 1, 1), 2),
            (2, 2, 1, 1): lusztig_L((), (2, 1), 2),
            (2, 1, 1, 1, 1): lusztig_L(CharacterVector.from_fock(canonical_minus((2,), 2).vector), (1, 1), 2),
            (4, 1, 1): lusztig_L(CharacterVector.from_fock(canonical_minus((4,), 2).vector), (1,), 2),
        }
        minus = {lam: canonical_minus(lam, 2).at_one() for lam in [(3, 3), *rows]}
        levis = {lam: str(levi_spec(lam, 2)) for lam in ((2, 1, 1, 1, 1), (4, 1, 1))}
    assert dict(row_3_3.items()) == {(3, 3): 1, (4, 2): -1, (5, 1): 1, (6,): -1}
    assert minus[(3, 3)] == e6_row((3, 3)) == dict(row_3_3.items())
    for lam, vec in rows.items():
        assert dict(vec.items()) == e6_row(lam) == minus[lam]
    assert decompose_singular((2, 1, 1, 1, 1), 2) == ((2,), (1, 1))
    assert decompose_singular((4, 1, 1), 2) == ((4,), (1,))
    assert levis == {(2, 1, 1, 1, 1): "GL(2,q) x GL(2,q^2)", (4, 1, 1): "GL(4,q) x GL(1,q^2)"}


def test_ac4_operator_coincidence():
    failures = []
    with within(120):
        for e in (2, 3):
            for n in range(7):
                for lam in partitions_of(n):
                    for k in range(1, 4):
                        for mu in partitions_of(k):
                            left = apply_S(FockVector.basis(lam, e), mu).at_one()
                            right = dict(lusztig_L(lam, mu, e).items())
                            if left != right:
                                failures.append((e, lam, mu))
    assert failures == []


def test_ac5_steinberg_factorization():
    failures, checked = [], 0
    with within(300):
        for e in (2, 3):
            for n in range(9):
                for lam in partitions_of(n):
                    if is_e_regular(lam, e):
                        continue
                    mu, alpha = decompose_singular(lam, e)
                    image = apply_S(canonical_minus(mu, e).vector, alpha)
                    checked += 1
                    if image.at_one() != canonical_minus(lam, e).at_one():
                        failures.append((e, lam))
    assert checked > 0 and failures == []


def test_ac6_block_theory():
    failures = []
    with within(60):
        for e in (2, 3, 4):
            for n in range(11):
                ps = partitions_of(n)
                core = {lam: oracles.geometric_core(lam, e) for lam in ps}
                res = {lam: residues(lam, e) for lam in ps}
                blocks = block_partition(n, e)
                # (a) blocks are exactly the core classes
                classes = {}
                for lam in ps:
                    classes.setdefault(core[lam], set()).add(lam)
                if {c: set(b) for c, b in blocks} != classes:
                    failures.append(("a", e, n))
                # (b) equal residue content exactly when the cores agree
                for a in ps:
                    for b in ps:
                        if (res[a] == res[b]) != (core[a] == core[b]):
                            failures.append(("b", e, a, b))
                # (c) D_n is block diagonal
                d = decomposition_matrix(n, e)
                for a in ps:
                    for b in ps:
                        if core[a] != core[b] and d[a, b]:
                            failures.append(("c", e, a, b))
                # (d) the e-quotient is a bijection from each block onto P^e_w
                for c, members in blocks:
                    w = (n - sum(c)) // e
                    labels = [bmm_label(lam, e) for lam in members]
                    if sorted(labels) != sorted(multipartitions(w, e)) or len(set(labels)) != len(labels):
                        failures.append(("d", e, n, c))
    assert failures == []


def test_ac7_combinatorial_kernel():
    failures = []
    with within(300):
        for e in (2, 3, 4):
            for n in range(13):
                for lam in partitions_of(n):
                    c, q = core_and_quotient(lam, e)
                    if not (is_core(c, e) and n == c.size + e * q.size and from_core_and_quotient(c, q, e) == lam):
                        failures.append(("core/quotient", e, lam))
        for n in range(1, 11):
            if not (kostka_matrix(n) @ kostka_inverse_matrix(n)).is_identity():
                failures.append(("kostka", n))
        for n in range(10):
            for lam in partitions_of(n):
                for k in range(1, 11 - n):
                    got = {nu for nu in partitions_of(n + k) if lr_coefficient(nu, lam, (k,))}
                    if got != set(oracles.pieri(lam, k)):
                        failures.append(("lr", lam, k))
        for e in (2, 3, 4):
            for n in range(1, 11):
                for k in range(1, n // e + 1):
                    for lam in partitions_of(n - e * k):
                        brute = oracles.brute_horizontal_strips(lam, e, k)
                        if any(len(t) != 1 for t in brute.values()):
                            failures.append(("tiling", e, lam, k))
                        spins = {mu: oracles.ribbon_rows_minus_one(next(iter(t))) for mu, t in brute.items()}
                        if dict(horizontal_strips(lam, e, k)) != spins:
                            failures.append(("strips", e, lam, k))
        for e in (2, 3):
            for k in range(5):
                for mu in partitions_of(k):
                    ribbon = apply_S(FockVector.basis((), e), mu, LEG).at_one()
                    if dict(plethysm_pe_schur(mu, e, "leg")) != ribbon:
                        failures.append(("plethysm", e, mu))
    assert failures == []


def _bar_entries(m: TransitionMatrix) -> TransitionMatrix:
    return TransitionMatrix(m.labels, [[LaurentPoly.coerce(x).bar() for x in row] for row in m.entries])


def test_ac8_bar_and_canonical_axioms():
    failures = []
    with within(300):
        for e in (2, 3):
            for n in range(9):
                # bar is semilinear, so bar o bar has matrix B * conj(B)
                b = bar_matrix(n, e)
                if not (b @ _bar_entries(b)).is_identity():
                    failures.append(("bar^2", e, n))
                for lam, g in canonical_plus_all(n, e).items():
                    if bar(g) != g or g.coefficient(lam) != 1:
                        failures.append(("G+ invariant", e, lam))
                    if any(k < 1 for mu, c in g.items() if mu != lam for k, _ in c.terms()):
                        failures.append(("G+ in vZ[v]", e, lam))
                d = decomposition_matrix(n, e)
                if not (d @ inverse_transpose_matrix(n, e).transpose()).is_identity():
                    failures.append(("D E^T", e, n))
    assert failures == []
