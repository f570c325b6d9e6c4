"""Labelled square matrices over a fixed list of partitions.

Entries are ints or LaurentPolys.  Rendering to JSON, CSV, LaTeX and plain
text lives here so every matrix the package emits looks the same.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, List, Sequence, Union

from .exact_ring import LaurentPoly
from .partitions import Partition

Entry = Union[int, LaurentPoly]


def _is_zero(x: Entry) -> bool:
    return not x


class TransitionMatrix:
    """entries[i][j] is the entry in row labels[i], column labels[j]."""

    def __init__(self, labels: Sequence[Partition], entries: Sequence[Sequence[Entry]], name: str = ""):
        self.labels: List[Partition] = [Partition(l) for l in labels]
        self.entries: List[List[Entry]] = [list(row) for row in entries]
        self.name = name
        n = len(self.labels)
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("a transition matrix must be square and match its labels")
        self._index: Dict[Partition, int] = {l: i for i, l in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, lam: Sequence[int]) -> int:
        return self._index[Partition(lam)]

    def __getitem__(self, key) -> Entry:
        row, col = key
        return self.entries[self.index(row)][self.index(col)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.labels == other.labels and self.entries == other.entries

    def is_laurent(self) -> bool:
        return any(isinstance(x, LaurentPoly) for row in self.entries for x in row)

    def at_one(self) -> "TransitionMatrix":
        """Specialize v = 1."""
        ents = [[x.eval_one() if isinstance(x, LaurentPoly) else x for x in row] for row in self.entries]
        return TransitionMatrix(self.labels, ents, self.name)

    def transpose(self) -> "TransitionMatrix":
        n = len(self)
        return TransitionMatrix(self.labels, [[self.entries[j][i] for j in range(n)] for i in range(n)], self.name)

    def restrict(self, labels: Sequence[Sequence[int]]) -> "TransitionMatrix":
        idx = [self.index(l) for l in labels]
        return TransitionMatrix(
            [self.labels[i] for i in idx], [[self.entries[i][j] for j in idx] for i in idx], self.name
        )

    def reorder(self, labels: Sequence[Sequence[int]]) -> "TransitionMatrix":
        if sorted(map(tuple, labels)) != sorted(map(tuple, self.labels)):
            raise ValueError("reorder needs a permutation of the labels")
        return self.restrict(labels)

    def relabel(self, mapping) -> "TransitionMatrix":
        """Rename labels through a callable; entries stay in place."""
        return TransitionMatrix([mapping(l) for l in self.labels], self.entries, self.name)

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.labels != other.labels:
            raise ValueError("label mismatch")
        n = len(self)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: Entry = 0
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not _is_zero(a) and not _is_zero(b):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return TransitionMatrix(self.labels, out, self.name)

    def is_identity(self) -> bool:
        n = len(self)
        return all(self.entries[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def is_lower_unitriangular(self) -> bool:
        n = len(self)
        return all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(n) for j in range(i, n)
        )

    # -- rendering ---------------------------------------------------------
    @staticmethod
    def _cell(x: Entry) -> str:
        return str(x)

    def to_json(self) -> dict:
        def enc(x: Entry):
            return str(x) if isinstance(x, LaurentPoly) else x

        return {
            "labels": [list(l) for l in self.labels],
            "entries": [[enc(x) for x in row] for row in self.entries],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def render_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [l.label() for l in self.labels])
        for l, row in zip(self.labels, self.entries):
            w.writerow([l.label()] + [self._cell(x) for x in row])
        return buf.getvalue()

    def render_latex(self, label=None) -> str:
        """pmatrix with a leading row-label column, as in hand-typeset tables."""
        label = label or Partition.label
        lines = []
        for l, row in zip(self.labels, self.entries):
            lines.append(f"{label(l)}||&" + "&".join(self._cell(x) for x in row) + r"\cr")
        return "\\begin{pmatrix}" + "\n".join(lines) + "\n\\end{pmatrix}\n"

    def render_plain(self) -> str:
        labels = [l.label() for l in self.labels]
        cells = [[self._cell(x) for x in row] for row in self.entries]
        lw = max((len(s) for s in labels), default=1)
        cw = max((len(s) for row in cells for s in row), default=1)
        out = []
        for lab, row in zip(labels, cells):
            out.append(lab.rjust(lw) + " | " + " ".join(s.rjust(cw) for s in row))
        return "\n".join(out) + "\n"

    def render(self, fmt: str, latex_label=None) -> str:
        if fmt == "json":
            return self.render_json() + "\n"
        if fmt == "csv":
            return self.render_csv()
        if fmt == "latex":
            return self.render_latex(latex_label)
        if fmt == "plain":
            return self.render_plain()
        raise ValueError(f"unknown format {fmt!r}")


def unitriangular_inverse(m: TransitionMatrix) -> TransitionMatrix:
    """Inverse of a lower unitriangular matrix, exact over ints or LaurentPolys."""
    if not m.is_lower_unitriangular():
        raise ValueError("matrix is not lower unitriangular in its label order")
    n = len(m)
    a = m.entries
    inv: List[List[Entry]] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            acc: Entry = 0
            for k in range(j, i):
                if not _is_zero(a[i][k]) and not _is_zero(inv[k][j]):
                    acc = acc + a[i][k] * inv[k][j]
            inv[i][j] = -acc if not _is_zero(acc) else 0
    return TransitionMatrix(m.labels, inv, m.name)
