"""Laurent polynomials in one variable v with integer coefficients.

Values are immutable and kept in canonical form (no zero coefficients), so
structural equality is mathematical equality.  The bar involution sends
v to v^-1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, "LaurentPoly"]

_TERM_RE = re.compile(r"^([+-]?)\s*(\d*)\s*(\*?\s*v(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?$")


class LaurentPoly:
    """Sparse map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, terms: Union[None, int, Mapping[int, int], "LaurentPoly"] = None):
        if terms is None:
            c: Dict[int, int] = {}
        elif isinstance(terms, LaurentPoly):
            c = terms._c
        elif isinstance(terms, int):
            c = {0: terms} if terms else {}
        else:
            c = {int(k): int(a) for k, a in terms.items() if a}
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> "LaurentPoly":
        # trusted constructor: c already has no zero entries
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls._raw({0: x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection --------------------------------------------------------
    def terms(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return iter(sorted(self._c.items()))

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def is_unit(self) -> bool:
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other: Scalar) -> "LaurentPoly":
        o = LaurentPoly.coerce(other)._c
        if not o:
            return self
        r = dict(self._c)
        for k, a in o.items():
            s = r.get(k, 0) + a
            if s:
                r[k] = s
            else:
                r.pop(k, None)
        return LaurentPoly._raw(r)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -a for k, a in self._c.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({k: a * other for k, a in self._c.items()})
        o = LaurentPoly.coerce(other)._c
        r: Dict[int, int] = {}
        for i, a in self._c.items():
            for j, b in o.items():
                r[i + j] = r.get(i + j, 0) + a * b
        return LaurentPoly._raw({k: a for k, a in r.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit")
        (k, a), = self._c.items()
        return LaurentPoly._raw({-k: a})

    def divexact(self, other: Scalar) -> "LaurentPoly":
        """Exact quotient self / other; raises ArithmeticError if inexact."""
        b = LaurentPoly.coerce(other)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO
        top, low = b.degree, b.low_degree
        lead = b._c[top]
        floor = self.low_degree - low  # lowest exponent an exact quotient can have
        rem = dict(self._c)
        q: Dict[int, int] = {}
        while rem:
            k = max(rem)
            t = k - top
            if t < floor or rem[k] % lead:
                raise ArithmeticError(f"{self} is not divisible by {b}")
            c = rem[k] // lead
            q[t] = c
            for e, bb in b._c.items():
                s = rem.get(e + t, 0) - c * bb
                if s:
                    rem[e + t] = s
                else:
                    rem.pop(e + t, None)
        return LaurentPoly._raw(q)

    # -- involutions and specializations ----------------------------------
    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-k: a for k, a in self._c.items()})

    def eval_one(self) -> int:
        return sum(self._c.values())

    def evaluate(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        total: Union[int, Fraction] = 0
        for k, a in self._c.items():
            total += a * (Fraction(x) ** k if k < 0 else x ** k)
        return total

    def positive_part(self) -> "LaurentPoly":
        """Terms with strictly positive exponent."""
        return LaurentPoly._raw({k: a for k, a in self._c.items() if k > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: a for k, a in self._c.items() if k < 0})

    # -- comparison --------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- serialization -----------------------------------------------------
    def _display_order(self) -> list:
        # constant term first, then by distance from zero, negative before positive
        return sorted(self._c.items(), key=lambda t: (abs(t[0]), t[0]))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (k, a) in enumerate(self._display_order()):
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = "v" if k == 1 else f"v^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if i == 0:
                out.append(("-" if a < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> Dict[str, int]:
        return {str(k): a for k, a in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(k): int(a) for k, a in data.items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse renderings such as '1 - v^-1 + 2v^3' or '-v^(-2)'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial literal")
        chunks, cur = [], ""
        for i, ch in enumerate(s):
            # a sign opens a new term unless it belongs to an exponent
            if ch in "+-" and cur and s[i - 1] not in "^(":
                chunks.append(cur)
                cur = ""
            cur += ch
        chunks.append(cur)
        c: Dict[int, int] = {}
        for ch in chunks:
            m = _TERM_RE.match(ch)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {ch!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            exp = (int(m.group(4)) if m.group(4) is not None else 1) if m.group(3) else 0
            c[exp] = c.get(exp, 0) + sign * coef
        return cls(c)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})


def lp_mul(a: Scalar, b: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(a) * LaurentPoly.coerce(b)


def lp_bar(a: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(a).bar()


def lp_eval_one(a: Scalar) -> int:
    return LaurentPoly.coerce(a).eval_one()


def quantum_integer(k: int) -> LaurentPoly:
    """[k] = v^(k-1) + v^(k-3) + ... + v^(1-k)."""
    return LaurentPoly._raw({k - 1 - 2 * i: 1 for i in range(k)})


def quantum_factorial(k: int) -> LaurentPoly:
    out = ONE
    for j in range(2, k + 1):
        out = out * quantum_integer(j)
    return out


def lp_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: Dict[int, int] = {}
    for p in items:
        for k, a in p._c.items():
            acc[k] = acc.get(k, 0) + a
    return LaurentPoly._raw({k: a for k, a in acc.items() if a})
