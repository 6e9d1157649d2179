"""Exact integer polynomials.

``BiPoly`` is a sparse polynomial in ``x`` and ``y`` (terms kept in ascending
``(i, j)`` order); ``UniPoly`` is a dense univariate polynomial ``c_0 + c_1 x +
...``.  Both are immutable and hashable, coefficients are Python ints.
"""
from __future__ import annotations

import json
import re
from typing import Iterable, Mapping

from .errors import PolynomialFormatError, UndefinedDegreeError


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = {k: terms[k] for k in sorted(terms) if terms[k]}
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls._raw({(i, j): c})

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return list(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    @staticmethod
    def _lift(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "BiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return BiPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return BiPoly._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by ``x^di y^dj``."""
        return BiPoly._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def degree(self, axis: str) -> int:
        if not self._terms:
            raise UndefinedDegreeError("degree of the zero polynomial")
        if axis == "x":
            return max(i for i, _ in self._terms)
        if axis == "y":
            return max(j for _, j in self._terms)
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")

    def degree_x_where(self, j: int | None = None, *, j_min: int | None = None) -> int:
        """Largest ``i`` with a nonzero ``x^i y^j`` term (or any ``j >= j_min``)."""
        if (j is None) == (j_min is None):
            raise ValueError("give exactly one of j, j_min")
        if j is not None:
            degs = [i for (i, jj) in self._terms if jj == j]
        else:
            degs = [i for (i, jj) in self._terms if jj >= j_min]
        if not degs:
            raise UndefinedDegreeError("no monomials with the requested y-degree")
        return max(degs)

    def x_slice(self, i: int) -> dict[int, int]:
        """Coefficient of ``x^i`` as a map ``j -> coefficient``."""
        return {j: c for (ii, j), c in self._terms.items() if ii == i}

    def eval(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        return render_terms([(_mono_text(i, j), c) for (i, j), c in self._terms.items()])

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"

    def to_json_obj(self) -> list[list]:
        return [[i, j, str(c)] for (i, j), c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "BiPoly":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise PolynomialFormatError(str(exc)) from None
        try:
            return cls(((int(i), int(j)), int(c)) for i, j, c in data)
        except (TypeError, ValueError) as exc:
            raise PolynomialFormatError(f"bad term list: {exc}") from None

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for c, powers in _parse_terms(text, ("x", "y")):
            k = (powers.get("x", 0), powers.get("y", 0))
            out[k] = out.get(k, 0) + c
        return cls(out)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "UniPoly":
        return cls(reversed(list(coeffs)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([c + (b[k] if k < len(b) else 0) for k, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def degree(self) -> int:
        if not self.coeffs:
            raise UndefinedDegreeError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def eval(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        # descending powers, the usual way these polynomials are printed
        terms = [(_mono_text(k, 0), c) for k, c in enumerate(self.coeffs) if c]
        return render_terms(terms[::-1])

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"

    def to_json_obj(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "UniPoly":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise PolynomialFormatError(str(exc)) from None
        try:
            return cls(int(c) for c in data)
        except (TypeError, ValueError) as exc:
            raise PolynomialFormatError(f"bad coefficient list: {exc}") from None

    @classmethod
    def parse(cls, text: str) -> "UniPoly":
        out: dict[int, int] = {}
        for c, powers in _parse_terms(text, ("x",)):
            k = powers.get("x", 0)
            out[k] = out.get(k, 0) + c
        if not out:
            return cls()
        return cls(out.get(k, 0) for k in range(max(out) + 1))


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)


def _mono_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def render_terms(terms: list[tuple[str, int]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (mono, c) in enumerate(terms):
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([a-z])(?:\^(\d+))?$")


def _parse_terms(text: str, variables: tuple[str, ...]):
    s = text.strip().replace("−", "-")
    if not s:
        raise PolynomialFormatError("empty polynomial text")
    if s == "0":
        return
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise PolynomialFormatError(f"unexpected leading text {pieces[0]!r}")
    for k in range(1, len(pieces), 2):
        sign = -1 if pieces[k] == "-" else 1
        term = pieces[k + 1].strip() if k + 1 < len(pieces) else ""
        if not term:
            raise PolynomialFormatError(f"missing term after {pieces[k]!r} in {text!r}")
        coeff = 1
        powers: dict[str, int] = {}
        for factor in term.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m or m.group(1) not in variables:
                raise PolynomialFormatError(f"bad factor {factor!r} in {text!r}")
            powers[m.group(1)] = powers.get(m.group(1), 0) + int(m.group(2) or 1)
        yield sign * coeff, powers
