"""
Sparse commutative polynomials with integer coefficients, and square matrices
over them.

A monomial is a sorted (nonincreasing) tuple of generators, so ``h_2 h_1 h_1``
is the key ``(2, 1, 1)`` and the unit is ``()``.  Generators may be any
mutually comparable hashables: integers for the ring generated by the
complete homogeneous functions, index pairs for a generic symbolic matrix.
Determinants use cofactor expansion, which is all the sizes here need.
"""

from __future__ import annotations

from typing import Any, Hashable, Iterable, Mapping, Sequence


def _key(factors: Iterable[Hashable]) -> tuple:
    return tuple(sorted(factors, reverse=True))


class Poly:
    """Integer linear combination of monomials in commuting generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        self.terms: dict[tuple, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    k = _key(mono)
                    v = self.terms.get(k, 0) + c
                    if v:
                        self.terms[k] = v
                    else:
                        self.terms.pop(k, None)

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, g: Hashable) -> "Poly":
        return cls._raw({(g,): 1})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = _key(k1 + k2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return type(self)._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _fmt_gen(self, g) -> str:
        return str(g)

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in sorted(self.terms.items(), reverse=True):
            body = "*".join(self._fmt_gen(g) for g in mono)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


class HPolynomial(Poly):
    """Polynomial in the complete homogeneous symmetric functions ``h_1, h_2, ...``."""

    __slots__ = ()

    @classmethod
    def h(cls, k: int) -> "HPolynomial":
        """``h_k`` with ``h_0 = 1`` and ``h_k = 0`` for negative ``k``."""
        if k < 0:
            return cls._raw({})
        if k == 0:
            return cls._raw({(): 1})
        return cls._raw({(k,): 1})

    def degree_homogeneous(self) -> int | None:
        degrees = {sum(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def _fmt_gen(self, g) -> str:
        return f"h{g}"

    def to_json(self) -> list[dict]:
        return [{"h": list(m), "coeff": c} for m, c in sorted(self.terms.items(), key=lambda kv: list(kv[0]))]

    @classmethod
    def from_json(cls, data: list[dict]) -> "HPolynomial":
        return cls({tuple(d["h"]): int(d["coeff"]) for d in data})


def x_matrix(n: int) -> list[list[Poly]]:
    """Generic ``n x n`` matrix with independent entries ``x_{ij}`` (1-based)."""
    return [[Poly.gen((i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _zero_like(entry: Any):
    return type(entry).const(0) if isinstance(entry, Poly) else 0


def determinant(matrix: Sequence[Sequence[Any]]):
    """Determinant by cofactor expansion along the first row, skipping zeros."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    return _det(tuple(range(n)), tuple(range(n)), matrix, {})


def _det(rows, cols, m, memo):
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        return m[rows[0]][cols[0]]
    total = None
    r0, rest = rows[0], rows[1:]
    for idx, c in enumerate(cols):
        entry = m[r0][c]
        if not entry:
            continue
        sub = _det(rest, cols[:idx] + cols[idx + 1:], m, memo)
        if not sub:
            continue
        term = entry * sub
        if idx % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        total = _zero_like(m[rows[0]][cols[0]])
    memo[key] = total
    return total


def minor(matrix: Sequence[Sequence[Any]], rows: Iterable[int], cols: Iterable[int]):
    """Minor on 1-based row and column sets, taken in increasing order."""
    rows = sorted(rows)
    cols = sorted(cols)
    if len(rows) != len(cols):
        raise ValueError(f"row set {rows} and column set {cols} differ in size")
    n = len(matrix)
    if any(not 1 <= i <= n for i in rows + cols) or len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError(f"invalid row/column sets {rows}, {cols} for a {n}x{n} matrix")
    if not rows:
        return 1
    sub = [[matrix[i - 1][j - 1] for j in cols] for i in rows]
    return determinant(sub)


def generalized_jacobi_trudi(V: Sequence[int], U: Sequence[int]) -> list[list[HPolynomial]]:
    """The matrix ``(h_{v_i - u_j})``."""
    if len(V) != len(U):
        raise ValueError(f"row data {list(V)} and column data {list(U)} differ in length")
    for seq in (V, U):
        if any(y > x for x, y in zip(seq, seq[1:])):
            raise ValueError(f"{list(seq)} is not nonincreasing")
    return [[HPolynomial.h(v - u) for u in U] for v in V]


def jacobi_trudi(shape: Sequence[int]) -> list[list[HPolynomial]]:
    """Ordinary Jacobi-Trudi matrix ``(h_{lambda_i - i + j})``."""
    m = len(shape)
    return [[HPolynomial.h(shape[i] - i + j) for j in range(m)] for i in range(m)]
