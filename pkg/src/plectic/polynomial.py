"""Multivariate polynomials with exact rational coefficients.

Terms map exponent tuples (one entry per chart variable) to nonzero
Fractions; all arithmetic is exact.  These are the coefficient functions of
differential forms on a coordinate chart.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import as_exact


class Polynomial:
    """A polynomial in ``nvars`` variables over the rationals."""

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        self.nvars = nvars
        clean: dict[tuple[int, ...], object] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            c = as_exact(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: as_exact(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The coordinate function x_index (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live on different charts")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_exact(other)
            return Polynomial(self.nvars, {e: v * c for e, v in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("polynomials live on different charts")
        terms: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, index: int) -> "Polynomial":
        """Partial derivative with respect to x_index (1-based)."""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"variable index {index} out of range 1..{self.nvars}")
        terms = {}
        for e, c in self.terms.items():
            k = e[index - 1]
            if k:
                reduced = e[: index - 1] + (k - 1,) + e[index:]
                terms[reduced] = terms.get(reduced, 0) + c * k
        return Polynomial(self.nvars, terms)

    def evaluate(self, point):
        point = [as_exact(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        total = Fraction(0)
        for e, c in self.terms.items():
            value = c
            for x, k in zip(point, e):
                if k:
                    value *= x ** k
            total += value
        return total

    def compose(self, substitutions) -> "Polynomial":
        """Substitute a polynomial (on a common target chart) per variable."""
        subs = list(substitutions)
        if len(subs) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutions, got {len(subs)}")
        target = subs[0].nvars
        if any(p.nvars != target for p in subs):
            raise ValueError("substitutions live on different charts")
        result = Polynomial.zero(target)
        for e, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for p, k in zip(subs, e):
                if k:
                    term = term * p ** k
            result = result + term
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset((e, Fraction(c)) for e, c in self.terms.items())))

    def format(self, names=None) -> str:
        """Readable rendering, e.g. ``q2^2/2 - q1``."""
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.nvars + 1)]
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = Fraction(self.terms[e])
            factors = [
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(e) if k
            ]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.format()})"
