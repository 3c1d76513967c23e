"""Sparse exact symmetric functions in the elementary basis.

An :class:`ESymFunc` is a homogeneous symmetric function stored as a map from
partitions (weakly decreasing tuples) to exact rational coefficients.  The
product rule is multiset union of parts, since e_lambda * e_mu = e_{lambda mu}.

Coefficients are :class:`fractions.Fraction` throughout: several closed-form
expansions carry fractional coefficients mid-sum even though every final
chromatic symmetric function has integer coefficients.

Values are immutable once constructed; operations return new values.  The
power-sum conversion memo is only ever filled idempotently, so concurrent
reads and fills are safe under the interpreter lock.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .compositions import Partition, rho

Scalar = int | Fraction


class ESymFunc:
    """Homogeneous symmetric function in the e-basis with exact coefficients."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None,
                 degree: int | None = None):
        clean: dict[Partition, Fraction] = {}
        inferred: int | None = None
        for parts, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c == 0:
                continue
            key = rho(parts)
            if any(p < 1 for p in key):
                raise ValueError(f"partition parts must be positive: {parts}")
            size = sum(key)
            if inferred is None:
                inferred = size
            elif size != inferred:
                raise ValueError(
                    f"inhomogeneous terms: degree {size} vs {inferred}")
            clean[key] = clean.get(key, Fraction(0)) + c
        clean = {k: v for k, v in clean.items() if v != 0}
        if not clean:
            self_degree = 0  # the zero function sits at degree 0 by convention
        else:
            self_degree = inferred if inferred is not None else 0
            if degree is not None and degree != self_degree:
                raise ValueError(
                    f"declared degree {degree} != term degree {self_degree}")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", self_degree)

    def __setattr__(self, *_):
        raise AttributeError("ESymFunc is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: "ESymFunc") -> "ESymFunc":
        if not isinstance(other, ESymFunc):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add degree {self.degree} to degree {other.degree}")
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + c
        return ESymFunc(merged, self.degree)

    def __neg__(self) -> "ESymFunc":
        return ESymFunc({k: -c for k, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "ESymFunc") -> "ESymFunc":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ESymFunc):
            prod: dict[tuple[int, ...], Fraction] = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    key = tuple(sorted(k1 + k2, reverse=True))
                    prod[key] = prod.get(key, Fraction(0)) + c1 * c2
            return ESymFunc(prod, self.degree + other.degree)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ESymFunc({}, 0)
            return ESymFunc({k: c * other for k, c in self.terms.items()},
                            self.degree)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ESymFunc):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def coefficient(self, parts: Iterable[int]) -> Fraction:
        """Coefficient of e_lambda for the partition with the given parts (0 if absent)."""
        return self.terms.get(rho(tuple(parts)), Fraction(0))

    def is_e_positive(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def min_coefficient(self) -> tuple[Fraction, Partition] | None:
        """Smallest stored coefficient and its partition; None for the zero function."""
        if self.is_zero:
            return None
        key = min(self.terms, key=lambda k: (self.terms[k], k))
        return self.terms[key], key

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def evaluate_at(self, xs: Sequence[Scalar]) -> Fraction:
        """Substitute the finite variable list (all later variables 0)."""
        vals = [Fraction(x) for x in xs]
        top = min(self.degree, len(vals))
        esp = [Fraction(0)] * (self.degree + 1)
        esp[0] = Fraction(1)
        for x in vals:
            for j in range(top, 0, -1):
                esp[j] += x * esp[j - 1]
        total = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for part in key:
                term *= esp[part]
                if term == 0:
                    break
            total += term
        return total

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms sorted by partition, descending lexicographic."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_text(self) -> str:
        """Stable text form, e.g. ``50*e[5] + 6*e[4,1] + 4*e[3,2]``."""
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for key, c in self.sorted_terms():
            mag = c if c > 0 else -c
            coeff = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = f"{coeff}*e[{','.join(map(str, key))}]"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def to_records(self) -> list[dict]:
        return [{"partition": list(key), "num": c.numerator, "den": c.denominator}
                for key, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @staticmethod
    def from_records(records: Iterable[Mapping]) -> "ESymFunc":
        terms: dict[tuple[int, ...], Fraction] = {}
        for rec in records:
            key = tuple(int(p) for p in rec["partition"])
            c = Fraction(int(rec["num"]), int(rec["den"]))
            terms[key] = terms.get(key, Fraction(0)) + c
        return ESymFunc(terms)

    @staticmethod
    def from_json(text: str) -> "ESymFunc":
        return ESymFunc.from_records(json.loads(text))

    def __repr__(self) -> str:
        return f"ESymFunc({self.to_text()})"


def zero() -> ESymFunc:
    return ESymFunc({}, 0)


def one() -> ESymFunc:
    """The constant 1: the empty partition at degree 0."""
    return ESymFunc({(): 1})


def e_term(parts: Iterable[int], coeff: Scalar = 1) -> ESymFunc:
    """The single term coeff * e_{rho(parts)}; parts may come in any order."""
    return ESymFunc({tuple(parts): Fraction(coeff)})


_P_TO_E: dict[int, ESymFunc] = {}


def p_to_e(k: int) -> ESymFunc:
    """Expansion of the power sum p_k in the e-basis.

    Uses the Newton recurrence
    p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1-i) e_{k-i} p_i,
    memoized; all coefficients are integers.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    for j in range(1, k + 1):
        if j in _P_TO_E:
            continue
        acc = e_term((j,), (-1) ** (j - 1) * j)
        for i in range(1, j):
            acc = acc + (-1) ** (j - 1 - i) * (e_term((j - i,)) * _P_TO_E[i])
        _P_TO_E[j] = acc
    return _P_TO_E[k]
