"""Formal linear combinations with exact rational coefficients.

`LinComb` is the universal value type of the package: an element of a free
module with a distinguished basis, stored as a dict from basis key to a
nonzero `fractions.Fraction`.  The meaning of a key is fixed by the module
that produces the element:

  * tensor words / free Leibniz elements: tuples of 1-based generator
    indices, e.g. ``(1, 2, 2)``;
  * free Lie elements: Lyndon words (tuples as above);
  * free Ronco elements: pairs ``(lyndon_word, generator)`` where the empty
    word ``()`` marks the degree-1 summand.

Zero coefficients are never stored, so equality is plain dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator


Scalar = int | Fraction


class LinComb:
    """Immutable-by-convention sparse linear combination."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | Iterable[tuple[object, Scalar]] | None = None):
        data: dict = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for key, c in items:
                c = Fraction(c)
                if c:
                    c0 = data.get(key)
                    if c0 is None:
                        data[key] = c
                    elif c0 + c:
                        data[key] = c0 + c
                    else:
                        del data[key]
        self.coeffs = data

    @classmethod
    def basis(cls, key, coeff: Scalar = 1) -> "LinComb":
        return cls([(key, coeff)])

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, key) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def __iter__(self) -> Iterator[tuple[object, Fraction]]:
        return iter(self.coeffs.items())

    def keys(self):
        return self.coeffs.keys()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self.coeffs)
        for key, c in other.coeffs.items():
            c0 = data.get(key)
            if c0 is None:
                data[key] = c
            elif c0 + c:
                data[key] = c0 + c
            else:
                del data[key]
        out = LinComb.__new__(LinComb)
        out.coeffs = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        data = dict(self.coeffs)
        for key, c in other.coeffs.items():
            c0 = data.get(key)
            if c0 is None:
                data[key] = -c
            elif c0 - c:
                data[key] = c0 - c
            else:
                del data[key]
        out = LinComb.__new__(LinComb)
        out.coeffs = data
        return out

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out.coeffs = {key: -c for key, c in self.coeffs.items()}
        return out

    def scale(self, scalar: Scalar) -> "LinComb":
        scalar = Fraction(scalar)
        if not scalar:
            return LinComb()
        out = LinComb.__new__(LinComb)
        out.coeffs = {key: scalar * c for key, c in self.coeffs.items()}
        return out

    def __rmul__(self, scalar: Scalar) -> "LinComb":
        return self.scale(scalar)

    def __mul__(self, scalar: Scalar) -> "LinComb":
        return self.scale(scalar)

    def map_keys(self, fn) -> "LinComb":
        """Push the combination through a key transformation (may merge keys)."""
        return LinComb((fn(key), c) for key, c in self.coeffs.items())

    def sorted_items(self, key=None) -> list[tuple[object, Fraction]]:
        return sorted(self.coeffs.items(), key=(lambda kv: key(kv[0])) if key else None)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LinComb(0)"
        parts = ", ".join(f"{k!r}: {c}" for k, c in self.sorted_items())
        return f"LinComb({{{parts}}})"


def format_lincomb(lc: LinComb, key_str, sort_key) -> str:
    """Human-readable expansion, e.g. ``12 - 2·121 + 211``.

    Terms are ordered by `sort_key`; a coefficient of magnitude 1 is left
    implicit, otherwise it is printed as a canonical rational followed by a
    middle dot.
    """
    if lc.is_zero():
        return "0"
    pieces: list[str] = []
    for key, c in lc.sorted_items(key=sort_key):
        mag = abs(c)
        body = key_str(key) if mag == 1 else f"{mag}·{key_str(key)}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{' - ' if c < 0 else ' + '}{body}")
    return "".join(pieces)
