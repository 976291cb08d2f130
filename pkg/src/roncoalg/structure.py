"""Finite-dimensional algebras given by structure constants.

A `StructureAlgebra` stores one bilinear bracket as a sparse table
``bracket[(i, j)] = {k: c}`` meaning [e_i, e_j] = Σ_k c·e_k (0-based
indices internally; reports and JSON use 1-based).  A `MuAlgebra` stores
two tables: an antisymmetric bracket {−,−} and a commutative product.

`verify_variety` / `verify_mu` check defining identities on all basis
tuples and return the violations as data; the conversion maps between the
two presentations refuse inputs whose report is non-empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NotInVarietyError
from .linalg import SpanBuilder

_EMPTY: dict = {}


def _normalize_table(dim: int, table: dict) -> dict:
    out: dict = {}
    for (i, j), cell in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"table index ({i}, {j}) out of range for dimension {dim}")
        ncell: dict = {}
        for k, v in cell.items():
            if not 0 <= k < dim:
                raise ValueError(f"value index {k} out of range for dimension {dim}")
            v = Fraction(v)
            if v:
                ncell[k] = v
        if ncell:
            out[(i, j)] = ncell
    return out


@dataclass(frozen=True)
class StructureAlgebra:
    """An algebra with one bracket, presented by structure constants."""

    dim: int
    bracket: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.dim}")
        object.__setattr__(self, "bracket", _normalize_table(self.dim, self.bracket))

    def cell(self, i: int, j: int) -> dict:
        """Sparse coordinates of [e_i, e_j] (0-based; do not mutate)."""
        return self.bracket.get((i, j), _EMPTY)


@dataclass(frozen=True)
class MuAlgebra:
    """An algebra with an antisymmetric bracket and a commutative product."""

    dim: int
    lie_bracket: dict = field(default_factory=dict)
    product: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.dim}")
        object.__setattr__(self, "lie_bracket", _normalize_table(self.dim, self.lie_bracket))
        object.__setattr__(self, "product", _normalize_table(self.dim, self.product))

    def lie_cell(self, i: int, j: int) -> dict:
        return self.lie_bracket.get((i, j), _EMPTY)

    def product_cell(self, i: int, j: int) -> dict:
        return self.product.get((i, j), _EMPTY)


# ---------------------------------------------------------------------------
# evaluation

def _table_eval(table: dict, dim: int, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    if len(x) != dim or len(y) != dim:
        raise ValueError(f"vectors must have length {dim}, got {len(x)} and {len(y)}")
    out = [Fraction(0)] * dim
    for (i, j), cell in table.items():
        c = Fraction(x[i]) * Fraction(y[j])
        if c:
            for k, v in cell.items():
                out[k] += c * v
    return tuple(out)


def bracket_eval(a: StructureAlgebra, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    """[x, y] for coordinate vectors x, y."""
    return _table_eval(a.bracket, a.dim, x, y)


def mu_bracket_eval(m: MuAlgebra, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    return _table_eval(m.lie_bracket, m.dim, x, y)


def mu_product_eval(m: MuAlgebra, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    return _table_eval(m.product, m.dim, x, y)


def basis_vector(dim: int, i: int) -> tuple[Fraction, ...]:
    """Standard basis vector e_i (0-based)."""
    if not 0 <= i < dim:
        raise ValueError(f"basis index {i} out of range for dimension {dim}")
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))


# sparse one-sided actions used by the identity checks

def _act_left(table: dict, i: int, vec: dict) -> dict:
    """[e_i, vec] as a sparse dict."""
    out: dict = {}
    for m, c in vec.items():
        _add_scaled(out, c, table.get((i, m), _EMPTY))
    return out


def _act_right(table: dict, vec: dict, j: int) -> dict:
    """[vec, e_j] as a sparse dict."""
    out: dict = {}
    for m, c in vec.items():
        _add_scaled(out, c, table.get((m, j), _EMPTY))
    return out


def _add_scaled(acc: dict, scale: Fraction, term: dict):
    if not scale:
        return
    for k, v in term.items():
        nv = acc.get(k, Fraction(0)) + scale * v
        if nv:
            acc[k] = nv
        else:
            del acc[k]


# ---------------------------------------------------------------------------
# identity verification

@dataclass(frozen=True)
class Violation:
    """One failed identity instance.

    `indices` are the 1-based basis indices substituted into the identity;
    `residual` is the dense value of the left-hand side minus right-hand side.
    """

    axiom: str
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]


@dataclass(frozen=True)
class VerificationReport:
    variety: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


class _Checker:
    def __init__(self, dim: int):
        self.dim = dim
        self.violations: list[Violation] = []

    def require_zero(self, axiom: str, indices: tuple[int, ...], residual: dict):
        if residual:
            dense = [Fraction(0)] * self.dim
            for k, v in residual.items():
                dense[k] = v
            self.violations.append(Violation(axiom, tuple(i + 1 for i in indices), tuple(dense)))


def _check_leibniz(ch: _Checker, bk: dict, axiom: str = "leibniz"):
    # [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] = 0
    n = ch.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = _act_left(bk, i, bk.get((j, k), _EMPTY))
                _add_scaled(acc, Fraction(-1), _act_right(bk, bk.get((i, j), _EMPTY), k))
                _add_scaled(acc, Fraction(1), _act_right(bk, bk.get((i, k), _EMPTY), j))
                ch.require_zero(axiom, (i, j, k), acc)


def verify_variety(a: StructureAlgebra, variety: str) -> VerificationReport:
    """Check the defining identities of a variety on all basis tuples.

    Varieties: "leibniz"; "lie" (adds alternation and antisymmetry);
    "ronco" (adds the polarized and diagonal square-bracket identities);
    "symmetric-leibniz" (adds the second Leibniz identity
    [[x,y],z] = [x,[y,z]] − [y,[x,z]]).
    """
    bk = a.bracket
    n = a.dim
    ch = _Checker(n)
    if variety not in ("leibniz", "lie", "ronco", "symmetric-leibniz"):
        raise ValueError(f"unknown variety: {variety!r}")
    _check_leibniz(ch, bk)
    if variety == "lie":
        for i in range(n):
            ch.require_zero("alternating", (i,), dict(a.cell(i, i)))
        for i in range(n):
            for j in range(i + 1, n):
                acc = dict(a.cell(i, j))
                _add_scaled(acc, Fraction(1), a.cell(j, i))
                ch.require_zero("antisymmetry", (i, j), acc)
    elif variety == "ronco":
        # [[e_i,e_j],e_k] + [[e_j,e_i],e_k] = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    acc = _act_right(bk, a.cell(i, j), k)
                    _add_scaled(acc, Fraction(1), _act_right(bk, a.cell(j, i), k))
                    ch.require_zero("polarized-square-bracket", (i, j, k), acc)
        # [[e_i,e_i],e_j] = 0
        for i in range(n):
            for j in range(n):
                ch.require_zero("square-bracket", (i, j), _act_right(bk, a.cell(i, i), j))
    elif variety == "symmetric-leibniz":
        # [[e_i,e_j],e_k] - [e_i,[e_j,e_k]] + [e_j,[e_i,e_k]] = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    acc = _act_right(bk, a.cell(i, j), k)
                    _add_scaled(acc, Fraction(-1), _act_left(bk, i, a.cell(j, k)))
                    _add_scaled(acc, Fraction(1), _act_left(bk, j, a.cell(i, k)))
                    ch.require_zero("right-leibniz", (i, j, k), acc)
    return VerificationReport(variety, tuple(ch.violations))


def verify_mu(m: MuAlgebra, symmetric: bool = False) -> VerificationReport:
    """Check the coupled bracket/product axioms on all basis tuples.

    Axioms: commutativity of the product; vanishing of all triple
    products; alternation and antisymmetry of the bracket; products are
    central for the bracket ({xy, z} = 0); the coupling
    {x,{y,z}} + {z,{x,y}} + {y,{z,x}} = x{y,z}.  The implied skew-symmetry
    of (x,y,z) ↦ x{y,z} is reported as a derived check; with
    `symmetric=True` the stronger identity x{y,z} = 0 is required.
    """
    n = m.dim
    lie, prod = m.lie_bracket, m.product
    ch = _Checker(n)
    for i in range(n):
        for j in range(i + 1, n):
            acc = dict(m.product_cell(i, j))
            _add_scaled(acc, Fraction(-1), m.product_cell(j, i))
            ch.require_zero("commutative", (i, j), acc)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ch.require_zero("triple-product-right", (i, j, k), _act_left(prod, i, m.product_cell(j, k)))
                ch.require_zero("triple-product-left", (i, j, k), _act_right(prod, m.product_cell(i, j), k))
    for i in range(n):
        ch.require_zero("bracket-alternating", (i,), dict(m.lie_cell(i, i)))
    for i in range(n):
        for j in range(i + 1, n):
            acc = dict(m.lie_cell(i, j))
            _add_scaled(acc, Fraction(1), m.lie_cell(j, i))
            ch.require_zero("bracket-antisymmetry", (i, j), acc)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ch.require_zero("product-bracket", (i, j, k), _act_right(lie, m.product_cell(i, j), k))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # {e_i,{e_j,e_k}} + {e_k,{e_i,e_j}} + {e_j,{e_k,e_i}} - e_i{e_j,e_k}
                acc = _act_left(lie, i, m.lie_cell(j, k))
                _add_scaled(acc, Fraction(1), _act_left(lie, k, m.lie_cell(i, j)))
                _add_scaled(acc, Fraction(1), _act_left(lie, j, m.lie_cell(k, i)))
                _add_scaled(acc, Fraction(-1), _act_left(prod, i, m.lie_cell(j, k)))
                ch.require_zero("coupled-jacobi", (i, j, k), acc)
    if symmetric:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    ch.require_zero("symmetric", (i, j, k), _act_left(prod, i, m.lie_cell(j, k)))
    # derived consequence: x{y,z} is skew-symmetric in (x, y)
    for i in range(n):
        for j in range(n):
            ch.require_zero("skew-action", (i, j), _act_left(prod, i, m.lie_cell(i, j)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = _act_left(prod, i, m.lie_cell(j, k))
                _add_scaled(acc, Fraction(1), _act_left(prod, j, m.lie_cell(i, k)))
                ch.require_zero("skew-action-polarized", (i, j, k), acc)
    return VerificationReport("mu-symmetric" if symmetric else "mu", tuple(ch.violations))


# ---------------------------------------------------------------------------
# conversions

def ronco_to_mu(a: StructureAlgebra) -> MuAlgebra:
    """Split the bracket into {x,y} = ([x,y]−[y,x])/2 and xy = ([x,y]+[y,x])/2."""
    report = verify_variety(a, "ronco")
    if not report.ok:
        raise NotInVarietyError("input does not satisfy the square-bracket identities", report)
    half = Fraction(1, 2)
    lie: dict = {}
    prod: dict = {}
    for i in range(a.dim):
        for j in range(a.dim):
            fwd, rev = a.cell(i, j), a.cell(j, i)
            anti: dict = {}
            _add_scaled(anti, half, fwd)
            _add_scaled(anti, -half, rev)
            if anti:
                lie[(i, j)] = anti
            sym: dict = {}
            _add_scaled(sym, half, fwd)
            _add_scaled(sym, half, rev)
            if sym:
                prod[(i, j)] = sym
    return MuAlgebra(a.dim, lie, prod)


def mu_to_ronco(m: MuAlgebra) -> StructureAlgebra:
    """Recombine as [x,y] = {x,y} + xy."""
    report = verify_mu(m)
    if not report.ok:
        raise NotInVarietyError("input does not satisfy the bracket/product axioms", report)
    bracket: dict = {}
    for i in range(m.dim):
        for j in range(m.dim):
            acc = dict(m.lie_cell(i, j))
            _add_scaled(acc, Fraction(1), m.product_cell(i, j))
            if acc:
                bracket[(i, j)] = acc
    return StructureAlgebra(m.dim, bracket)


# ---------------------------------------------------------------------------
# squares, the Lie quotient, and stock algebras

def ann_subspace(a: StructureAlgebra) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the span of all squares [x, x].

    In characteristic 0 that span equals the span of the symmetrized
    brackets [e_i,e_j] + [e_j,e_i], which is what is accumulated here.
    """
    return _ann_span(a).basis()


def _ann_span(a: StructureAlgebra) -> SpanBuilder:
    sb = SpanBuilder(a.dim)
    for i in range(a.dim):
        for j in range(i, a.dim):
            acc = dict(a.cell(i, j))
            _add_scaled(acc, Fraction(1), a.cell(j, i))
            if acc:
                sb.add(acc)
    return sb


def lie_quotient(a: StructureAlgebra) -> StructureAlgebra:
    """Quotient by the two-sided ideal generated by all squares.

    The result is presented on the complement of the ideal's pivot
    coordinates (so its basis is a subset of the input basis, in order)
    and satisfies the Lie identities whenever the input is Leibniz.
    """
    report = verify_variety(a, "leibniz")
    if not report.ok:
        raise NotInVarietyError("lie_quotient needs a Leibniz algebra", report)
    bk = a.bracket
    sb = _ann_span(a)
    changed = True
    while changed:
        changed = False
        for vec in sb.basis():
            vd = {m: c for m, c in enumerate(vec) if c}
            for i in range(a.dim):
                for image in (_act_left(bk, i, vd), _act_right(bk, vd, i)):
                    if image and sb.add(image):
                        changed = True
    pivots = set(sb.pivot_columns())
    kept = [i for i in range(a.dim) if i not in pivots]
    pos = {b: q for q, b in enumerate(kept)}
    bracket: dict = {}
    for qi, bi in enumerate(kept):
        for qj, bj in enumerate(kept):
            residual = sb.reduce(a.cell(bi, bj))
            if residual:
                bracket[(qi, qj)] = {pos[m]: c for m, c in residual.items()}
    return StructureAlgebra(len(kept), bracket)


def free_nil2(d: int) -> StructureAlgebra:
    """The free 2-step nilpotent Lie algebra: V ⊕ Λ²(V), [u, v] = u∧v.

    Basis: the d generators, then the wedges e_i∧e_j (i < j) in
    lexicographic order; wedges bracket to zero with everything.
    """
    if d < 1:
        raise ValueError(f"generator count must be >= 1, got {d}")
    wedge_index = {}
    for i in range(d):
        for j in range(i + 1, d):
            wedge_index[(i, j)] = d + len(wedge_index)
    bracket: dict = {}
    for (i, j), w in wedge_index.items():
        bracket[(i, j)] = {w: Fraction(1)}
        bracket[(j, i)] = {w: Fraction(-1)}
    return StructureAlgebra(d + len(wedge_index), bracket)


def abelian(dim: int) -> StructureAlgebra:
    if dim < 0:
        raise ValueError(f"dimension must be nonnegative, got {dim}")
    return StructureAlgebra(dim, {})


def cross_product() -> StructureAlgebra:
    """The 3-dimensional simple Lie algebra [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2."""
    one = Fraction(1)
    return StructureAlgebra(3, {
        (0, 1): {2: one}, (1, 0): {2: -one},
        (1, 2): {0: one}, (2, 1): {0: -one},
        (2, 0): {1: one}, (0, 2): {1: -one},
    })


def direct_sum(a: StructureAlgebra, b: StructureAlgebra) -> StructureAlgebra:
    """Block-diagonal sum; cross brackets vanish."""
    bracket: dict = {key: dict(cell) for key, cell in a.bracket.items()}
    for (i, j), cell in b.bracket.items():
        bracket[(i + a.dim, j + a.dim)] = {k + a.dim: v for k, v in cell.items()}
    return StructureAlgebra(a.dim + b.dim, bracket)
