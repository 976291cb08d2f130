"""The free algebra on d generators in the variety cut out by the square
identities [[x,x],y] = 0 on top of the Leibniz identity.

Underlying graded module: degree 1 is spanned by the generators; degree
n >= 2 is (free Lie of degree n-1) ⊗ (generators).  Basis keys are pairs
``(lyndon_word, v)`` with ``lyndon_word = ()`` marking degree 1, so the
degree of a key is always ``len(lyndon_word) + 1``.

The bracket is computed through the free Leibniz algebra: `section` embeds
into tensor words, `leib_bracket` multiplies there, and `project` maps a
word w·v to (left-normed bracketing of w) ⊗ v.  This composite satisfies
the direct rule [ξ⊗u, v] = [ξ, u]_Lie ⊗ v for right factors of degree 1.

`section` splits `project` exactly: a Lie tensor of degree n equals 1/n
times its left-normed bracketing, so sending (ℓ, v) to
(1/|ℓ|)·expand(ℓ)·v makes project∘section the identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import DegreeOverflowError, UnknownGeneratorError
from .freelie import (
    DEFAULT_MAX_DEGREE,
    Word,
    _expand_word,
    format_word,
    left_normed_bracketing,
    lie_bracket,
    lyndon_words,
    witt_dim,
)
from .leibniz import leib_bracket, leib_generator
from .lincomb import LinComb
from .linalg import SparseMatrix, SpanBuilder, rank_and_kernel
from .structure import StructureAlgebra
from . import terms

RKey = tuple[Word, int]


def ronco_generator(i: int) -> LinComb:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return LinComb.basis(((), i))


def key_degree(key: RKey) -> int:
    return len(key[0]) + 1


def element_degree(x: LinComb) -> int:
    return max((key_degree(k) for k in x.keys()), default=0)


def key_sort_key(key: RKey) -> tuple:
    word, v = key
    return (len(word) + 1, word, v)


def format_key(key: RKey, alphabet_size: int | None = None) -> str:
    word, v = key
    if not word:
        return f"g{v}"
    return f"[{format_word(word, alphabet_size)}|{v}]"


@cache
def _left_normed_lie(word: Word) -> LinComb:
    """Left-normed bracketing of a word, in Lyndon coordinates."""
    return left_normed_bracketing(LinComb.basis(word))


@cache
def _project_word(word: Word) -> LinComb:
    if len(word) == 1:
        return LinComb.basis(((), word[0]))
    prefix, last = word[:-1], word[-1]
    return _left_normed_lie(prefix).map_keys(lambda l: (l, last))


def project(x: LinComb) -> LinComb:
    """Quotient map from tensor words: v1⊗…⊗vn ↦ [[v1,…],v_{n-1}] ⊗ vn."""
    out = LinComb.zero()
    for word, c in x:
        out = out + _project_word(word).scale(c)
    return out


@cache
def _section_key(key: RKey) -> LinComb:
    word, v = key
    if not word:
        return LinComb.basis((v,))
    return _expand_word(word).map_keys(lambda w: w + (v,)).scale(Fraction(1, len(word)))


def section(x: LinComb) -> LinComb:
    """Right inverse of `project`, landing in tensor words.

    Sends (ℓ, v) to (1/|ℓ|)·expand(ℓ)⊗v; the 1/|ℓ| factor is exactly what
    the left-normed bracketing of a degree-|ℓ| Lie tensor multiplies by.
    """
    out = LinComb.zero()
    for key, c in x:
        out = out + _section_key(key).scale(c)
    return out


def ronco_bracket(x: LinComb, y: LinComb, max_degree: int = DEFAULT_MAX_DEGREE) -> LinComb:
    """Bracket of two elements in (lyndon_word, generator) coordinates."""
    if x.is_zero() or y.is_zero():
        return LinComb.zero()
    total = element_degree(x) + element_degree(y)
    if total > max_degree:
        raise DegreeOverflowError(f"bracket of degree {total} exceeds the cap {max_degree}")
    return project(leib_bracket(section(x), section(y), max_degree=max_degree))


def eval_term(term: terms.Term, num_gens: int, max_degree: int = DEFAULT_MAX_DEGREE) -> LinComb:
    """Evaluate a parsed bracket term with g_i as the degree-1 generators."""

    def generator(i: int) -> LinComb:
        if i > num_gens:
            raise UnknownGeneratorError(f"generator g{i} out of range (have {num_gens})")
        return ronco_generator(i)

    return terms.evaluate(term, generator, lambda a, b: ronco_bracket(a, b, max_degree))


def graded_dim(d: int, n: int) -> int:
    """Dimension of the degree-n graded piece on d generators."""
    if d < 1 or n < 1:
        raise ValueError(f"generator count and degree must be >= 1, got d={d}, n={n}")
    if n == 1:
        return d
    return witt_dim(d, n - 1) * d


def graded_basis(d: int, n: int) -> list[RKey]:
    """Deterministic basis keys of the degree-n piece, sorted by `key_sort_key`."""
    if n == 1:
        return [((), v) for v in range(1, d + 1)]
    return [(word, v) for word in lyndon_words(d, n - 1) for v in range(1, d + 1)]


def graded_kernel_basis(d: int, n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list[LinComb]:
    """Basis of the kernel of the bracket-to-Lie map in degree n >= 2.

    The map sends ξ⊗v to [ξ, g_v] in the free Lie algebra; its kernel
    measures the failure of the degree-n piece to be Lie.  Kernel vectors
    come from the deterministic echelon kernel, one per free basis key.
    """
    if n < 2:
        raise ValueError(f"the kernel lives in degrees >= 2, got n={n}")
    if n > max_degree:
        raise DegreeOverflowError(f"degree {n} exceeds the cap {max_degree}")
    keys = graded_basis(d, n)
    targets = {word: i for i, word in enumerate(lyndon_words(d, n))}
    entries: dict = {}
    for j, (word, v) in enumerate(keys):
        image = lie_bracket(LinComb.basis(word), LinComb.basis((v,)), max_degree=max_degree)
        for target_word, c in image:
            entries[(targets[target_word], j)] = c
    matrix = SparseMatrix(len(targets), len(keys), entries)
    _, kernel = rank_and_kernel(matrix)
    return [LinComb((keys[j], c) for j, c in enumerate(vec) if c) for vec in kernel]


def truncation_basis(d: int, max_deg: int) -> list[RKey]:
    """Basis keys of all degrees 1..max_deg, in (degree, word, generator) order."""
    if d < 1 or max_deg < 1:
        raise ValueError(f"generator count and cutoff must be >= 1, got d={d}, N={max_deg}")
    keys = [((), v) for v in range(1, d + 1)]
    for n in range(2, max_deg + 1):
        keys.extend(graded_basis(d, n))
    return keys


def truncate_to_structure(d: int, max_deg: int, max_degree: int = DEFAULT_MAX_DEGREE) -> StructureAlgebra:
    """Finite-dimensional quotient by all components of degree > max_deg.

    Basis order matches `truncation_basis(d, max_deg)`; brackets landing
    above the cutoff are set to zero, which is compatible with the defining
    identities because the discarded part is an ideal.
    """
    if max_deg > max_degree:
        raise DegreeOverflowError(f"cutoff {max_deg} exceeds the cap {max_degree}")
    keys = truncation_basis(d, max_deg)
    index = {key: i for i, key in enumerate(keys)}
    bracket: dict = {}
    for i, ki in enumerate(keys):
        for j, kj in enumerate(keys):
            if key_degree(ki) + key_degree(kj) > max_deg:
                continue
            z = ronco_bracket(LinComb.basis(ki), LinComb.basis(kj), max_degree=max_degree)
            if z:
                bracket[(i, j)] = {index[key]: c for key, c in z}
    return StructureAlgebra(len(keys), bracket)
