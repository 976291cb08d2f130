"""Free Lie algebra on generators g1..gd in the Lyndon-word basis.

A Lie element is a `LinComb` whose keys are Lyndon words (tuples of 1-based
generator indices); the basis element for a Lyndon word is its right
standard bracketing, realized inside the tensor algebra by
``[a, b] = a⊗b - b⊗a``.  A tensor element is a `LinComb` keyed by arbitrary
words.  The Lyndon expansion is triangular (a Lyndon word maps to itself
plus lexicographically larger words of the same degree), which makes
`rewrite_to_lyndon` a plain back-substitution loop with no linear algebra.

Bracketing grows degree exponentially in cost, so the bracket accepts a
degree cap (default 8) and refuses larger results.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import DegreeOverflowError, NotLieElementError
from .lincomb import LinComb

Word = tuple[int, ...]

DEFAULT_MAX_DEGREE = 8


# ---------------------------------------------------------------------------
# words

def is_lyndon(word: Word) -> bool:
    """A nonempty word is Lyndon iff it is strictly smaller than every proper suffix."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] for i in range(1, n))


def format_word(word: Word, alphabet_size: int | None = None) -> str:
    """"112" for single-digit alphabets, "1.10.2" once indices exceed 9."""
    wide = (alphabet_size or max(word)) > 9
    sep = "." if wide else ""
    return sep.join(str(a) for a in word)


def parse_word(text: str) -> Word:
    if "." in text:
        letters = tuple(int(p) for p in text.split("."))
    else:
        letters = tuple(int(ch) for ch in text)
    if not letters or any(a < 1 for a in letters):
        raise ValueError(f"invalid word: {text!r}")
    return letters


def word_sort_key(word: Word) -> tuple:
    return (len(word), word)


@cache
def lyndon_words(d: int, n: int) -> tuple[Word, ...]:
    """All Lyndon words of length exactly n over 1..d, lexicographically ordered.

    Duval's generator produces every Lyndon word of length <= n in lex
    order; filtering by length preserves the order.
    """
    if d < 1 or n < 1:
        raise ValueError(f"alphabet size and length must be >= 1, got d={d}, n={n}")
    out: list[Word] = []
    w = [1]
    while w:
        if len(w) == n:
            out.append(tuple(w))
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == d:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(out)


def witt_dim(d: int, n: int) -> int:
    """Dimension of the degree-n graded piece of the free Lie algebra on d generators."""
    if d < 1 or n < 1:
        raise ValueError(f"alphabet size and degree must be >= 1, got d={d}, n={n}")
    total = 0
    for k in range(1, n + 1):
        if n % k == 0:
            total += _mobius(n // k) * d**k
    assert total % n == 0
    return total // n


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    count = 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
        p += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Split w = u·v with v the longest proper Lyndon suffix; u, v are Lyndon."""
    if len(word) < 2 or not is_lyndon(word):
        raise ValueError(f"standard factorization needs a Lyndon word of length >= 2, got {word}")
    for i in range(1, len(word)):
        v = word[i:]
        if is_lyndon(v):
            u = word[:i]
            assert is_lyndon(u)
            return u, v
    raise AssertionError("unreachable: every Lyndon word has a Lyndon proper suffix")


# ---------------------------------------------------------------------------
# elements

def lie_generator(i: int) -> LinComb:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return LinComb.basis((i,))


def element_degree(x: LinComb) -> int:
    """Maximal word length occurring in x (0 for the zero element)."""
    return max((len(k) for k in x.keys()), default=0)


def tensor_commutator(a: LinComb, b: LinComb) -> LinComb:
    """a⊗b - b⊗a on tensor elements, extended bilinearly."""
    data: dict = {}
    for wa, ca in a:
        for wb, cb in b:
            c = ca * cb
            k1 = wa + wb
            k2 = wb + wa
            data[k1] = data.get(k1, Fraction(0)) + c
            data[k2] = data.get(k2, Fraction(0)) - c
    return LinComb(data)


@cache
def _expand_word(word: Word) -> LinComb:
    if len(word) == 1:
        return LinComb.basis(word)
    u, v = standard_factorization(word)
    return tensor_commutator(_expand_word(u), _expand_word(v))


def expand_to_tensor(x: LinComb) -> LinComb:
    """Embed a Lie element into the tensor algebra via its standard bracketings."""
    out = LinComb()
    for word, c in x:
        if not is_lyndon(word):
            raise ValueError(f"key {word} is not a Lyndon word")
        out = out + _expand_word(word).scale(c)
    return out


@cache
def _left_normed_word(word: Word) -> LinComb:
    """Tensor expansion of the left-normed bracketing [[w1,w2],...,wn]."""
    if len(word) == 1:
        return LinComb.basis(word)
    return tensor_commutator(_left_normed_word(word[:-1]), LinComb.basis((word[-1],)))


def left_normed_tensor(t: LinComb) -> LinComb:
    """Replace every word by its left-normed bracketing, inside the tensor algebra."""
    out = LinComb()
    for word, c in t:
        out = out + _left_normed_word(word).scale(c)
    return out


def rewrite_to_lyndon(t: LinComb) -> LinComb:
    """Inverse of `expand_to_tensor` on Lie elements.

    Repeatedly clears the lexicographically smallest remaining word, which
    for a Lie element must be Lyndon; a non-Lyndon leading word means the
    input was not a Lie element.
    """
    by_degree: dict[int, dict] = {}
    for word, c in t:
        by_degree.setdefault(len(word), {})[word] = c
    result: dict = {}
    for n in sorted(by_degree):
        work = by_degree[n]
        while work:
            word = min(work)
            c = work.pop(word)
            if not is_lyndon(word):
                raise NotLieElementError(
                    f"residual tensor term {format_word(word)} has no Lyndon leading word"
                )
            for key, ec in _expand_word(word):
                if key == word:
                    continue
                nv = work.get(key, Fraction(0)) - c * ec
                if nv:
                    work[key] = nv
                else:
                    work.pop(key, None)
            result[word] = result.get(word, Fraction(0)) + c
    return LinComb(result)


def left_normed_bracketing(t: LinComb) -> LinComb:
    """Left-normed bracketing of a tensor element, as a Lie element."""
    return rewrite_to_lyndon(left_normed_tensor(t))


def lie_bracket(x: LinComb, y: LinComb, max_degree: int = DEFAULT_MAX_DEGREE) -> LinComb:
    """Bracket of two Lie elements in Lyndon coordinates.

    Computed by expanding to the tensor algebra, commutating, and rewriting;
    antisymmetric and Jacobi by construction.
    """
    if x.is_zero() or y.is_zero():
        return LinComb()
    total = element_degree(x) + element_degree(y)
    if total > max_degree:
        raise DegreeOverflowError(f"bracket of degree {total} exceeds the cap {max_degree}")
    return rewrite_to_lyndon(tensor_commutator(expand_to_tensor(x), expand_to_tensor(y)))
