"""The complete keyed h-vector and its companions.

The h-value of a polytope is a keyed polynomial: a sum of palindromic
homogeneous polynomials weighted by key symbols, with component degree
plus key degree equal to the dimension throughout.  It is defined by a
mutual recursion with a g-value on CD-words:

    h(pt) = 1            g(pt) = y
    h(Cv) = g(v) + x h(v)     g(Cv) = y g(v)
    h(Dv) = xy h(v)

and, the step that makes the invariant complete, g on a diamond is read
off the angle-basis decomposition of h: each angle(i, j) w_k term of
h(v) contributes (xy)^(i+1) y^(j+1) w_k plus the fresh symbol w_k' with
k' = key_prime(i, j, k).  Dropping the fresh symbols (key-free
recursion g(Dv) = xy g(v)) gives the classical toric h-vector, which
this module also implements independently as a cross-check.

Values extend to arbitrary polytopes linearly through CD-coordinates of
the flag vector, and the flag vector can be recovered exactly because
the matrix of h-values of degree-d words against the angle/key
coordinate basis is unimodular.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cdwords import CDVector, cd_words, check_word, to_cd_basis, word_flag
from .errors import NotPalindromicError
from .flagvec import FlagVector, linear_combine
from .hpoly import (
    EMPTY_KEY,
    HPoly,
    Key,
    KeyedPoly,
    ONE,
    X,
    XY,
    Y,
    monomial,
    palindromic_decompose,
    x_minus_y_power,
    zero_poly,
)
from .lattice import Expr, build_lattice, flag_of_lattice, link_flag
from .linalg import LinearSolver


# ---------------------------------------------------------------------------
# the g/h recursion on words


@lru_cache(maxsize=None)
def h_of_word(w: str) -> KeyedPoly:
    check_word(w)
    if w == "":
        return KeyedPoly(0, {EMPTY_KEY: ONE})
    rest = w[1:]
    if w[0] == "D":
        value = h_of_word(rest).mul_poly(XY)
    else:
        value = g_of_word(rest) + h_of_word(rest).mul_poly(X)
    if not value.is_palindromic():
        raise NotPalindromicError(f"h({w}) came out non-palindromic: {value}")
    return value


@lru_cache(maxsize=None)
def g_of_word(w: str) -> KeyedPoly:
    check_word(w)
    if w == "":
        return KeyedPoly(1, {EMPTY_KEY: Y})  # g of the point
    rest = w[1:]
    if w[0] == "C":
        return g_of_word(rest).mul_poly(Y)
    h = h_of_word(rest)
    acc: dict[Key, HPoly] = {}

    def add(key, poly):
        cur = acc.get(key)
        acc[key] = poly if cur is None else cur + poly

    for key, poly in h.terms.items():
        for i, j, lam in palindromic_decompose(poly):
            if lam == 0:
                continue
            add(key, monomial(i + 1, i + j + 2, lam))  # (xy)^(i+1) y^(j+1)
            add(key.primed(i, j), HPoly([lam]))
    return KeyedPoly(h.dim + 3, acc)


@lru_cache(maxsize=None)
def toric_h_of_word(w: str) -> HPoly:
    """The toric h-vector of a word, by the key-free recursion."""
    check_word(w)
    if w == "":
        return ONE
    rest = w[1:]
    if w[0] == "D":
        return toric_h_of_word(rest) * XY
    return toric_g_of_word(rest) + toric_h_of_word(rest) * X


@lru_cache(maxsize=None)
def toric_g_of_word(w: str) -> HPoly:
    check_word(w)
    if w == "":
        return Y
    rest = w[1:]
    return toric_g_of_word(rest) * (Y if w[0] == "C" else XY)


def h_of_cdvector(v: CDVector) -> KeyedPoly:
    acc = KeyedPoly(v.degree, {})
    for w, c in v.coeffs.items():
        acc = acc + h_of_word(w).scaled(c)
    return acc


def g_of_cdvector(v: CDVector) -> KeyedPoly:
    acc = KeyedPoly(v.degree + 1, {})
    for w, c in v.coeffs.items():
        acc = acc + g_of_word(w).scaled(c)
    return acc


def toric_of_cdvector(v: CDVector) -> HPoly:
    acc = zero_poly(v.degree)
    for w, c in v.coeffs.items():
        acc = acc + toric_h_of_word(w).scaled(c)
    return acc


# ---------------------------------------------------------------------------
# values on polytopes


def h_of_flag(f: FlagVector) -> KeyedPoly:
    return h_of_cdvector(to_cd_basis(f))


def h_of_polytope(e: Expr) -> KeyedPoly:
    """h of a buildable expression, through chain counting and CD-coordinates."""
    return h_of_flag(flag_of_lattice(e))


def toric_of_polytope(e: Expr) -> HPoly:
    return toric_of_cdvector(to_cd_basis(flag_of_lattice(e)))


def h_via_links(e: Expr) -> KeyedPoly:
    """h as the face sum of (x - y)^dim(face) times g of the face's link.

    A second route to the same value: instead of expanding the body's
    flag vector once, every link is chain-counted and expanded
    separately, so agreement with h_of_polytope exercises the whole
    lattice/link/expansion stack.  The body itself contributes
    (x - y)^d, its link being the empty polytope with g = 1.
    """
    L = build_lattice(e)
    d = L.dim
    total = KeyedPoly(d, {})
    for face in range(len(L)):
        if face == L.bottom:
            continue
        if face == L.top:
            g = KeyedPoly(0, {EMPTY_KEY: ONE})
        else:
            g = g_of_cdvector(to_cd_basis(link_flag(L, face)))
        total = total + g.mul_poly(x_minus_y_power(L.dims[face]))
    return total


def simple_h(f: FlagVector) -> HPoly:
    """h-polynomial of a simple polytope straight from its face counts.

    sum_i f_i (x-y)^i y^(d-i), the index running over 0..d with f_d = 1
    for the body itself.  (The convention was pinned down against
    h_of_polytope on cubes; both the y-power and the inclusion of the
    body matter.)
    """
    d = f.dim
    acc = zero_poly(d)
    for i in range(d):
        acc = acc + (x_minus_y_power(i) * monomial(0, d - i)).scaled(f.get((i,)))
    return acc + x_minus_y_power(d)


# ---------------------------------------------------------------------------
# the coordinate basis and completeness


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def keys_of_degree(m: int) -> tuple[Key, ...]:
    """All keys of one degree (2*sum ds + sum cs + 3r = m), sorted."""
    found = []
    if m == 0:
        found.append(EMPTY_KEY)
    r = 1
    while 3 * r <= m:
        budget = m - 3 * r
        for dsum in range(budget // 2 + 1):
            csum = budget - 2 * dsum
            for ds in _compositions(dsum, r):
                for cs in _compositions(csum, r):
                    found.append(Key(ds, cs))
        r += 1
    return tuple(sorted(found, key=Key.sort_key))


@lru_cache(maxsize=None)
def coordinate_basis(dim: int) -> tuple[tuple[int, int, Key], ...]:
    """Canonical (i, j, key) coordinates for keyed h-values of one dimension.

    Ordered by key degree, then key, then i; the count always matches the
    number of CD-words of that degree.
    """
    coords = []
    for m in range(dim + 1):
        for key in keys_of_degree(m):
            rem = dim - m
            for i in range(rem // 2 + 1):
                coords.append((i, rem - 2 * i, key))
    return tuple(coords)


def h_coordinates(kp: KeyedPoly) -> list:
    """The coordinate vector of a keyed polynomial in the (i, j, key) basis."""
    coords = coordinate_basis(kp.dim)
    position = {(i, key): n for n, (i, j, key) in enumerate(coords)}
    vec = [0] * len(coords)
    for key, poly in kp.terms.items():
        for i, j, lam in palindromic_decompose(poly):
            if lam == 0:
                continue
            pos = position.get((i, key))
            if pos is None:
                raise ValueError(f"no coordinate for ({i},{j},{key}) at dim {kp.dim}")
            vec[pos] = lam
    return vec


def h_matrix(d: int) -> list[list[int]]:
    """h-coordinates of every degree-d word; square and unimodular."""
    words = cd_words(d)
    rows = [h_coordinates(h_of_word(w)) for w in words]
    assert all(len(r) == len(words) for r in rows), "coordinate count != word count"
    return rows


@lru_cache(maxsize=None)
def _h_solver(d: int) -> LinearSolver:
    rows = h_matrix(d)
    n = len(rows)
    transpose = [[rows[r][c] for r in range(n)] for c in range(n)]
    return LinearSolver(transpose)


def flag_from_h(kp: KeyedPoly) -> FlagVector:
    """Recover the flag vector from an h-value, exactly."""
    if kp.dim < 0:
        raise ValueError("flag recovery needs dimension >= 0")
    vec = h_coordinates(kp)  # rejects non-palindromic and ill-keyed input
    x = _h_solver(kp.dim).solve(vec)
    terms = []
    for w, xi in zip(cd_words(kp.dim), x):
        if xi:
            coeff = int(xi) if isinstance(xi, Fraction) and xi.denominator == 1 else xi
            terms.append((coeff, word_flag(w)))
    if not terms:
        return FlagVector(kp.dim, {})
    return linear_combine(terms)
