"""Constructible polytopes: expression grammar, face lattices, chain counting.

The grammar (also the CLI input syntax) is case-sensitive and
whitespace-insensitive::

    pt | C(e) | I(e) | B(e) | dual(e) | prod(e, e)
       | simplex(n) | cube(n) | crosspoly(n)

plus the shorthand word application ``CIC(pt)`` == ``C(I(C(pt)))``; a
word may also contain D, in which case the expression only denotes a
(possibly virtual) flag vector, not a buildable polytope.

Faces are canonical construction-trace labels; only the combinatorics
matter.  Lattices are immutable after build and chain counting is exact
integer dynamic programming over the containment order; these chain
counts are the oracle that the flag-level pyramid/prism formulas are
tested against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ExprParseError, FaceCountLimitError
from .flagvec import (
    FlagVector,
    GradedFlagVector,
    d_flag,
    dim_subsets,
    dual_flag,
    point_flag,
    prism_flag,
    pyramid_flag,
)

DEFAULT_FACE_CAP = 10**6


# ---------------------------------------------------------------------------
# expression grammar


@dataclass(frozen=True)
class Pt:
    pass


@dataclass(frozen=True)
class Cone:
    body: "Expr"


@dataclass(frozen=True)
class Prism:
    body: "Expr"


@dataclass(frozen=True)
class Bipyr:
    body: "Expr"


@dataclass(frozen=True)
class Dual:
    body: "Expr"


@dataclass(frozen=True)
class Prod:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Simplex:
    n: int


@dataclass(frozen=True)
class Cube:
    n: int


@dataclass(frozen=True)
class Crosspoly:
    n: int


@dataclass(frozen=True)
class Word:
    """letters over C/I/D applied right-to-left to body."""

    letters: str
    body: "Expr"


Expr = (
    Pt | Cone | Prism | Bipyr | Dual | Prod | Simplex | Cube | Crosspoly | Word
)

_WORD_RE = re.compile(r"[CDI]+\Z")
_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)|(?P<num>\d+)|(?P<punct>[(),]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.lastgroup is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprParseError(
                f"unexpected character {stripped[0]!r}", pos=len(text) - len(stripped)
            )
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def next(self, kind=None, value=None):
        tok = self.peek()
        if tok is None:
            raise ExprParseError("unexpected end of input", pos=len(self.text))
        if kind is not None and tok[0] != kind:
            raise ExprParseError(f"expected {kind}, found {tok[1]!r}", pos=tok[2])
        if value is not None and tok[1] != value:
            raise ExprParseError(f"expected {value!r}, found {tok[1]!r}", pos=tok[2])
        self.idx += 1
        return tok

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExprParseError(f"trailing input {tok[1]!r}", pos=tok[2])
        return expr

    def expr(self) -> Expr:
        kind, name, pos = self.next("name")
        if name == "pt":
            return Pt()
        if name == "dual":
            return Dual(self.one_arg())
        if name == "prod":
            self.next("punct", "(")
            left = self.expr()
            self.next("punct", ",")
            right = self.expr()
            self.next("punct", ")")
            return Prod(left, right)
        if name in ("simplex", "cube", "crosspoly"):
            n = self.number_arg()
            least = 0 if name == "simplex" else 1
            if n < least:
                raise ExprParseError(f"{name} needs n >= {least}, got {n}", pos=pos)
            return {"simplex": Simplex, "cube": Cube, "crosspoly": Crosspoly}[name](n)
        if name == "B":
            return Bipyr(self.one_arg())
        if _WORD_RE.match(name):
            body = self.one_arg()
            if name == "C":
                return Cone(body)
            if name == "I":
                return Prism(body)
            return Word(name, body)
        raise ExprParseError(f"unknown constructor {name!r}", pos=pos)

    def one_arg(self) -> Expr:
        self.next("punct", "(")
        body = self.expr()
        self.next("punct", ")")
        return body

    def number_arg(self) -> int:
        self.next("punct", "(")
        tok = self.next("num")
        self.next("punct", ")")
        return int(tok[1])


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def expr_dim(e: Expr) -> int:
    if isinstance(e, Pt):
        return 0
    if isinstance(e, (Cone, Prism, Bipyr)):
        return expr_dim(e.body) + 1
    if isinstance(e, Dual):
        return expr_dim(e.body)
    if isinstance(e, Prod):
        return expr_dim(e.left) + expr_dim(e.right)
    if isinstance(e, (Simplex, Cube, Crosspoly)):
        return e.n
    if isinstance(e, Word):
        return expr_dim(e.body) + sum(2 if ch == "D" else 1 for ch in e.letters)
    raise TypeError(f"not an expression: {e!r}")


def expr_str(e: Expr) -> str:
    if isinstance(e, Pt):
        return "pt"
    if isinstance(e, Cone):
        return f"C({expr_str(e.body)})"
    if isinstance(e, Prism):
        return f"I({expr_str(e.body)})"
    if isinstance(e, Bipyr):
        return f"B({expr_str(e.body)})"
    if isinstance(e, Dual):
        return f"dual({expr_str(e.body)})"
    if isinstance(e, Prod):
        return f"prod({expr_str(e.left)},{expr_str(e.right)})"
    if isinstance(e, Simplex):
        return f"simplex({e.n})"
    if isinstance(e, Cube):
        return f"cube({e.n})"
    if isinstance(e, Crosspoly):
        return f"crosspoly({e.n})"
    if isinstance(e, Word):
        return f"{e.letters}({expr_str(e.body)})"
    raise TypeError(f"not an expression: {e!r}")


def is_buildable(e: Expr) -> bool:
    """True when the expression denotes an actual polytope lattice (no D)."""
    if isinstance(e, (Pt, Simplex, Cube, Crosspoly)):
        return True
    if isinstance(e, (Cone, Prism, Bipyr, Dual)):
        return is_buildable(e.body)
    if isinstance(e, Prod):
        return is_buildable(e.left) and is_buildable(e.right)
    if isinstance(e, Word):
        return "D" not in e.letters and is_buildable(e.body)
    raise TypeError(f"not an expression: {e!r}")


def face_count(e: Expr) -> int:
    """Predicted number of faces (including the empty face and the body)."""
    if isinstance(e, Pt):
        return 2
    if isinstance(e, Cone):
        return 2 * face_count(e.body)
    if isinstance(e, (Prism, Bipyr)):
        return 3 * (face_count(e.body) - 1) + 1
    if isinstance(e, Dual):
        return face_count(e.body)
    if isinstance(e, Prod):
        return (face_count(e.left) - 1) * (face_count(e.right) - 1) + 1
    if isinstance(e, Simplex):
        return 2 ** (e.n + 1)
    if isinstance(e, (Cube, Crosspoly)):
        return 3**e.n + 1
    if isinstance(e, Word):
        if "D" in e.letters:
            raise ValueError("words containing D denote no polytope lattice")
        n = face_count(e.body)
        for ch in reversed(e.letters):
            n = 2 * n if ch == "C" else 3 * (n - 1) + 1
        return n
    raise TypeError(f"not an expression: {e!r}")


def face_count_bound(e: Expr) -> int:
    """Upper bound on the work an expression needs, in face-count units.

    Same arithmetic as face_count, except a D letter is bounded by its
    prism-of-cone branch, so virtual words are covered too.  Used by the
    CLI to apply the face cap uniformly before evaluating anything.
    """
    if isinstance(e, Word) and "D" in e.letters:
        n = face_count_bound(e.body)
        for ch in reversed(e.letters):
            if ch == "C":
                n = 2 * n
            elif ch == "I":
                n = 3 * (n - 1) + 1
            else:
                n = 3 * (2 * n - 1) + 1
        return n
    if isinstance(e, (Cone, Prism, Bipyr, Dual)):
        inner = face_count_bound(e.body)
        if isinstance(e, Cone):
            return 2 * inner
        if isinstance(e, Dual):
            return inner
        return 3 * (inner - 1) + 1
    if isinstance(e, Prod):
        return (face_count_bound(e.left) - 1) * (face_count_bound(e.right) - 1) + 1
    if isinstance(e, Word):
        n = face_count_bound(e.body)
        for ch in reversed(e.letters):
            n = 2 * n if ch == "C" else 3 * (n - 1) + 1
        return n
    return face_count(e)


# ---------------------------------------------------------------------------
# face lattices


class FaceLattice:
    """Hasse diagram of a polytope, graded from the empty face to the body."""

    __slots__ = ("dims", "covers_up", "labels", "bottom", "top", "_cache")

    def __init__(self, dims, covers_up, labels, bottom, top):
        self.dims = tuple(dims)
        self.covers_up = tuple(tuple(c) for c in covers_up)
        self.labels = tuple(labels)
        self.bottom = bottom
        self.top = top
        self._cache = {}

    @property
    def dim(self) -> int:
        return self.dims[self.top]

    def __len__(self):
        return len(self.dims)

    def faces_of_dim(self, k: int):
        return [i for i, d in enumerate(self.dims) if d == k]

    def face_counts(self) -> tuple[int, ...]:
        """Numbers of proper nonempty faces, by dimension 0..d-1."""
        counts = [0] * max(self.dim, 0)
        for i, d in enumerate(self.dims):
            if 0 <= d < self.dim:
                counts[d] += 1
        return tuple(counts)

    def covers_down(self):
        got = self._cache.get("covers_down")
        if got is None:
            got = [[] for _ in self.dims]
            for lo, ups in enumerate(self.covers_up):
                for hi in ups:
                    got[hi].append(lo)
            got = tuple(tuple(c) for c in got)
            self._cache["covers_down"] = got
        return got

    def downsets(self):
        """Bitmask per face of everything weakly below it (itself included)."""
        got = self._cache.get("downsets")
        if got is None:
            order = sorted(range(len(self.dims)), key=lambda i: self.dims[i])
            down = [0] * len(self.dims)
            covers_down = self.covers_down()
            for i in order:
                mask = 1 << i
                for c in covers_down[i]:
                    mask |= down[c]
                down[i] = mask
            got = tuple(down)
            self._cache["downsets"] = got
        return got

    def check_graded(self):
        for lo, ups in enumerate(self.covers_up):
            for hi in ups:
                if self.dims[hi] != self.dims[lo] + 1:
                    raise ValueError(
                        f"cover {self.labels[lo]} < {self.labels[hi]} skips a rank"
                    )


def _point_lattice() -> FaceLattice:
    return FaceLattice([-1, 0], [(1,), ()], ["o", "p"], 0, 1)


def _cone_lattice(L: FaceLattice) -> FaceLattice:
    # labels rewrite on every step (base b<trace>, join j<trace>) so a
    # face's label is its full construction trace, unique by induction
    n = len(L)
    dims = list(L.dims) + [d + 1 for d in L.dims]
    labels = [f"b{lab}" for lab in L.labels] + [f"j{lab}" for lab in L.labels]
    covers = [list(c) for c in L.covers_up]
    for i in range(n):
        covers[i].append(n + i)  # every face is covered by its own join
    for i, ups in enumerate(L.covers_up):
        covers.append([n + j for j in ups])
    return FaceLattice(dims, covers, labels, L.bottom, n + L.top)


def _product_lattice(A: FaceLattice, B: FaceLattice) -> FaceLattice:
    # nonempty faces are pairs of nonempty faces; one bottom is adjoined
    a_faces = [i for i in range(len(A)) if A.dims[i] >= 0]
    b_faces = [j for j in range(len(B)) if B.dims[j] >= 0]
    index = {}
    dims = [-1]
    labels = ["o"]
    for i in a_faces:
        for j in b_faces:
            index[(i, j)] = len(dims)
            dims.append(A.dims[i] + B.dims[j])
            labels.append(f"({A.labels[i]}*{B.labels[j]})")
    covers = [[] for _ in dims]
    for (i, j), me in index.items():
        if dims[me] == 0:
            covers[0].append(me)
        for i2 in A.covers_up[i]:
            covers[me].append(index[(i2, j)])
        for j2 in B.covers_up[j]:
            covers[me].append(index[(i, j2)])
    return FaceLattice(dims, covers, labels, 0, index[(A.top, B.top)])


def _dual_lattice(L: FaceLattice) -> FaceLattice:
    d = L.dim
    dims = [d - 1 - k for k in L.dims]
    covers = [list(c) for c in L.covers_down()]
    labels = [f"d{lab}" for lab in L.labels]
    return FaceLattice(dims, covers, labels, L.top, L.bottom)


def _segment_lattice() -> FaceLattice:
    return _cone_lattice(_point_lattice())


def _build(e: Expr) -> FaceLattice:
    if isinstance(e, Pt):
        return _point_lattice()
    if isinstance(e, Cone):
        return _cone_lattice(_build(e.body))
    if isinstance(e, Prism):
        return _product_lattice(_build(e.body), _segment_lattice())
    if isinstance(e, Bipyr):
        inner = _dual_lattice(_build(e.body))
        return _dual_lattice(_product_lattice(inner, _segment_lattice()))
    if isinstance(e, Dual):
        return _dual_lattice(_build(e.body))
    if isinstance(e, Prod):
        return _product_lattice(_build(e.left), _build(e.right))
    if isinstance(e, Simplex):
        L = _point_lattice()
        for _ in range(e.n):
            L = _cone_lattice(L)
        return L
    if isinstance(e, Cube):
        L = _segment_lattice()
        for _ in range(e.n - 1):
            L = _product_lattice(L, _segment_lattice())
        return L
    if isinstance(e, Crosspoly):
        return _dual_lattice(_build(Cube(e.n)))
    if isinstance(e, Word):
        L = _build(e.body)
        for ch in reversed(e.letters):
            if ch == "C":
                L = _cone_lattice(L)
            elif ch == "I":
                L = _product_lattice(L, _segment_lattice())
            else:
                raise ValueError("words containing D denote no polytope lattice")
        return L
    raise TypeError(f"not an expression: {e!r}")


@lru_cache(maxsize=None)
def build_lattice(e: Expr, max_faces: int = DEFAULT_FACE_CAP) -> FaceLattice:
    predicted = face_count(e)  # also rejects D-words
    if predicted > max_faces:
        raise FaceCountLimitError(
            f"{expr_str(e)} has {predicted} faces, over the cap of {max_faces}"
        )
    return _build(e)


# ---------------------------------------------------------------------------
# chain counting


def chain_count_flag(L: FaceLattice) -> FlagVector:
    """Count chains of nonempty proper faces, grouped by dimension set."""
    d = L.dim
    if L.top == L.bottom:
        return FlagVector(-1, {(): 1})

    levels = [L.faces_of_dim(k) for k in range(-1, d + 1)]
    pos = [0] * len(L)
    for level in levels:
        for idx, face in enumerate(level):
            pos[face] = idx

    # below[(face, t)]: bitmask over the dim-t level of faces strictly below
    covers_down = L.covers_down()
    below = {}
    order = sorted(range(len(L)), key=lambda i: L.dims[i])
    for face in order:
        k = L.dims[face]
        if k <= 0:
            continue
        mask = 0
        for c in covers_down[face]:
            mask |= 1 << pos[c]
        below[(face, k - 1)] = mask
        for t in range(0, k - 1):
            acc = 0
            for c in covers_down[face]:
                acc |= below.get((c, t), 0)
            below[(face, t)] = acc

    memo = {}

    def chains(face, mask):
        # chains with dimension-set `mask` strictly below `face`
        if mask == 0:
            return 1
        key = (face, mask)
        got = memo.get(key)
        if got is not None:
            return got
        t = mask.bit_length() - 1
        rest = mask ^ (1 << t)
        level = levels[t + 1]
        total = 0
        m = below.get((face, t), 0)
        while m:
            low = m & -m
            total += chains(level[low.bit_length() - 1], rest)
            m ^= low
        memo[key] = total
        return total

    entries = {}
    for S in dim_subsets(d):
        mask = 0
        for t in S:
            mask |= 1 << t
        entries[S] = chains(L.top, mask)
    return FlagVector(d, entries)


def interval_lattice(L: FaceLattice, lo: int, hi: int) -> FaceLattice:
    """The closed interval [lo, hi] regraded so lo plays the empty face."""
    down = L.downsets()
    if not (down[hi] >> lo) & 1:
        raise ValueError("interval endpoints are not comparable")
    base = L.dims[lo]
    members = [
        c
        for c in range(len(L))
        if ((down[hi] >> c) & 1) and ((down[c] >> lo) & 1)
    ]
    members.sort(key=lambda c: L.dims[c])
    index = {c: i for i, c in enumerate(members)}
    dims = [L.dims[c] - base - 1 for c in members]
    labels = [L.labels[c] for c in members]
    covers = [
        [index[u] for u in L.covers_up[c] if u in index] for c in members
    ]
    return FaceLattice(dims, covers, labels, index[lo], index[hi])


def link_flag(L: FaceLattice, face: int) -> FlagVector:
    """Flag vector of the link of a nonempty face (the interval up to the body)."""
    if face == L.bottom:
        raise ValueError("the empty face has no link")
    return chain_count_flag(interval_lattice(L, face, L.top))


def total_link_vector(L: FaceLattice) -> GradedFlagVector:
    """Sum of link flag vectors over all nonempty faces, graded by link dimension."""
    comps = {}
    for face in range(len(L)):
        if face == L.bottom:
            continue
        lf = link_flag(L, face)
        cur = comps.get(lf.dim)
        comps[lf.dim] = lf if cur is None else cur + lf
    return GradedFlagVector(comps)


def is_eulerian(L: FaceLattice) -> bool:
    """Every interval of rank >= 1 balances even- and odd-dimensional faces.

    Cubic in the face count; meant as a construction sanity gate on small
    lattices.
    """
    down = L.downsets()
    n = len(L)
    for hi in range(n):
        m = down[hi]
        while m:
            low = m & -m
            lo = low.bit_length() - 1
            m ^= low
            if lo == hi:
                continue
            balance = 0
            inner = down[hi]
            while inner:
                lowc = inner & -inner
                c = lowc.bit_length() - 1
                inner ^= lowc
                if (down[c] >> lo) & 1:
                    balance += -1 if (L.dims[c] - L.dims[lo]) % 2 else 1
            if balance != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# evaluation and sample expressions


@lru_cache(maxsize=None)
def flag_of_lattice(e: Expr) -> FlagVector:
    return chain_count_flag(build_lattice(e))


@lru_cache(maxsize=None)
def eval_flag(e: Expr) -> FlagVector:
    """Flag vector of an expression, via the linear operators.

    Products need real lattices and are chain-counted; everything else is
    evaluated by the flag operators, so virtual inputs (words with D) are
    fine anywhere except inside prod.
    """
    if isinstance(e, Pt):
        return point_flag()
    if isinstance(e, Cone):
        return pyramid_flag(eval_flag(e.body))
    if isinstance(e, Prism):
        return prism_flag(eval_flag(e.body))
    if isinstance(e, Bipyr):
        return dual_flag(prism_flag(dual_flag(eval_flag(e.body))))
    if isinstance(e, Dual):
        return dual_flag(eval_flag(e.body))
    if isinstance(e, Prod):
        return flag_of_lattice(e)
    if isinstance(e, Simplex):
        f = point_flag()
        for _ in range(e.n):
            f = pyramid_flag(f)
        return f
    if isinstance(e, Cube):
        f = pyramid_flag(point_flag())
        for _ in range(e.n - 1):
            f = prism_flag(f)
        return f
    if isinstance(e, Crosspoly):
        return dual_flag(eval_flag(Cube(e.n)))
    if isinstance(e, Word):
        f = eval_flag(e.body)
        for ch in reversed(e.letters):
            if ch == "C":
                f = pyramid_flag(f)
            elif ch == "I":
                f = prism_flag(f)
            else:
                f = d_flag(f)
        return f
    raise TypeError(f"not an expression: {e!r}")


def sample_expressions(max_dim: int) -> list[Expr]:
    """A deterministic family of buildable expressions, a few per dimension.

    Exercises every constructor; used by the verification suites to stand
    in for "all" constructible polytopes at desk scale.
    """
    by_dim: list[list[Expr]] = [[] for _ in range(max_dim + 1)]
    if max_dim >= 0:
        by_dim[0].append(Pt())
    for n in range(1, max_dim + 1):
        by_dim[n].append(Simplex(n))
        by_dim[n].append(Cube(n))
        if n >= 2:
            by_dim[n].append(Crosspoly(n))
            by_dim[n].append(Bipyr(Simplex(n - 1)))
        if n >= 3:
            by_dim[n].append(Cone(Crosspoly(n - 1)))
            by_dim[n].append(Prism(Bipyr(Simplex(n - 2))))
            by_dim[n].append(Dual(Cone(Cube(n - 1))))
    if max_dim >= 4:
        by_dim[4].append(Cone(Prism(Cone(Cone(Pt())))))
        by_dim[4].append(Prod(Simplex(2), Simplex(2)))
    if max_dim >= 5:
        by_dim[5].append(Prod(Simplex(2), Simplex(3)))
        by_dim[5].append(Prod(Cube(2), Simplex(3)))
    if max_dim >= 6:
        by_dim[6].append(Prod(Simplex(3), Simplex(3)))
        by_dim[6].append(Prod(Cube(3), Simplex(3)))
        by_dim[6].append(Prod(Cube(2), Bipyr(Simplex(2))))
        by_dim[6].append(Prism(Prod(Simplex(2), Simplex(2))))
    out = []
    for group in by_dim:
        out.extend(group)
    return out
