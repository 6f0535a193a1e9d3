"""Flag vectors and the linear operators acting on them.

A flag vector of dimension d records, for each set S of dimensions in
0..d-1, how many chains of nonempty proper faces have dimension set
exactly S.  Entries are exact integers, stored sparsely (absent set =
zero), keyed by sorted tuples.  The operators below are linear maps and
happily produce *virtual* vectors (for example the two-dimensional value
of the diamond operator on a point has an empty-chain count of zero); no
polytopality is assumed anywhere.

Lookups use the extended convention: a query set may mention -1 (the
empty face) and d (the body itself), and both are deleted before the
lookup, because every chain of proper faces extends uniquely by those
two.  This makes the chain-splice formulas for the pyramid and prism
operators uniform; the formulas themselves are cross-checked against
lattice chain counting in the test suite, which is the source of truth
for them.
"""

from __future__ import annotations

import itertools


def dim_subsets(d: int):
    """All dimension sets for a dimension-d flag vector, shortest first."""
    out = []
    for r in range(max(d, 0) + 1):
        out.extend(itertools.combinations(range(d), r))
    return out


class FlagVector:
    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries=()):
        if dim < -1:
            raise ValueError(f"dimension must be >= -1, got {dim}")
        clean = {}
        for dims, value in dict(entries).items():
            key = tuple(dims)
            if any(key[t + 1] <= key[t] for t in range(len(key) - 1)):
                raise ValueError(f"dimension set {key} is not strictly increasing")
            if key and (key[0] < 0 or key[-1] >= dim):
                raise ValueError(f"dimension set {key} out of range for dim {dim}")
            if value:
                clean[key] = value
        self.dim = dim
        self.entries = clean

    def get(self, dims) -> int:
        """Entry lookup with the extended convention (-1 and dim are ignored)."""
        key = []
        for t in dims:
            if t < -1 or t > self.dim:
                raise ValueError(f"dimension {t} outside -1..{self.dim}")
            if 0 <= t < self.dim:
                key.append(t)
        return self.entries.get(tuple(key), 0)

    def items(self):
        """Stored (dimension set, value) pairs, shortest sets first."""
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self.entries

    def scaled(self, c) -> "FlagVector":
        return FlagVector(self.dim, {S: c * v for S, v in self.entries.items()})

    def __add__(self, other):
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, other)])

    def __rmul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return self.scaled(c)

    def __eq__(self, other):
        return (
            isinstance(other, FlagVector)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"{set(S) if S else '{}'}: {v}" for S, v in self.items())
        return f"FlagVector(dim={self.dim}, {{{body}}})"


def empty_flag() -> FlagVector:
    """The flag vector of the empty polytope: one empty chain."""
    return FlagVector(-1, {(): 1})


def point_flag() -> FlagVector:
    return FlagVector(0, {(): 1})


def extended_get(f: FlagVector, dims) -> int:
    return f.get(dims)


def linear_combine(terms) -> FlagVector:
    """Entrywise combination sum(c * f) of equal-dimension flag vectors."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    dim = terms[0][1].dim
    acc = {}
    for c, f in terms:
        if f.dim != dim:
            raise ValueError(f"dimension mismatch: {f.dim} vs {dim}")
        if not c:
            continue
        for S, v in f.entries.items():
            acc[S] = acc.get(S, 0) + c * v
    return FlagVector(dim, acc)


def _splice(lower, upper):
    # lower comes from base faces, upper from lifted faces with dimensions
    # already lowered by one; the two may share exactly their boundary value
    if lower and upper and lower[-1] == upper[0]:
        return lower + upper[1:]
    return lower + upper


def pyramid_flag(f: FlagVector) -> FlagVector:
    """Flag vector of the pyramid over f; raises the dimension by one.

    Every chain of proper faces of the pyramid splits at some point into a
    chain of base faces (the base itself allowed) followed by a chain of
    apex-joins over faces (the bare apex allowed).  Lowering the join
    dimensions by one turns both pieces into one chain in the base, where
    the two pieces may share their splice face; the extended lookup then
    counts each case with a single entry.
    """
    d = f.dim
    entries = {}
    for S in dim_subsets(d + 1):
        total = 0
        for cut in range(len(S) + 1):
            lower = S[:cut]
            upper = tuple(t - 1 for t in S[cut:])
            total += f.get(_splice(lower, upper))
        entries[S] = total
    return FlagVector(d + 1, entries)


def prism_flag(f: FlagVector) -> FlagVector:
    """Flag vector of the prism (product with a segment) over f.

    Chains split into faces sitting over one endpoint followed by faces
    swept along the whole segment.  The swept part has no empty face, so
    splits whose swept chain would start at dimension zero contribute
    nothing, and a nonempty endpoint part carries a factor two for the
    choice of endpoint.
    """
    if f.dim < 0:
        raise ValueError("prism of the empty polytope is undefined")
    d = f.dim
    entries = {}
    for S in dim_subsets(d + 1):
        total = 0
        for cut in range(len(S) + 1):
            upper_src = S[cut:]
            if upper_src and upper_src[0] == 0:
                continue
            lower = S[:cut]
            upper = tuple(t - 1 for t in upper_src)
            count = f.get(_splice(lower, upper))
            total += 2 * count if lower else count
        entries[S] = total
    return FlagVector(d + 1, entries)


def d_flag(f: FlagVector) -> FlagVector:
    """Prism-of-pyramid minus pyramid-of-pyramid; raises the dimension by two."""
    cone = pyramid_flag(f)
    return linear_combine([(1, prism_flag(cone)), (-1, pyramid_flag(cone))])


def dual_flag(f: FlagVector) -> FlagVector:
    """Reverse every dimension set: S goes to {d-1-s for s in S}."""
    if f.dim < 0:
        raise ValueError("duality needs dimension >= 0")
    d = f.dim
    entries = {}
    for S, v in f.entries.items():
        entries[tuple(sorted(d - 1 - s for s in S))] = v
    return FlagVector(d, entries)


class GradedFlagVector:
    """A finite family of flag vectors indexed by grade, with dim == grade."""

    __slots__ = ("components",)

    def __init__(self, components=()):
        clean = {}
        for grade, f in dict(components).items():
            if f.dim != grade:
                raise ValueError(f"component at grade {grade} has dim {f.dim}")
            if not f.is_zero():
                clean[grade] = f
        self.components = clean

    def items(self):
        return sorted(self.components.items())

    def grades(self):
        return sorted(self.components)

    def component(self, grade: int) -> FlagVector:
        return self.components.get(grade, FlagVector(grade, {}))

    def __add__(self, other):
        acc = dict(self.components)
        for grade, f in other.components.items():
            cur = acc.get(grade)
            acc[grade] = f if cur is None else cur + f
        return GradedFlagVector(acc)

    def scaled(self, c) -> "GradedFlagVector":
        return GradedFlagVector({g: f.scaled(c) for g, f in self.components.items()})

    def __eq__(self, other):
        return (
            isinstance(other, GradedFlagVector)
            and self.components == other.components
        )

    def __repr__(self):
        body = ", ".join(f"{g}: {f!r}" for g, f in self.items())
        return f"GradedFlagVector({{{body}}})"


def c_on_graded(graded: GradedFlagVector) -> GradedFlagVector:
    """Apply the pyramid operator componentwise, shifting every grade up by one."""
    return GradedFlagVector(
        {g + 1: pyramid_flag(f) for g, f in graded.components.items()}
    )
