"""Grassmannians of GF(q)^m and flags of nested subspaces.

Enumeration is organized by pivot-column cells: every l-dimensional
subspace has a unique RREF basis, the possible pivot-column sets are the
l-subsets of {0..m-1} in lexicographic order, and within a cell the free
entries are read row-major as the base-q digits of an index, most
significant first.  This gives a total order on the Grassmannian and
O(cells) rank/unrank without materializing anything.
"""

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetExceededError
from .field import field_from_order
from .linalg import Subspace, random_invertible

DEFAULT_ENUM_BOUND = 10**6


def enumeration_bound():
    """Active cap on how many subspaces a single call may enumerate."""
    raw = os.environ.get("QGRASS_MAX_ENUM")
    if raw:
        return int(raw)
    return DEFAULT_ENUM_BOUND


def _as_rng(seed):
    if seed is None:
        return random.Random()
    if isinstance(seed, random.Random):
        return seed
    return random.Random(int(seed))


def gaussian_binomial(m, l, q):
    """Number of l-dimensional subspaces of an m-dimensional space, exactly."""
    if l < 0 or l > m:
        return 0
    num = 1
    den = 1
    for i in range(l):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def check_alpha(alpha, m, allow_empty=False):
    """Validate a strictly increasing tuple of dimensions in [1, m]."""
    alpha = tuple(int(a) for a in alpha)
    if not alpha:
        if allow_empty:
            return alpha
        raise ValueError("empty dimension tuple")
    if any(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"dimensions {alpha} must strictly increase")
    if alpha[0] < 1 or alpha[-1] > m:
        raise ValueError(f"dimensions {alpha} out of range [1, {m}]")
    return alpha


@dataclass(frozen=True)
class _Cell:
    pivots: tuple
    free: tuple  # (row, col) positions, row-major
    size: int
    offset: int


@lru_cache(maxsize=None)
def _cell_table(q, m, l):
    cells = []
    offset = 0
    for piv in itertools.combinations(range(m), l):
        pivset = set(piv)
        free = tuple(
            (i, j)
            for i in range(l)
            for j in range(piv[i] + 1, m)
            if j not in pivset
        )
        size = q ** len(free)
        cells.append(_Cell(piv, free, size, offset))
        offset += size
    by_pivots = {c.pivots: c for c in cells}
    return cells, by_pivots, offset


def _cell_member(gf, m, cell, t):
    l = len(cell.pivots)
    mat = np.zeros((l, m), dtype=np.int64)
    for i, c in enumerate(cell.pivots):
        mat[i, c] = 1
    for k in range(len(cell.free) - 1, -1, -1):
        i, j = cell.free[k]
        mat[i, j] = t % gf.q
        t //= gf.q
    return Subspace(gf, mat, cell.pivots, validate=False)


def grassmannian_size(q, m, l):
    return gaussian_binomial(m, l, q)


def enumerate_grassmannian(gf, m, l, limit=None):
    """Yield every l-dimensional subspace of GF(q)^m in canonical order.

    Refuses to start if the total exceeds the enumeration budget (the
    limit argument when given, otherwise the global bound).
    """
    if not 0 <= l <= m:
        return
    # guard with the closed-form count first: the cell table itself can
    # be enormous and must not be built for over-budget requests
    total = gaussian_binomial(m, l, gf.q)
    bound = limit if limit is not None else enumeration_bound()
    if total > bound:
        raise BudgetExceededError(
            f"Grassmannian has {total} points, over the bound {bound}",
            requested=total,
            bound=bound,
        )
    cells, _, _ = _cell_table(gf.q, m, l)
    for cell in cells:
        for t in range(cell.size):
            yield _cell_member(gf, m, cell, t)


def rank_subspace(W):
    """Position of a subspace in the canonical enumeration order."""
    _, by_pivots, _ = _cell_table(W.gf.q, W.m, W.dim)
    cell = by_pivots[W.pivots]
    t = 0
    for i, j in cell.free:
        t = t * W.gf.q + int(W.basis[i, j])
    return cell.offset + t


def unrank_subspace(gf, m, l, r):
    cells, _, total = _cell_table(gf.q, m, l)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {total})")
    # cells are few; linear scan beats bisect bookkeeping at these sizes
    for cell in cells:
        if r < cell.offset + cell.size:
            return _cell_member(gf, m, cell, r - cell.offset)
    raise AssertionError("unreachable")


def random_subspace(gf, m, l, rng=None):
    rng = _as_rng(rng)
    total = gaussian_binomial(m, l, gf.q)
    return unrank_subspace(gf, m, l, rng.randrange(total))


# -- flags -------------------------------------------------------------------


@dataclass(frozen=True)
class Flag:
    """A strictly nested chain of subspaces with prescribed dimensions.

    includes_zero records a formal zero-dimensional member.  It never
    affects which points satisfy anything, but keeping it makes taking
    the annihilator of every member an involution on flags even when the
    top member is the whole space.
    """

    gf: object
    m: int
    alpha: tuple
    subspaces: tuple
    includes_zero: bool = False

    def __post_init__(self):
        alpha = check_alpha(self.alpha, self.m, allow_empty=True)
        object.__setattr__(self, "alpha", alpha)
        subs = tuple(self.subspaces)
        object.__setattr__(self, "subspaces", subs)
        if len(subs) != len(alpha):
            raise ValueError("one subspace per dimension entry")
        for a, S in zip(alpha, subs):
            if not isinstance(S, Subspace):
                raise TypeError("flag members must be Subspace instances")
            if S.gf != self.gf or S.m != self.m:
                raise ValueError("flag member in the wrong ambient space")
            if S.dim != a:
                raise ValueError(f"member of dimension {S.dim} listed under {a}")
        for i in range(len(subs) - 1):
            if not subs[i] <= subs[i + 1]:
                raise ValueError("flag members must be nested")

    def __len__(self):
        return len(self.alpha)

    def __getitem__(self, i):
        return self.subspaces[i]

    def member_of_dim(self, d):
        if d == 0 and self.includes_zero:
            return Subspace.zero(self.gf, self.m)
        try:
            i = self.alpha.index(d)
        except ValueError:
            raise KeyError(f"no member of dimension {d}") from None
        return self.subspaces[i]

    def formal_dims(self):
        return ((0,) if self.includes_zero else ()) + self.alpha

    def to_json_dict(self):
        return {
            "q": self.gf.q,
            "m": self.m,
            "alpha": list(self.alpha),
            "subspaces": [S.to_rows() for S in self.subspaces],
            "includes_zero": self.includes_zero,
        }

    @classmethod
    def from_json_dict(cls, data):
        gf = field_from_order(int(data["q"]))
        m = int(data["m"])
        alpha = tuple(int(a) for a in data["alpha"])
        subs = tuple(
            Subspace.from_rows(gf, rows, ambient=m) for rows in data["subspaces"]
        )
        return cls(gf, m, alpha, subs, bool(data.get("includes_zero", False)))


def standard_flag(gf, m, alpha):
    """The flag of leading-coordinate subspaces at the given dimensions."""
    alpha = check_alpha(alpha, m)
    eye = np.eye(m, dtype=np.int64)
    subs = tuple(
        Subspace(gf, eye[:a], tuple(range(a)), validate=False) for a in alpha
    )
    return Flag(gf, m, alpha, subs)


def random_flag(gf, m, alpha, rng=None):
    alpha = check_alpha(alpha, m)
    rng = _as_rng(rng)
    T = random_invertible(gf, m, rng)
    subs = tuple(
        Subspace.from_rows(gf, T[:a], ambient=m) for a in alpha
    )
    return Flag(gf, m, alpha, subs)


def dual_flag(flag):
    """Annihilators of every member, reversed; an involution on flags."""
    members = [Subspace.zero(flag.gf, flag.m)] if flag.includes_zero else []
    members += list(flag.subspaces)
    dual = [S.perp() for S in reversed(members)]
    includes_zero = any(S.dim == 0 for S in dual)
    kept = [S for S in dual if S.dim > 0]
    alpha = tuple(S.dim for S in kept)
    return Flag(flag.gf, flag.m, alpha, tuple(kept), includes_zero)


def adapted_basis(flag):
    """Rows of an invertible matrix whose prefixes realize the flag.

    Row selection is greedy and canonical: vectors of each member in its
    canonical coefficient order, then standard basis vectors.  Equal
    flags therefore get identical adapted bases.
    """
    gf, m = flag.gf, flag.m
    rows = []
    cur = Subspace.zero(gf, m)
    for S in flag.subspaces:
        if cur.dim >= S.dim:
            continue
        for v in S.vectors(nonzero=True):
            if not cur.contains_vector(v):
                rows.append(np.array(v, dtype=np.int64))
                cur = cur + Subspace.from_rows(gf, v, ambient=m)
                if cur.dim == S.dim:
                    break
    eye = np.eye(m, dtype=np.int64)
    for i in range(m):
        if cur.dim == m:
            break
        if not cur.contains_vector(eye[i]):
            rows.append(eye[i])
            cur = cur + Subspace.from_rows(gf, eye[i], ambient=m)
    return np.vstack(rows)


@dataclass(frozen=True)
class CompleteFlag:
    """One subspace of every dimension 0..m, each nested in the next."""

    gf: object
    m: int
    subspaces: tuple

    def __post_init__(self):
        subs = tuple(self.subspaces)
        object.__setattr__(self, "subspaces", subs)
        if len(subs) != self.m + 1:
            raise ValueError("need one member per dimension 0..m")
        for d, S in enumerate(subs):
            if S.dim != d:
                raise ValueError("member dimensions must be 0..m in order")
        for d in range(self.m):
            if not subs[d] <= subs[d + 1]:
                raise ValueError("members must be nested")

    def __getitem__(self, d):
        return self.subspaces[d]

    def contains_flag(self, flag):
        if flag.gf != self.gf or flag.m != self.m:
            return False
        return all(
            self.subspaces[a] == S for a, S in zip(flag.alpha, flag.subspaces)
        )


def complete_flag_containing(flag, rng=None):
    """Extend a flag to a complete flag; canonical when rng is None."""
    gf, m = flag.gf, flag.m
    if rng is None:
        basis = adapted_basis(flag)
    else:
        rng = _as_rng(rng)
        rows = []
        cur = Subspace.zero(gf, m)
        full = Subspace.full(gf, m)
        for S in list(flag.subspaces) + [full]:
            while cur.dim < S.dim:
                v = S.vector_at(rng.randrange(1, gf.q**S.dim))
                if not cur.contains_vector(v):
                    rows.append(np.array(v, dtype=np.int64))
                    cur = cur + Subspace.from_rows(gf, v, ambient=m)
        basis = np.vstack(rows)
    members = tuple(
        Subspace.from_rows(gf, basis[:d], ambient=m) for d in range(m + 1)
    )
    out = CompleteFlag(gf, m, members)
    assert out.contains_flag(flag)
    return out
