"""Schubert varieties in the Grassmannian of GF(q)^m, defined by flags.

A variety here is the set of l-dimensional subspaces W meeting each
member of a fixed flag in at least a prescribed dimension: the member
listed at position i (0-based) must meet W in dimension at least i + 1.

Not every condition matters.  A member whose dimension has a successor
in the dimension tuple is implied by the next condition down the chain,
so the variety only sees the members at the non-redundant dimensions.
That observation drives the fast equality test, and the brute-force
machinery here exists to check it and its consequences honestly.
"""

import itertools
from functools import cached_property

import numpy as np

from .field import field_from_order
from .grassmann import (
    Flag,
    adapted_basis,
    check_alpha,
    enumerate_grassmannian,
    standard_flag,
)
from .linalg import Subspace


def alpha_nc(alpha):
    """The non-redundant entries: those whose successor is absent.

    The largest entry always qualifies.  Conditions at the other entries
    are implied, since meeting a member in dimension i + 2 one step up
    forces meeting this one in dimension i + 1.
    """
    aset = set(alpha)
    return tuple(a for a in alpha if a + 1 not in aset)


def condition_word(alpha, m):
    """Entry r (1-based) counts the dimensions in the tuple that are <= r."""
    alpha = tuple(alpha)
    return tuple(sum(1 for a in alpha if a <= r) for r in range(1, m + 1))


def dual_index_set(alpha, m):
    """Reflected complement: {m + 1 - j : j not in alpha}, sorted."""
    aset = set(alpha)
    return tuple(sorted(m + 1 - j for j in range(1, m + 1) if j not in aset))


def cell_count_polynomial(alpha, m):
    """Coefficients (low degree first) of the point count as a polynomial in q.

    Summing q^(sum_i (b_i - i)) over the dimension tuples b that are
    componentwise at most alpha.  The constant term is always 1.
    """
    alpha = check_alpha(alpha, m)
    l = len(alpha)
    coeffs = [0] * (sum(alpha) - l * (l + 1) // 2 + 1)
    for beta in itertools.combinations(range(1, m + 1), l):
        if all(b <= a for b, a in zip(beta, alpha)):
            d = sum(b - i - 1 for i, b in enumerate(beta))
            coeffs[d] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def polynomial_value(coeffs, q):
    acc = 0
    for c in reversed(tuple(coeffs)):
        acc = acc * q + c
    return acc


class SchubertVariety:
    """A Schubert variety, held as its defining flag (the descriptor).

    Equality and hashing compare descriptors, not point sets: two
    different flags can carve out the same set of points, and deciding
    that is exactly what equal_fast and equal_oracle are for.
    """

    def __init__(self, flag):
        if not isinstance(flag, Flag):
            raise TypeError("expected a Flag")
        if not flag.alpha:
            raise ValueError("a variety needs at least one condition")
        self.flag = flag
        self._point_set = None

    @classmethod
    def standard(cls, gf, m, alpha):
        return cls(standard_flag(gf, m, alpha))

    @property
    def gf(self):
        return self.flag.gf

    @property
    def m(self):
        return self.flag.m

    @property
    def alpha(self):
        return self.flag.alpha

    @property
    def l(self):
        return len(self.flag.alpha)

    @cached_property
    def alpha_nc(self):
        return alpha_nc(self.alpha)

    @cached_property
    def condition_word(self):
        return condition_word(self.alpha, self.m)

    def all_conditions(self):
        """Every (member, required intersection dimension) pair."""
        return [(S, i + 1) for i, S in enumerate(self.flag.subspaces)]

    def minimal_conditions(self):
        """Only the conditions at non-redundant dimensions."""
        ncset = set(self.alpha_nc)
        return [
            (S, i + 1)
            for i, (a, S) in enumerate(zip(self.alpha, self.flag.subspaces))
            if a in ncset
        ]

    def contains(self, W, conditions="minimal"):
        """Whether a point of the Grassmannian lies on the variety.

        Intersection dimensions are computed exactly, one member at a
        time; conditions picks the full or the reduced condition list.
        """
        if not isinstance(W, Subspace):
            raise TypeError("expected a Subspace")
        if W.gf != self.gf or W.m != self.m:
            raise ValueError("point in the wrong ambient space")
        if W.dim != self.l:
            raise ValueError(
                f"point has dimension {W.dim}, the variety lives in "
                f"dimension {self.l}"
            )
        if conditions == "minimal":
            conds = self.minimal_conditions()
        elif conditions == "all":
            conds = self.all_conditions()
        else:
            raise ValueError("conditions must be 'minimal' or 'all'")
        return all((W & S).dim >= r for S, r in conds)

    def points(self, limit=None):
        """Yield the points in canonical Grassmannian order."""
        for W in enumerate_grassmannian(self.gf, self.m, self.l, limit=limit):
            if self.contains(W):
                yield W

    def point_set(self, limit=None):
        if self._point_set is None:
            self._point_set = frozenset(self.points(limit=limit))
        return self._point_set

    def count_points(self, limit=None):
        return len(self.point_set(limit=limit))

    def count_polynomial(self):
        return cell_count_polynomial(self.alpha, self.m)

    def __eq__(self, other):
        if not isinstance(other, SchubertVariety):
            return NotImplemented
        return self.flag == other.flag

    def __hash__(self):
        return hash((SchubertVariety, self.flag))

    def __repr__(self):
        return (
            f"SchubertVariety(alpha={self.alpha}, m={self.m}, {self.gf!r})"
        )

    def to_json_dict(self):
        return {
            "q": self.gf.q,
            "m": self.m,
            "alpha": list(self.alpha),
            "flag": self.flag.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data):
        if "flag" in data:
            flag = Flag.from_json_dict(data["flag"])
            gf = field_from_order(int(data["q"]))
            if flag.gf != gf or flag.m != int(data["m"]):
                raise ValueError("flag and variety headers disagree")
            if tuple(flag.alpha) != tuple(int(a) for a in data["alpha"]):
                raise ValueError("flag and variety dimension tuples disagree")
        else:
            flag = Flag.from_json_dict(data)
        return cls(flag)


def membership(W, omega, conditions="all"):
    return omega.contains(W, conditions=conditions)


def enumerate_points(omega, limit=None):
    return omega.points(limit=limit)


def _check_comparable(o1, o2):
    if o1.gf != o2.gf or o1.m != o2.m:
        raise ValueError("varieties in different ambient spaces")


def equal_oracle(o1, o2):
    """Point-set equality by full enumeration.  The slow ground truth."""
    _check_comparable(o1, o2)
    if o1.l != o2.l:
        return False
    return o1.point_set() == o2.point_set()


def equal_fast(o1, o2, defensive=False):
    """Point-set equality via descriptors, without enumerating anything.

    Distinct dimension tuples always give distinct varieties, and for a
    shared tuple only the members at non-redundant dimensions matter.
    With defensive=True the enumeration oracle runs too, and disagreement
    raises instead of returning.
    """
    _check_comparable(o1, o2)
    if o1.alpha != o2.alpha:
        result = False
    else:
        ncset = set(o1.alpha_nc)
        result = all(
            s1 == s2
            for a, s1, s2 in zip(o1.alpha, o1.flag.subspaces, o2.flag.subspaces)
            if a in ncset
        )
    if defensive:
        expect = equal_oracle(o1, o2)
        if expect != result:
            from .errors import DiscrepancyError

            raise DiscrepancyError(
                "descriptor equality disagrees with enumeration",
                detail={
                    "alpha": (o1.alpha, o2.alpha),
                    "fast": result,
                    "oracle": expect,
                },
            )
    return result


def _witness_candidates(oa, ob, s):
    """Try to build a point on one variety but not the other, directly.

    The generators are adapted-basis rows of the first flag: with the
    difference at the top condition, the first l - 1 rows; otherwise one
    row from just inside each other member.  The final generator is
    searched inside the differing member, off the rival member and off
    the span of the rest.
    """
    gf, m = oa.gf, oa.m
    alpha = oa.alpha
    l = len(alpha)
    adapted = adapted_basis(oa.flag)
    if s == l - 1:
        gens = [adapted[j] for j in range(l - 1)]
    else:
        gens = [adapted[alpha[u] - 1] for u in range(l) if u != s]
    if gens:
        span_g = Subspace.from_rows(gf, np.vstack(gens), ambient=m)
    else:
        span_g = Subspace.zero(gf, m)
    As = oa.flag[s]
    Bs = ob.flag[s]
    for x in As.vectors(nonzero=True):
        if Bs.contains_vector(x) or span_g.contains_vector(x):
            continue
        rows = np.vstack(gens + [np.asarray(x, dtype=np.int64)])
        W = Subspace.from_rows(gf, rows, ambient=m)
        if W.dim != l:
            continue
        if oa.contains(W) != ob.contains(W):
            return W
    return None


def equality_witness(o1, o2):
    """A point on exactly one of the two varieties, or None if equal.

    For flags sharing a dimension tuple the witness is built from the
    largest non-redundant position where the members differ, then
    verified; if the construction comes up empty (or the tuples differ)
    a canonical-order scan of the Grassmannian settles it.
    """
    _check_comparable(o1, o2)
    if o1.alpha == o2.alpha:
        ncset = set(o1.alpha_nc)
        diffs = [
            i
            for i, a in enumerate(o1.alpha)
            if a in ncset and o1.flag[i] != o2.flag[i]
        ]
        if not diffs:
            return None
        s = max(diffs)
        for oa, ob in ((o1, o2), (o2, o1)):
            W = _witness_candidates(oa, ob, s)
            if W is not None:
                return W
    if o1.l == o2.l:
        for W in enumerate_grassmannian(o1.gf, o1.m, o1.l):
            if o1.contains(W) != o2.contains(W):
                return W
        return None
    # different point dimensions never collide; any point of o1 works
    return next(iter(o1.points()))
