"""Exact linear algebra over a GF context: RREF, kernels, subspaces.

Subspaces are the unit of currency for everything downstream.  A
Subspace stores the unique reduced-row-echelon basis of its row space,
so equality is array equality and hashing is hashing the bytes.
"""

import numpy as np

from .field import GF


def as_matrix(gf, rows):
    """Validate and convert nested lists or arrays to an int64 code matrix."""
    mat = np.asarray(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat[None, :]
    if mat.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {mat.shape}")
    if mat.size and (mat.min() < 0 or mat.max() >= gf.q):
        raise ValueError(f"entries must be codes in [0, {gf.q})")
    return mat


def rref(gf, mat):
    """Reduced row echelon form.

    Returns (R, rank, pivots) where R is the fully reduced matrix (zero
    rows at the bottom), and pivots are the 0-based pivot columns in
    order.  Deterministic: the pivot is always the topmost nonzero entry
    of the leftmost unfinished column.
    """
    R = np.array(mat, dtype=np.int64)
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        pv = int(R[r, c])
        if pv != 1:
            R[r] = gf.mul(gf.inv(pv), R[r])
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            f = R[others, c]
            R[others] = gf.sub(R[others], gf.mul(f[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, tuple(pivots)


def rank(gf, mat):
    return rref(gf, as_matrix(gf, mat))[1]


def row_space(gf, mat):
    """Canonical RREF basis of the row space, as a (rank, m) matrix."""
    R, rk, pivots = rref(gf, as_matrix(gf, mat))
    return R[:rk], pivots


def matmul(gf, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if gf.e == 1:
        return (a @ b) % gf.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = gf.add(out, gf.mul(a[:, k][:, None], b[k][None, :]))
    return out


def matrix_inverse(gf, mat):
    mat = as_matrix(gf, mat)
    n = mat.shape[0]
    if mat.shape[1] != n:
        raise ValueError("inverse of a non-square matrix")
    aug = np.hstack([mat, np.eye(n, dtype=np.int64)])
    R, rk, pivots = rref(gf, aug)
    if pivots[:n] != tuple(range(n)) or rk < n:
        raise ValueError("matrix is singular")
    return R[:, n:].copy()


def kernel(gf, mat):
    """Right null space {x : mat @ x = 0}, as a Subspace of the column space."""
    mat = as_matrix(gf, mat)
    n = mat.shape[1]
    R, rk, pivots = rref(gf, mat)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    rows = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        rows[idx, f] = 1
        for i, pcol in enumerate(pivots):
            rows[idx, pcol] = int(gf.neg(int(R[i, f])))
    return Subspace.from_rows(gf, rows, ambient=n)


def random_matrix(gf, nrows, ncols, rng):
    return np.array(
        [[rng.randrange(gf.q) for _ in range(ncols)] for _ in range(nrows)],
        dtype=np.int64,
    ).reshape(nrows, ncols)


def random_invertible(gf, n, rng):
    while True:
        mat = random_matrix(gf, n, n, rng)
        if rref(gf, mat)[1] == n:
            return mat


class Subspace:
    """A subspace of GF(q)^m held by its unique RREF basis.

    Instances are immutable and hashable; two Subspace objects compare
    equal exactly when they are the same subspace of the same ambient
    space over the same field.
    """

    __slots__ = ("gf", "m", "basis", "pivots", "_hash")

    def __init__(self, gf, basis, pivots=None, validate=True):
        basis = np.asarray(basis, dtype=np.int64)
        if basis.ndim != 2:
            raise ValueError("basis must be a 2-d matrix")
        d, m = basis.shape
        if pivots is None:
            pivots = []
            for i in range(d):
                nz = np.nonzero(basis[i])[0]
                if nz.size == 0:
                    raise ValueError("zero row in a subspace basis")
                pivots.append(int(nz[0]))
            pivots = tuple(pivots)
        else:
            pivots = tuple(int(c) for c in pivots)
        if validate:
            if d > m:
                raise ValueError("more rows than the ambient dimension")
            if len(pivots) != d or any(
                pivots[i] >= pivots[i + 1] for i in range(d - 1)
            ):
                raise ValueError("pivot columns must strictly increase")
            for i, c in enumerate(pivots):
                if int(basis[i, c]) != 1:
                    raise ValueError("pivot entries must be 1")
                if np.any(basis[i, :c]):
                    raise ValueError("nonzero entry left of a pivot")
                col = basis[:, c]
                if np.count_nonzero(col) != 1:
                    raise ValueError("pivot column must be a unit column")
            if basis.size and (basis.min() < 0 or basis.max() >= gf.q):
                raise ValueError("basis entries out of range")
        basis = basis.copy()
        basis.setflags(write=False)
        object.__setattr__(self, "gf", gf)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_rows(cls, gf, rows, ambient=None):
        """Canonicalize arbitrary spanning rows into a Subspace."""
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim == 1:
            rows = rows[None, :]
        if rows.size == 0 and ambient is not None:
            rows = rows.reshape(0, ambient)
        basis, pivots = row_space(gf, rows)
        return cls(gf, basis, pivots, validate=False)

    @classmethod
    def zero(cls, gf, m):
        return cls(gf, np.zeros((0, m), dtype=np.int64), (), validate=False)

    @classmethod
    def full(cls, gf, m):
        return cls(gf, np.eye(m, dtype=np.int64), tuple(range(m)), validate=False)

    @property
    def dim(self):
        return self.basis.shape[0]

    def to_rows(self):
        return [[int(x) for x in row] for row in self.basis]

    def reduce(self, vec):
        """Residual of a vector after eliminating all pivot coordinates."""
        v = np.array(vec, dtype=np.int64)
        if v.shape != (self.m,):
            raise ValueError(f"expected a vector of length {self.m}")
        gf = self.gf
        for i, c in enumerate(self.pivots):
            coeff = int(v[c])
            if coeff:
                v = gf.sub(v, gf.mul(coeff, self.basis[i]))
        return v

    def contains_vector(self, vec):
        return not np.any(self.reduce(vec))

    def __le__(self, other):
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        return all(other.contains_vector(row) for row in self.basis)

    def __lt__(self, other):
        return self.dim < other.dim and self.__le__(other)

    def __ge__(self, other):
        return other.__le__(self)

    def __gt__(self, other):
        return other.__lt__(self)

    def __add__(self, other):
        self._check_ambient(other)
        return Subspace.from_rows(
            self.gf, np.vstack([self.basis, other.basis]), ambient=self.m
        )

    def intersect(self, other):
        """Intersection via the left null space of the stacked bases."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.gf, self.m)
        stacked = np.vstack([self.basis, other.basis])
        relations = kernel(self.gf, stacked.T)
        coeffs = relations.basis[:, : self.dim]
        rows = matmul(self.gf, coeffs, self.basis)
        return Subspace.from_rows(self.gf, rows, ambient=self.m)

    __and__ = intersect

    def perp(self):
        """Annihilator under the standard coordinatewise bilinear form."""
        if self.dim == 0:
            return Subspace.full(self.gf, self.m)
        return kernel(self.gf, self.basis)

    def vector_at(self, t):
        """The t-th vector in the canonical coefficient order.

        Coefficients of basis row 0 are the most significant digit of t
        in base q, so t = 0 is always the zero vector.
        """
        q, d = self.gf.q, self.dim
        if not 0 <= t < q**d:
            raise ValueError(f"index {t} outside [0, {q**d})")
        v = np.zeros(self.m, dtype=np.int64)
        for i in range(d - 1, -1, -1):
            c = t % q
            t //= q
            if c:
                v = self.gf.add(v, self.gf.mul(c, self.basis[i]))
        return v

    def vectors(self, nonzero=False):
        q, d = self.gf.q, self.dim
        for t in range(1 if nonzero else 0, q**d):
            yield self.vector_at(t)

    def _check_ambient(self, other):
        if not isinstance(other, Subspace):
            raise TypeError(f"expected a Subspace, got {type(other).__name__}")
        if self.gf != other.gf or self.m != other.m:
            raise ValueError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.gf == other.gf
            and self.m == other.m
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.gf, self.m, self.basis.tobytes()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Subspace(dim={self.dim}, m={self.m}, {self.gf!r})"
