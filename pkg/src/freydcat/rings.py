"""Exact matrix arithmetic over Z, Q and Z/n.

Everything in this module is computed with arbitrary precision: integers are
Python ints, rationals are ``fractions.Fraction``, and residues mod n are ints
normalized into ``[0, n)``.  Matrices are immutable.

We use the row convention throughout the package: a morphism between free row
modules ``R^(1xm) -> R^(1xn)`` is an ``m x n`` matrix acting on row vectors
from the right, so "apply f, then g" is the matrix product ``f @ g``.

The normal forms provided here are

* ``hnf``   -- row Hermite normal form over Z (reduced row echelon over Q,
               Hermite form of the canonical lift over Z/n), together with an
               invertible row transformation,
* ``snf``   -- Smith normal form over Z with both transformations,
* ``solve_left``    -- a particular solution of ``x @ a == b``,
* ``row_syzygies``  -- generators of the left kernel ``{x : x @ a == 0}``.

Over Z/n, solvability and syzygies are decided through the integer lift
``[a ; n*I]``: a congruence ``x*a = b (mod n)`` holds iff ``(x, y)`` solves the
lifted integer system for some integer slack ``y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RingError(ValueError):
    """Unsupported ring, or operands over mismatched rings."""


class MatrixError(ValueError):
    """Dimension mismatch or malformed matrix data."""


class Ring:
    """Base class for the coefficient rings.  Instances are stateless."""

    name = "?"

    def normalize(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def format_elem(self, a) -> str:
        return str(a)

    def parse_elem(self, token: str):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class IntegerRing(Ring):
    name = "Z"

    def normalize(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingError(f"not an integer: {x!r}")
        return x

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    zero = 0
    one = 1

    def parse_elem(self, token):
        return int(token)


class RationalRing(Ring):
    name = "Q"

    def normalize(self, x):
        if isinstance(x, bool):
            raise RingError(f"not a rational: {x!r}")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        raise RingError(f"not a rational: {x!r}")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    zero = Fraction(0)
    one = Fraction(1)

    def format_elem(self, a):
        return str(a)

    def parse_elem(self, token):
        return Fraction(token)


class IntegersMod(Ring):
    """The ring Z/n for n >= 2.  Elements are ints in ``[0, n)``."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n
        self.name = f"Z/{n}"

    def normalize(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingError(f"not an integer: {x!r}")
        return x % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    zero = 0
    one = 1

    def parse_elem(self, token):
        return int(token) % self.n

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.n == self.n

    def __hash__(self):
        return hash(("Z/", self.n))


ZZ = IntegerRing()
QQ = RationalRing()


def ring_from_tag(tag: str) -> Ring:
    """Parse a ring tag: ``Z``, ``Q`` or ``Z/<n>``."""
    tag = tag.strip()
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag.startswith("Z/"):
        try:
            n = int(tag[2:])
        except ValueError:
            raise RingError(f"bad modulus in ring tag {tag!r}") from None
        return IntegersMod(n)
    raise RingError(f"unsupported ring tag {tag!r}")


class Matrix:
    """An immutable rows x cols matrix over a fixed ring.

    0 x n and n x 0 matrices are legal; they carry the morphisms into and out
    of the zero module.
    """

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise MatrixError("negative dimensions")
        data = tuple(tuple(ring.normalize(x) for x in row) for row in entries)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise MatrixError(
                f"entry grid does not match shape {rows}x{cols}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, *args):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), ncols, rows)

    @classmethod
    def zero(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        z = ring.zero
        return cls(ring, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> tuple:
        return self.entries[i]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.format_elem(x) for x in row) for row in self.entries
        )
        return f"Matrix({self.ring}, {self.rows}x{self.cols}: {body})"

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(x == zero for row in self.entries for x in row)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.cols != other.rows:
            raise MatrixError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ring = self.ring
        zero = ring.zero
        out = []
        for i in range(self.rows):
            srow = self.entries[i]
            orow = [zero] * other.cols
            for k in range(self.cols):
                c = srow[k]
                if c == zero:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    orow[j] = ring.add(orow[j], ring.mul(c, brow[j]))
            out.append(orow)
        return Matrix(ring, self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring or self.rows != other.rows or self.cols != other.cols:
            raise MatrixError("shape or ring mismatch in addition")
        ring = self.ring
        return Matrix(
            ring,
            self.rows,
            self.cols,
            [
                [ring.add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        ring = self.ring
        return Matrix(
            ring, self.rows, self.cols, [[ring.neg(x) for x in row] for row in self.entries]
        )

    def scale(self, c) -> "Matrix":
        ring = self.ring
        c = ring.normalize(c)
        return Matrix(
            ring,
            self.rows,
            self.cols,
            [[ring.mul(c, x) for x in row] for row in self.entries],
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ring,
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def take_rows(self, indices: Iterable[int]) -> "Matrix":
        rows = [self.entries[i] for i in indices]
        return Matrix(self.ring, len(rows), self.cols, rows)

    def take_cols(self, indices: Iterable[int]) -> "Matrix":
        idx = list(indices)
        return Matrix(
            self.ring,
            self.rows,
            len(idx),
            [[row[j] for j in idx] for row in self.entries],
        )

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row-major: block (i, j) is ``self[i, j] * other``."""
        if self.ring != other.ring:
            raise RingError("ring mismatch in Kronecker product")
        ring = self.ring
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [[ring.zero] * cols for _ in range(rows)]
        for i in range(self.rows):
            for j in range(self.cols):
                c = self.entries[i][j]
                if c == ring.zero:
                    continue
                for k in range(other.rows):
                    orow = out[i * other.rows + k]
                    base = j * other.cols
                    erow = other.entries[k]
                    for l in range(other.cols):
                        orow[base + l] = ring.add(orow[base + l], ring.mul(c, erow[l]))
        return Matrix(ring, rows, cols, out)

    def vec(self) -> "Matrix":
        """Row-major flattening into a ``1 x (rows*cols)`` matrix."""
        flat = [x for row in self.entries for x in row]
        return Matrix(self.ring, 1, len(flat), [flat])


def unvec(flat: Matrix, rows: int, cols: int) -> Matrix:
    """Inverse of :meth:`Matrix.vec` for a ``1 x (rows*cols)`` matrix."""
    if flat.rows != 1 or flat.cols != rows * cols:
        raise MatrixError("unvec shape mismatch")
    row = flat.entries[0] if flat.rows else ()
    return Matrix(flat.ring, rows, cols, [row[i * cols : (i + 1) * cols] for i in range(rows)])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product; composition of row-module morphisms (apply a, then b)."""
    return a @ b


def vstack(mats: Sequence[Matrix]) -> Matrix:
    """Stack matrices on top of each other.  All must share ring and cols."""
    if not mats:
        raise MatrixError("vstack of empty list (cols unknown)")
    ring, cols = mats[0].ring, mats[0].cols
    rows = []
    for m in mats:
        if m.ring != ring or m.cols != cols:
            raise MatrixError("vstack mismatch")
        rows.extend(m.entries)
    return Matrix(ring, len(rows), cols, rows)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise MatrixError("hstack of empty list (rows unknown)")
    return vstack([m.transpose() for m in mats]).transpose()


def block_diag(ring: Ring, mats: Sequence[Matrix]) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[ring.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        if m.ring != ring:
            raise RingError("block_diag ring mismatch")
        for i in range(m.rows):
            out[r0 + i][c0 : c0 + m.cols] = list(m.entries[i])
        r0 += m.rows
        c0 += m.cols
    return Matrix(ring, rows, cols, out)


# ---------------------------------------------------------------------------
# Row echelon machinery.
#
# All three echelon routines reduce a matrix by invertible row operations and
# track the transformation, returning (h, u, pivots) with u @ m == h.
# ---------------------------------------------------------------------------


def _row_sub(rows, i, k, q):
    """rows[i] -= q * rows[k], in place on lists of ints/Fractions."""
    rk = rows[k]
    ri = rows[i]
    for j in range(len(ri)):
        ri[j] -= q * rk[j]


def _echelon_int(m: Matrix):
    """Integer row Hermite form: pivots positive, entries above in [0, pivot)."""
    h = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(m.cols):
        if r >= m.rows:
            break
        # Euclid on column c among rows r..: shrink entries until one remains.
        while True:
            nz = [i for i in range(r, m.rows) if h[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            clean = True
            for i in range(r + 1, m.rows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    _row_sub(h, i, r, q)
                    _row_sub(u, i, r, q)
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if r < m.rows and h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            pivots.append((r, c))
            r += 1
    # Reduce entries above each pivot, left to right.  Pivot rows have zeros
    # in every earlier pivot column, so later passes cannot undo earlier ones.
    for r, c in pivots:
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                _row_sub(h, i, r, q)
                _row_sub(u, i, r, q)
    return (
        Matrix(ZZ, m.rows, m.cols, h),
        Matrix(ZZ, m.rows, m.rows, u),
        pivots,
    )


def _echelon_frac(m: Matrix):
    """Reduced row echelon form over Q with the row transformation."""
    h = [list(r) for r in m.entries]
    n = m.rows
    u = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(m.cols):
        if r >= n:
            break
        piv = next((i for i in range(r, n) if h[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        inv = 1 / h[r][c]
        h[r] = [x * inv for x in h[r]]
        u[r] = [x * inv for x in u[r]]
        for i in range(n):
            if i != r and h[i][c]:
                q = h[i][c]
                _row_sub(h, i, r, q)
                _row_sub(u, i, r, q)
        pivots.append((r, c))
        r += 1
    return (
        Matrix(QQ, m.rows, m.cols, h),
        Matrix(QQ, n, n, u),
        pivots,
    )


def _lift_to_int(m: Matrix) -> Matrix:
    """Canonical integer lift of a matrix over Z/n (entries already in [0, n))."""
    return Matrix(ZZ, m.rows, m.cols, m.entries)


def hnf(m: Matrix) -> tuple[Matrix, Matrix]:
    """Row normal form ``(h, u)`` with ``u @ m == h`` and ``u`` invertible.

    Over Z this is the row Hermite normal form; over Q the reduced row
    echelon form; over Z/n the Hermite form of the canonical lift, reduced.
    """
    if m.ring == ZZ:
        h, u, _ = _echelon_int(m)
        return h, u
    if m.ring == QQ:
        h, u, _ = _echelon_frac(m)
        return h, u
    if isinstance(m.ring, IntegersMod):
        h, u, _ = _echelon_int(_lift_to_int(m))
        ring = m.ring
        return (
            Matrix(ring, h.rows, h.cols, h.entries),
            Matrix(ring, u.rows, u.cols, u.entries),
        )
    raise RingError(f"hnf unsupported over {m.ring}")


def _solve_left_echelon(a: Matrix, b: Matrix):
    """Solve x @ a == b over Z or Q using the echelon form of ``a``."""
    if a.ring == ZZ:
        h, u, pivots = _echelon_int(a)
        exact = True
    else:
        h, u, pivots = _echelon_frac(a)
        exact = False
    ring = a.ring
    rows_out = []
    for bi in range(b.rows):
        residual = list(b.entries[bi])
        y = [ring.zero] * a.rows
        for r, c in pivots:
            p = h.entries[r][c]
            val = residual[c]
            if val == 0:
                continue
            if exact:
                q, rem = divmod(val, p)
                if rem:
                    return None
            else:
                q = val / p
            y[r] = q
            hr = h.entries[r]
            for j in range(a.cols):
                residual[j] -= q * hr[j]
        if any(x != 0 for x in residual):
            return None
        # x = y @ u
        xrow = [ring.zero] * a.rows
        for k in range(a.rows):
            c = y[k]
            if c == 0:
                continue
            urow = u.entries[k]
            for j in range(a.rows):
                xrow[j] += c * urow[j]
        rows_out.append(xrow)
    return Matrix(ring, b.rows, a.rows, rows_out)


def solve_left(a: Matrix, b: Matrix) -> Matrix | None:
    """A particular solution ``x`` of ``x @ a == b``, or None if unsolvable."""
    if a.ring != b.ring:
        raise RingError("solve_left ring mismatch")
    if a.cols != b.cols:
        raise MatrixError("solve_left needs a.cols == b.cols")
    if a.ring in (ZZ, QQ):
        return _solve_left_echelon(a, b)
    if isinstance(a.ring, IntegersMod):
        n = a.ring.n
        lifted = vstack(
            [_lift_to_int(a), Matrix.identity(ZZ, a.cols).scale(n)]
        )
        sol = _solve_left_echelon(lifted, _lift_to_int(b))
        if sol is None:
            return None
        first = sol.take_cols(range(a.rows))
        return Matrix(a.ring, first.rows, first.cols, first.entries)
    raise RingError(f"solve_left unsupported over {a.ring}")


def row_syzygies(a: Matrix) -> Matrix:
    """A generating set for ``{x : x @ a == 0}``, one generator per row.

    The result may contain redundant generators; callers relying on
    minimality must canonicalize separately.
    """
    if a.ring in (ZZ, QQ):
        if a.ring == ZZ:
            h, u, pivots = _echelon_int(a)
        else:
            h, u, pivots = _echelon_frac(a)
        pivot_rows = {r for r, _ in pivots}
        idx = [i for i in range(a.rows) if i not in pivot_rows]
        return u.take_rows(idx)
    if isinstance(a.ring, IntegersMod):
        n = a.ring.n
        lifted = vstack([_lift_to_int(a), Matrix.identity(ZZ, a.cols).scale(n)])
        syz = row_syzygies(lifted).take_cols(range(a.rows))
        reduced = Matrix(a.ring, syz.rows, syz.cols, syz.entries)
        keep = [i for i in range(reduced.rows) if any(x != 0 for x in reduced.entries[i])]
        return reduced.take_rows(keep)
    raise RingError(f"row_syzygies unsupported over {a.ring}")


def snf(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form over Z: ``(s, u, v)`` with ``u @ m @ v == s``.

    ``s`` is diagonal with nonnegative entries satisfying d1 | d2 | ...;
    ``u`` and ``v`` are unimodular.
    """
    if m.ring != ZZ:
        raise RingError(f"snf requires Z, got {m.ring}")
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def col_sub(j, k, q):
        for row in a:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def col_swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < nr and t < nc:
        # locate a minimal nonzero entry in the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            col_swap(t, j0)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _row_sub(a, i, t, q)
                    _row_sub(u, i, t, q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            # clear row t
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_sub(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, nr)) or any(
                a[t][j] for j in range(t + 1, nc)
            ):
                continue
            # divisibility fix-up: fold in any entry the pivot misses
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(a, t, offender, -1)
            _row_sub(u, t, offender, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return (
        Matrix(ZZ, nr, nc, a),
        Matrix(ZZ, nr, nr, u),
        Matrix(ZZ, nc, nc, v),
    )
