"""Exact matrices over Q and over Laurent polynomials.

RationalMatrix holds Fraction entries.  PolynomialMatrix holds
LaurentPolynomial entries and carries the Smith normal form machinery used
for module presentations over Q[t, 1/t].  Since rational scalars and powers
of t are units of that ring, rows may be rescaled by them freely; the
invariant factors are reported in canonical form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConsistencyError, SingularMatrixError
from .laurent import LaurentPolynomial, exact_div, poly_divmod

_F0 = Fraction(0)
_F1 = Fraction(1)


class RationalMatrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        self._e = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self._e)
        self.cols = len(self._e[0]) if self._e else 0
        if any(len(r) != self.cols for r in self._e):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls([[_F1 if i == j else _F0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[_F0] * c for _ in range(r)])

    def entry(self, i, j):
        return self._e[i][j]

    def row(self, i):
        return list(self._e[i])

    def to_lists(self):
        return [list(r) for r in self._e]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self._e))

    def __repr__(self):
        return f"RationalMatrix({self._e!r})"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._e, other._e)
            ]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalMatrix([[-x for x in r] for r in self._e])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RationalMatrix([[x * q for x in r] for r in self._e])
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            bt = list(zip(*other._e))
            return RationalMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._e]
            )
        return NotImplemented

    __rmul__ = __mul__

    def transpose(self):
        return RationalMatrix([list(c) for c in zip(*self._e)])

    def trace(self):
        return sum(self._e[i][i] for i in range(self.rows))

    def is_identity(self):
        return self.rows == self.cols and self == RationalMatrix.identity(self.rows)

    def power(self, k):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse().power(-k)
        out = RationalMatrix.identity(self.rows)
        for _ in range(k):
            out = out * self
        return out

    def det(self):
        """Determinant by fraction Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self._e]
        n = self.rows
        sign = 1
        total = _F1
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                return _F0
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            total *= m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                if m[i][k]:
                    f = m[i][k] * inv
                    for j in range(k, n):
                        m[i][j] -= f * m[k][j]
        return sign * total

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [list(r) + RationalMatrix.identity(n).row(i) for i, r in enumerate(self._e)]
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            m[k], m[piv] = m[piv], m[k]
            inv = 1 / m[k][k]
            m[k] = [x * inv for x in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return RationalMatrix([r[n:] for r in m])

    def char_poly(self):
        """det(t*I - self) by the Faddeev-LeVerrier recurrence.

        Division happens only by the integers 1..n, which is exact over Q.
        """
        if self.rows != self.cols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = {n: _F1}
        mk = self
        for k in range(1, n + 1):
            ak = -mk.trace() / k
            coeffs[n - k] = ak
            if k < n:
                shifted = RationalMatrix(
                    [
                        [mk.entry(i, j) + (ak if i == j else 0) for j in range(n)]
                        for i in range(n)
                    ]
                )
                mk = self * shifted
        return LaurentPolynomial(coeffs)


def char_poly(m):
    return m.char_poly()


class PolynomialMatrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        self._e = [
            [
                x if isinstance(x, LaurentPolynomial) else LaurentPolynomial.term(x)
                for x in row
            ]
            for row in entries
        ]
        self.rows = len(self._e)
        self.cols = len(self._e[0]) if self._e else 0
        if any(len(r) != self.cols for r in self._e):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        one = LaurentPolynomial.one()
        zero = LaurentPolynomial.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        zero = LaurentPolynomial.zero()
        return cls([[zero] * c for _ in range(r)])

    @classmethod
    def from_rational(cls, m, scale=None):
        """Embed a RationalMatrix, optionally multiplied by a polynomial."""
        if scale is None:
            scale = LaurentPolynomial.one()
        return cls(
            [
                [scale * Fraction(m.entry(i, j)) for j in range(m.cols)]
                for i in range(m.rows)
            ]
        )

    @classmethod
    def from_blocks(cls, blocks):
        """Assemble from a 2d grid of PolynomialMatrix blocks."""
        rows = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b._e[i])
                rows.append(row)
        return cls(rows)

    def entry(self, i, j):
        return self._e[i][j]

    def submatrix(self, row_range, col_range):
        return PolynomialMatrix(
            [[self._e[i][j] for j in col_range] for i in row_range]
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __repr__(self):
        return f"PolynomialMatrix({[[str(x) for x in r] for r in self._e]!r})"

    def is_zero(self):
        return all(x.is_zero for r in self._e for x in r)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return PolynomialMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)]
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return PolynomialMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)]
        )

    def __neg__(self):
        return PolynomialMatrix([[-x for x in r] for r in self._e])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            return PolynomialMatrix([[x * other for x in r] for r in self._e])
        if isinstance(other, PolynomialMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            bt = list(zip(*other._e))
            out = []
            zero = LaurentPolynomial.zero()
            for row in self._e:
                new = []
                for col in bt:
                    acc = zero
                    for a, b in zip(row, col):
                        if a and b:
                            acc = acc + a * b
                    new.append(acc)
                out.append(new)
            return PolynomialMatrix(out)
        return NotImplemented

    def transpose(self):
        return PolynomialMatrix([list(c) for c in zip(*self._e)])

    def det(self):
        """Exact determinant by fraction-free Bareiss elimination.

        Rows are first shifted by powers of t to land in Q[t]; the shift is
        multiplied back at the end, so the result is the true determinant.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return LaurentPolynomial.one()
        m = []
        total_shift = 0
        for row in self._e:
            orders = [x.order for x in row if not x.is_zero]
            k = min(orders) if orders else 0
            if k:
                total_shift += k
                row = [x.shift(-k) for x in row]
            else:
                row = list(row)
            m.append(row)
        sign = 1
        prev = LaurentPolynomial.one()
        for k in range(n - 1):
            piv = next((i for i in range(k, n) if not m[i][k].is_zero), None)
            if piv is None:
                return LaurentPolynomial.zero()
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = exact_div(num, prev) if not num.is_zero else num
            prev = m[k][k]
        result = m[n - 1][n - 1]
        if sign < 0:
            result = -result
        return result.shift(total_shift)

    # -- Smith normal form -------------------------------------------

    def _snf_core(self, track):
        """Reduce a working copy to diagonal form by unimodular operations.

        Pivot choice: the nonzero entry of minimal degree, ties broken by
        the smallest (row, col) pair.  Returns (diag, V, Vinv, rank) where
        self * V ~ row-equivalent diagonal and V is unimodular over
        Q[t, 1/t].  V and Vinv are None unless track is set.
        """
        m = [list(r) for r in self._e]
        rows, cols = self.rows, self.cols
        one = LaurentPolynomial.one()
        zero = LaurentPolynomial.zero()
        v = [[one if i == j else zero for j in range(cols)] for i in range(cols)] if track else None
        vinv = [[one if i == j else zero for j in range(cols)] for i in range(cols)] if track else None

        def normalize_row(i):
            row = m[i]
            live = [x for x in row if not x.is_zero]
            if not live:
                return
            k = min(x.order for x in live)
            cont = None
            for x in live:
                c = x.content()
                cont = c if cont is None else _fraction_gcd(cont, c)
            scale = 1 / cont if cont else _F1
            if k or scale != 1:
                m[i] = [x.shift(-k) * scale if not x.is_zero else x for x in row]

        def col_swap(a, b):
            for r in range(rows):
                m[r][a], m[r][b] = m[r][b], m[r][a]
            if track:
                for r in range(cols):
                    v[r][a], v[r][b] = v[r][b], v[r][a]
                vinv[a], vinv[b] = vinv[b], vinv[a]

        def col_addmul(dst, src, q):
            # col_dst += q * col_src
            for r in range(rows):
                if not m[r][src].is_zero:
                    m[r][dst] = m[r][dst] + q * m[r][src]
            if track:
                for r in range(cols):
                    if not v[r][src].is_zero:
                        v[r][dst] = v[r][dst] + q * v[r][src]
                # inverse op acts on rows of Vinv: row_src -= q * row_dst
                vinv[src] = [a - q * b for a, b in zip(vinv[src], vinv[dst])]

        def row_swap(a, b):
            m[a], m[b] = m[b], m[a]

        def row_addmul(dst, src, q):
            m[dst] = [a + q * b for a, b in zip(m[dst], m[src])]

        for i in range(rows):
            normalize_row(i)

        limit = min(rows, cols)
        k = 0
        while k < limit:
            pivot = None
            for i in range(k, rows):
                for j in range(k, cols):
                    x = m[i][j]
                    if x.is_zero:
                        continue
                    # rows are kept in Q[t] form, so this is the Q[t] degree
                    d = x.degree
                    if pivot is None or (d, i, j) < pivot:
                        pivot = (d, i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != k:
                row_swap(pi, k)
            if pj != k:
                col_swap(pj, k)
            normalize_row(k)

            while True:
                dirty = False
                for i in range(k + 1, rows):
                    if m[i][k].is_zero:
                        continue
                    q, r = poly_divmod(m[i][k], m[k][k])
                    row_addmul(i, k, -q)
                    if not m[i][k].is_zero:
                        row_swap(i, k)
                        normalize_row(k)
                        dirty = True
                        break
                if dirty:
                    continue
                for j in range(k + 1, cols):
                    if m[k][j].is_zero:
                        continue
                    q, r = poly_divmod(m[k][j], m[k][k])
                    col_addmul(j, k, -q)
                    if not m[k][j].is_zero:
                        col_swap(j, k)
                        normalize_row(k)
                        dirty = True
                        break
                if not dirty:
                    break

            offender = None
            pivot_poly = m[k][k]
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if m[i][j].is_zero:
                        continue
                    _, r = poly_divmod(m[i][j], pivot_poly)
                    if not r.is_zero:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                row_addmul(k, offender, LaurentPolynomial.one())
                continue
            k += 1

        diag = [m[i][i] for i in range(limit)]
        vm = PolynomialMatrix(v) if track else None
        vinvm = PolynomialMatrix(vinv) if track else None
        rank = sum(1 for d in diag if not d.is_zero)
        return diag, vm, vinvm, rank

    def smith_normal_form(self):
        """Canonical invariant factors p1 | p2 | ..., padded with zeros to
        min(rows, cols)."""
        diag, _, _, _ = self._snf_core(track=False)
        out = [d.canonicalize() for d in diag]
        nonzero = [d for d in out if not d.is_zero]
        zeros = [d for d in out if d.is_zero]
        return nonzero + zeros

    def rank(self):
        _, _, _, r = self._snf_core(track=False)
        return r

    def kernel_basis(self):
        """Basis of the kernel over Q[t, 1/t], as a list of column matrices."""
        _, v, _, rank = self._snf_core(track=True)
        basis = []
        for j in range(rank, self.cols):
            col = PolynomialMatrix([[v.entry(i, j)] for i in range(self.cols)])
            if not (self * col).is_zero():
                raise ConsistencyError("kernel basis column failed verification")
            basis.append(col)
        return basis


def _fraction_gcd(a, b):
    from math import gcd, lcm

    return Fraction(
        gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator)
    )


def smith_normal_form(pm):
    return pm.smith_normal_form()


def homology_invariant_factors(b1, b2):
    """Invariant factors of ker(b1) / im(b2) over Q[t, 1/t].

    b1 and b2 are consecutive boundary maps (b1 * b2 = 0).  Returns
    (factors, free_rank) where factors are the canonical nonzero invariant
    factors of the torsion part, units included.
    """
    if b1.cols != b2.rows:
        raise ValueError("boundary maps do not compose")
    if not (b1 * b2).is_zero():
        raise ConsistencyError("boundary maps do not compose to zero")
    _, v, vinv, rank = b1._snf_core(track=True)
    y = vinv * b2
    for i in range(rank):
        for j in range(y.cols):
            if not y.entry(i, j).is_zero:
                raise ConsistencyError("image does not land in the kernel")
    kernel_rank = b1.cols - rank
    ybot = y.submatrix(range(rank, b1.cols), range(y.cols))
    diag = ybot.smith_normal_form()
    nonzero = [d for d in diag if not d.is_zero]
    free_rank = kernel_rank - len(nonzero)
    return nonzero, free_rank
