"""Small exact linear algebra over the rationals.

Matrices are plain lists of rows; entries may be ``int`` or ``Fraction``.
Everything here is exact, nothing ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]


class SingularMatrixError(ArithmeticError):
    pass


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction | int) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    q = as_fraction(value)
    return f"{q.numerator}/{q.denominator}"


def leading_principal_minors(matrix: Matrix) -> list[Fraction]:
    """Leading principal minors via Bareiss elimination, no pivoting.

    Stops at the first vanishing minor (it is included as 0), since without
    row exchanges the later minors are no longer available.
    """
    n = len(matrix)
    a = [[as_fraction(x) for x in row] for row in matrix]
    minors: list[Fraction] = []
    prev = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
        prev = pivot
    return minors


def is_negative_definite_by_minors(minors: Sequence[Fraction], size: int) -> bool:
    """Sylvester: the k-th leading minor has sign (-1)^k for k = 1..size."""
    if len(minors) != size:
        return False
    return all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(minors))


def ldl_pivots(matrix: Matrix) -> list[Fraction]:
    """Diagonal of the LDL^T factorization of a symmetric matrix.

    Raises SingularMatrixError on a zero pivot.
    """
    n = len(matrix)
    a = [{j: as_fraction(x) for j, x in enumerate(row) if x} for row in matrix]
    # lower[i] holds the nonzero entries of row i of L left of the diagonal
    lower: list[dict[int, Fraction]] = [{} for _ in range(n)]
    diag: list[Fraction] = []
    for j in range(n):
        d = a[j].get(j, Fraction(0)) - sum((x * x * diag[k] for k, x in lower[j].items()), Fraction(0))
        if d == 0:
            raise SingularMatrixError(f"zero pivot at position {j}")
        diag.append(d)
        row_j = lower[j]
        for i in range(j + 1, n):
            row_i = lower[i]
            shared = row_i.keys() & row_j.keys() if len(row_i) < len(row_j) else row_j.keys() & row_i.keys()
            s = a[i].get(j, Fraction(0)) - sum((row_i[k] * row_j[k] * diag[k] for k in shared), Fraction(0))
            if s:
                row_i[j] = s / d
    return diag


def solve(matrix: Matrix, rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("solve expects a square system")
    aug = [[as_fraction(x) for x in row] + [as_fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        row = [x / pivot for x in aug[col]]
        aug[col] = row
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], row)]
    return [aug[i][n] for i in range(n)]

