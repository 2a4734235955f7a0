"""Dense linear algebra over a prime field F_q, matrices as lists of rows."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primitive_root(q: int) -> int:
    from .cyclo.field import factorize

    fac = [p for p, _ in factorize(q - 1)]
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in fac):
            return g
    return 1  # q == 2


def rref(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [[x % q for x in r] for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[r]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], ri)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(M: list[list[int]], q: int) -> list[list[int]]:
    """Basis of {v : M v = 0}."""
    ncols = len(M[0]) if M else 0
    R, piv = rref(M, q)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, piv):
            v[pc] = (-row[f]) % q
        basis.append(v)
    return basis


def matvec(A: list[list[int]], v: list[int], q: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % q for row in A]
