"""Independent oracles used by the tests.

Everything here works on raw image tuples (1-based, index i-1 holds the
image of i) so the checks do not route through the library's own group
arithmetic.
"""

from itertools import combinations
from math import gcd


def tcompose(a, b):
    """Image tuple of 'apply a, then b'."""
    return tuple(b[x - 1] for x in a)


def tinverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x - 1] = i + 1
    return tuple(out)


def tidentity(degree):
    return tuple(range(1, degree + 1))


def closure(degree, gens):
    """All products of the given image tuples, by breadth-first search."""
    gens = [tuple(g) for g in gens]
    seen = {tidentity(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tcompose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def conjugation_closure(degree, group, seeds):
    """Normal closure of the seed tuples inside the given element set."""
    group = {tuple(g) for g in group}
    current = {tuple(s) for s in seeds}
    while True:
        conjugates = {
            tcompose(tcompose(tinverse(g), s), g)
            for s in current
            for g in group
        }
        new = closure_from(degree, current | conjugates)
        if new == current:
            return current
        current = new


def closure_from(degree, elems):
    return closure(degree, list(elems))


def parity(t):
    """+1 for even permutations, -1 for odd."""
    t = tuple(t)
    seen = [False] * len(t)
    sign = 1
    for i in range(len(t)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = t[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def torder(t):
    t = tuple(t)
    p = t
    n = 1
    ident = tidentity(len(t))
    while p != ident:
        p = tcompose(p, t)
        n += 1
    return n


def det(rows):
    """Integer determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det(minor)
    return total


def minors_gcd_invariants(rows):
    """Invariant factors via determinantal divisors.

    d_k = gcd of all k x k minors; the k-th invariant factor is d_k/d_{k-1}
    while d_k is nonzero, and 0 from the first k with every minor zero.
    """
    rows = [list(r) for r in rows]
    m, n = len(rows), len(rows[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, det(sub))
        if g == 0:
            out.extend([0] * (min(m, n) - k + 1))
            return out
        out.append(g // prev)
        prev = g
    return out


def abelian_order_census(invariants):
    """Element-order histogram of C_{d1} x ... x C_{dk} by direct product walk."""
    from math import lcm

    orders = [1]
    for d in invariants:
        orders = [lcm(o, d // gcd(d, r)) for o in orders for r in range(d)]
    census = {}
    for o in orders:
        census[o] = census.get(o, 0) + 1
    return census
