"""Finitely presented groups: words, coset enumeration, abelian invariants.

Words are stored freely reduced (letters are (generator index, +1 or -1); no cyclic
reduction).  Coset enumeration is relator-driven with immediate coincidence
handling; numbering follows first definition, so results are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CosetLimitExceeded, IncompleteTable, ParseError
from .perm import PermGroup, Permutation

DEFAULT_MAX_COSETS = 1 << 16


def _free_reduce(letters):
    out = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in abstract generators."""

    letters: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, letters) -> "Word":
        return cls(_free_reduce(letters))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __mul__(self, other: "Word") -> "Word":
        return Word(_free_reduce(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_vector(self, ngens: int) -> list[int]:
        vec = [0] * ngens
        for g, e in self.letters:
            vec[g] += e
        return vec


def _default_labels(ngens: int) -> tuple[str, ...]:
    if ngens <= 26:
        return tuple(chr(ord("a") + i) for i in range(ngens))
    return tuple(f"g{i}" for i in range(ngens))


@dataclass(frozen=True)
class Presentation:
    """Generator count plus relators, with printable generator labels."""

    ngens: int
    relators: tuple[Word, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.ngens))
        if len(self.labels) != self.ngens:
            raise ValueError("one label per generator required")
        if len(set(self.labels)) != self.ngens:
            raise ValueError("labels must be distinct")
        for w in self.relators:
            for g, _ in w.letters:
                if not 0 <= g < self.ngens:
                    raise ValueError(f"relator uses unknown generator {g}")

    def format_word(self, w: Word) -> str:
        if not w.letters:
            return "1"
        parts = []
        for g, e in w.letters:
            parts.append(self.labels[g] if e == 1 else f"{self.labels[g]}^-1")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.labels),
            "relators": [self.format_word(w) for w in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Presentation":
        try:
            labels = tuple(data["generators"])
            raw = data["relators"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"presentation JSON missing field: {exc}") from None
        relators = tuple(parse_word(s, labels) for s in raw)
        return cls(len(labels), relators, labels)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


def parse_word(text: str, labels) -> Word:
    """Parse ``a b a^-1``-style words; an uppercase label is its inverse.

    ``1`` (alone) denotes the empty word.  Tokens are whitespace-separated;
    ``x^-1``, ``x^1`` and bare ``x`` are accepted, as is ``X`` for ``x^-1``
    when the label is a single lowercase letter.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    tokens = text.split()
    if tokens == ["1"]:
        return Word.identity()
    letters = []
    for tok in tokens:
        name, _, exp = tok.partition("^")
        if not name:
            raise ParseError(f"bad token {tok!r}")
        sign = 1
        if exp:
            try:
                k = int(exp)
            except ValueError:
                raise ParseError(f"bad exponent in {tok!r}") from None
        else:
            k = 1
        if name not in index:
            lowered = name.lower()
            if (
                len(name) == 1
                and name.isupper()
                and lowered in index
            ):
                name = lowered
                sign = -1
            else:
                raise ParseError(f"unknown generator {name!r}")
        if k < 0:
            sign, k = -sign, -k
        letters.extend([(index[name], sign)] * k)
    return Word.of(letters)


@dataclass(frozen=True)
class CosetTable:
    """Collapsed coset table; row 0 is the coset of the subgroup.

    ``table[i]`` has one entry per column, columns alternating g, g^-1 per
    generator.  ``complete`` means every entry is filled and every relator
    scan closes at every coset.
    """

    presentation: Presentation
    subgroup: tuple[Word, ...]
    table: tuple[tuple[int, ...], ...]
    complete: bool

    @property
    def ncosets(self) -> int:
        return len(self.table)

    def scans_close(self) -> bool:
        """Re-scan every relator at every coset (a from-scratch audit)."""
        for row in range(len(self.table)):
            for rel in self.presentation.relators:
                c = row
                for g, e in rel.letters:
                    c = self.table[c][2 * g + (0 if e == 1 else 1)]
                if c != row:
                    return False
        return True


def todd_coxeter(
    presentation: Presentation,
    subgroup_words=(),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup_words``.

    Relator-driven strategy: subgroup generator words are scanned at coset 0,
    then every live coset is scanned against every relator (filling in and
    defining cosets as needed) and finally has any remaining entries defined.
    Coincidences are processed immediately with a union-find merge.  Raises
    ``CosetLimitExceeded`` when more than ``max_cosets`` cosets would be
    defined in total.
    """
    ngens = presentation.ngens
    ncols = 2 * ngens

    def columns(word):
        return [2 * g + (0 if e == 1 else 1) for g, e in word.letters]

    rel_cols = [columns(w) for w in presentation.relators]
    sub_cols = [columns(w) for w in subgroup_words]

    rows = [[-1] * ncols]
    parent = [0]
    defined = 1

    def rep(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def new_coset():
        nonlocal defined
        if defined >= max_cosets:
            raise CosetLimitExceeded(
                f"needed more than {max_cosets} cosets", limit=max_cosets
            )
        rows.append([-1] * ncols)
        parent.append(len(rows) - 1)
        defined += 1
        return len(rows) - 1

    def set_entry(a, col, b):
        rows[a][col] = b
        rows[b][col ^ 1] = a

    def merge(a, b):
        # union by smaller representative, then transfer the dead row,
        # queueing any induced coincidences
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = rep(x), rep(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            parent[y] = x
            dead = rows[y]
            for col in range(ncols):
                d = dead[col]
                if d == -1:
                    continue
                d = rep(d)
                if rows[d][col ^ 1] == y:
                    rows[d][col ^ 1] = -1
                e = rows[x][col]
                if e == -1 or rep(e) == d:
                    set_entry(x, col, d)
                else:
                    queue.append((rep(e), d))
            rows[y] = None

    def scan_and_fill(start, cols):
        if not cols:
            return
        while True:
            start = rep(start)
            # forward
            f = start
            fi = 0
            while fi < len(cols):
                nxt = rows[f][cols[fi]]
                if nxt == -1:
                    break
                f = rep(nxt)
                fi += 1
            if fi == len(cols):
                if f != start:
                    merge(f, start)
                return
            # backward
            b = start
            bi = len(cols)
            while bi > fi:
                prv = rows[b][cols[bi - 1] ^ 1]
                if prv == -1:
                    break
                b = rep(prv)
                bi -= 1
            if bi == fi:
                merge(f, b)
                return
            if bi == fi + 1:
                set_entry(f, cols[fi], b)
                return
            set_entry(f, cols[fi], new_coset())

    for cols in sub_cols:
        scan_and_fill(0, cols)
    current = 0
    while current < len(rows):
        if rows[current] is None or rep(current) != current:
            current += 1
            continue
        for cols in rel_cols:
            scan_and_fill(current, cols)
            if rows[current] is None or rep(current) != current:
                break
        if rows[current] is None or rep(current) != current:
            current += 1
            continue
        for col in range(ncols):
            if rows[current][col] == -1:
                set_entry(current, col, new_coset())
        current += 1

    live = [i for i in range(len(rows)) if rows[i] is not None and rep(i) == i]
    for i in live:
        if any(entry == -1 for entry in rows[i]):
            raise AssertionError("enumeration left an undefined entry")
    renumber = {old: new for new, old in enumerate(live)}
    table = tuple(
        tuple(renumber[rep(rows[i][col])] for col in range(ncols)) for i in live
    )
    return CosetTable(
        presentation=presentation,
        subgroup=tuple(subgroup_words),
        table=table,
        complete=True,
    )


def perm_rep(ct: CosetTable) -> tuple[PermGroup, tuple[Permutation, ...]]:
    """Permutation action on cosets; one permutation per presentation generator.

    Over the trivial subgroup this is the regular representation, so the group
    of the returned permutations is the presented group itself.
    """
    if not ct.complete:
        raise IncompleteTable("cannot read permutations off a partial table")
    n = ct.ncosets
    perms = tuple(
        Permutation(tuple(ct.table[i][2 * g] + 1 for i in range(n)))
        for g in range(ct.presentation.ngens)
    )
    return PermGroup(n, perms), perms


# ---------------------------------------------------------------------------
# integer normal forms


def smith_normal_form(matrix) -> list[int]:
    """Diagonal d1 | d2 | ... of an integer matrix, nonnegative, zeros last.

    Returns min(rows, cols) entries.  Exact over Python integers, so there is
    no overflow to detect.
    """
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows and any(len(r) != cols for r in A):
        raise ValueError("ragged matrix")
    n = min(rows, cols)
    result = []
    t = 0
    while t < n:
        # pivot: entry of least absolute value in the remaining block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            result.extend([0] * (n - t))
            return result
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
        d = A[t][t]
        dirty = False
        for i in range(t + 1, rows):
            q, r = divmod(A[i][t], d)
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            if r:
                dirty = True
        for j in range(t + 1, cols):
            q, r = divmod(A[t][j], d)
            if q:
                for row in A:
                    row[j] -= q * row[t]
            if r:
                dirty = True
        if dirty:
            continue
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # fold the offending row in so the next pivot divides it
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            continue
        result.append(d)
        t += 1
    return result


def abelianization(presentation: Presentation) -> list[int]:
    """Invariant factors of the abelianized presentation, zeros for free rank.

    Trivial factors are dropped: a perfect relator matrix of full rank gives
    ``[]``, and k generators with no relators give ``[0] * k``.
    """
    g = presentation.ngens
    mat = [w.exponent_vector(g) for w in presentation.relators]
    if not mat:
        return [0] * g
    diag = smith_normal_form(mat)
    rank = sum(1 for d in diag if d)
    factors = [d for d in diag if d > 1]
    return factors + [0] * (g - rank)
