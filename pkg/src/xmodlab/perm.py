"""Finite permutation groups with exact membership, quotients and isomorphism search.

Points are 1-based.  Products compose left to right: ``(p * q).apply(x) ==
q.apply(p.apply(x))``, so conjugation ``p.conj(q) == q^-1 p q`` and all group
actions in the package are right actions.

Every group builds a stabilizer chain on construction, so order and membership
are exact from the start.  Groups of order at most ``ENUMERATION_BOUND`` may be
fully enumerated (homomorphism verification, fingerprints, quotients); larger
ones raise ``EnumerationBoundExceeded`` instead of sampling.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import lcm

from .errors import (
    DegreeMismatch,
    EnumerationBoundExceeded,
    NonAbelian,
    NonNormal,
    NotASubgroup,
    NotInGroup,
    ParseError,
    RelationViolated,
    SearchBoundExceeded,
)

ENUMERATION_BOUND = 10_000
ISO_SEARCH_BOUND = 512


class Permutation:
    """Bijection of {1..degree}; ``images[i]`` is the image of point ``i + 1``."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self then other."""
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degree {len(self.images)} vs {len(other.images)}"
            )
        oi = other.images
        return Permutation(tuple(oi[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def conj(self, q: "Permutation") -> "Permutation":
        """q^-1 * self * q."""
        return q.inverse() * self * q

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def __pow__(self, k: int) -> "Permutation":
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def moved_points(self):
        return [i + 1 for i, x in enumerate(self.images) if x != i + 1]

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.apply(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.apply(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(1,2)(3,4)``; ``()`` is the identity.

    Whitespace is ignored everywhere.  Points are 1-based and must not exceed
    ``degree``; a point may appear in at most one cycle.
    """
    images = list(range(1, degree + 1))
    used = set()
    i = 0
    n = len(text)

    def skip_ws(j):
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i == n:
        raise ParseError("empty permutation", i)
    saw_cycle = False
    while i < n:
        i = skip_ws(i)
        if i == n:
            break
        if text[i] != "(":
            raise ParseError(f"expected '(' but found {text[i]!r}", i)
        i = skip_ws(i + 1)
        points = []
        if i < n and text[i] == ")":
            i += 1  # () = identity cycle
            saw_cycle = True
            continue
        while True:
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == start:
                raise ParseError("expected a point", i)
            p = int(text[start:i])
            if not 1 <= p <= degree:
                raise ParseError(f"point {p} out of range 1..{degree}", start)
            if p in used:
                raise ParseError(f"point {p} repeated", start)
            used.add(p)
            points.append(p)
            i = skip_ws(i)
            if i < n and text[i] == ",":
                i = skip_ws(i + 1)
                continue
            if i < n and text[i] == ")":
                i += 1
                break
            raise ParseError("expected ',' or ')'", i)
        saw_cycle = True
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    if not saw_cycle:
        raise ParseError("no cycles found", 0)
    return Permutation(images)


def parse_generator_list(text: str, degree: int) -> list[Permutation]:
    """Parse a comma-separated list of cycle-notation permutations.

    Commas inside parentheses separate points; commas between a ``)`` and the
    next ``(`` separate permutations.  An empty string denotes no generators.
    """
    if not text.strip():
        return []
    parts = []
    depth = 0
    current = []
    for j, ch in enumerate(text):
        if ch == "(":
            depth += 1
            current.append(ch)
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", j)
            current.append(ch)
        elif ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError("unbalanced '('", len(text) - 1)
    parts.append("".join(current))
    return [parse_permutation(part, degree) for part in parts]


class PermGroup:
    """Group generated by permutations of a common degree.

    The stabilizer chain (base points preferred in natural order 1, 2, ...)
    is built eagerly, so ``order`` and ``contains`` never guess.
    """

    def __init__(self, degree: int, generators):
        generators = tuple(generators)
        for g in generators:
            if not isinstance(g, Permutation):
                raise TypeError(f"not a permutation: {g!r}")
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree}, group degree {degree}"
                )
        self.degree = degree
        self.generators = generators
        self._levels = _build_chain(degree, generators)
        self._order = 1
        for level in self._levels:
            self._order *= len(level["transversal"])
        self._elements = None
        self._index = None
        self._ctx = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def contains(self, p: Permutation) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        residue = _strip(self._levels, p)
        return residue.is_identity()

    __contains__ = contains

    def subgroup(self, generators) -> "PermGroup":
        gens = list(generators)
        for g in gens:
            if g not in self:
                raise NotInGroup(f"{g} is not in the group")
        return PermGroup(self.degree, gens)

    def elements(self) -> tuple:
        """All elements, sorted by image tuple (identity first)."""
        if self._elements is None:
            if self._order > ENUMERATION_BOUND:
                raise EnumerationBoundExceeded(
                    f"order {self._order} exceeds {ENUMERATION_BOUND}"
                )
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = x * g
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            self._elements = tuple(sorted(seen))
        return self._elements

    def element_index(self) -> dict:
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.elements())}
        return self._index

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(
            g in other for g in self.generators
        )

    def is_normal_in(self, other: "PermGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(
            n.conj(g) in self
            for n in self.generators
            for g in other.generators
        )

    def is_abelian(self) -> bool:
        return all(
            a * b == b * a
            for a, b in itertools.combinations(self.generators, 2)
        )

    def random_element(self, rng) -> Permutation:
        """Uniformly random element drawn through the stabilizer chain."""
        result = self.identity
        for level in reversed(self._levels):
            points = sorted(level["transversal"])
            result = result * level["transversal"][rng.choice(points)]
        return result

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self._order}, <{gens}>)"


def _build_chain(degree: int, generators) -> list:
    """Deterministic Schreier-Sims.

    Each level holds a base point, the strong generators fixing all earlier
    base points, and a transversal mapping the base point across its orbit.
    The loop re-checks a level whenever a deeper one gains a generator, so on
    return every level's generators generate the stabilizer of the earlier
    base points.
    """
    levels = []

    def min_moved(g):
        for i, x in enumerate(g.images):
            if x != i + 1:
                return i + 1
        raise AssertionError("identity has no moved point")

    def rebuild_orbit(level):
        b = level["point"]
        tr = {b: Permutation.identity(degree)}
        queue = [b]
        while queue:
            a = queue.pop(0)
            ua = tr[a]
            for g in level["gens"]:
                c = g.apply(a)
                if c not in tr:
                    tr[c] = ua * g
                    queue.append(c)
        level["transversal"] = tr

    def add_at(j, h):
        if j == len(levels):
            levels.append({"point": min_moved(h), "gens": [], "transversal": {}})
        # h fixes the base points of levels 0..j-1, so it is a strong
        # generator for every level from 1 to j, not only the stuck one.
        for l in range(1, j + 1):
            levels[l]["gens"].append(h)
            rebuild_orbit(levels[l])

    seed = [g for g in generators if not g.is_identity()]
    if not seed:
        return levels
    levels.append({"point": min(min_moved(g) for g in seed),
                   "gens": list(seed), "transversal": {}})
    rebuild_orbit(levels[0])

    i = 0
    while i >= 0:
        level = levels[i]
        clean = True
        for a in sorted(level["transversal"]):
            ua = level["transversal"][a]
            for g in level["gens"]:
                c = g.apply(a)
                sg = ua * g * level["transversal"][c].inverse()
                if sg.is_identity():
                    continue
                residue, j = _strip_at(levels, sg, i + 1)
                if not residue.is_identity():
                    add_at(j, residue)
                    i = j
                    clean = False
                    break
            if not clean:
                break
        if clean:
            i -= 1
    return levels


def _strip_at(levels, g, start):
    i = start
    while i < len(levels) and not g.is_identity():
        level = levels[i]
        c = g.apply(level["point"])
        u = level["transversal"].get(c)
        if u is None:
            return g, i
        g = g * u.inverse()
        i += 1
    return g, i


def _strip(levels, g):
    residue, _ = _strip_at(levels, g, 0)
    return residue


def group_from_generators(generators, degree: int) -> PermGroup:
    """Group generated by the given permutations of the given degree."""
    return PermGroup(degree, generators)


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHom:
    """Homomorphism given by images of the source generators.

    Construction walks the full Cayley graph of the source, assigning an image
    to every element and checking every edge ``f(x*s) == f(x)*f(s)``; a
    conflict means the assignment violates some relation of the source and
    raises ``RelationViolated`` with a witness word endpoint.  The walk needs
    the source fully enumerable, which is the only verification mode offered:
    sources above ``ENUMERATION_BOUND`` are rejected outright.
    """

    def __init__(self, source: PermGroup, target: PermGroup, images):
        images = tuple(images)
        if len(images) != len(source.generators):
            raise ValueError(
                f"{len(source.generators)} generators but {len(images)} images"
            )
        for im in images:
            if im.degree != target.degree:
                raise DegreeMismatch(
                    f"image degree {im.degree}, target degree {target.degree}"
                )
            if im not in target:
                raise NotInGroup(f"image {im} is not in the target group")
        if source.order() > ENUMERATION_BOUND:
            raise EnumerationBoundExceeded(
                f"cannot verify homomorphism from group of order {source.order()}"
            )
        self.source = source
        self.target = target
        self.images = images
        self.element_map = _verified_element_map(source, target, images)

    def apply(self, p: Permutation) -> Permutation:
        try:
            return self.element_map[p]
        except KeyError:
            raise NotInGroup(f"{p} is not in the source group") from None

    def is_injective(self) -> bool:
        idt = self.target.identity
        return sum(1 for v in self.element_map.values() if v == idt) == 1

    def is_surjective(self) -> bool:
        return len(set(self.element_map.values())) == self.target.order()

    def is_bijective(self) -> bool:
        return (
            self.source.order() == self.target.order() and self.is_surjective()
        )

    def then(self, other: "GroupHom") -> "GroupHom":
        """Composite: self first, then other."""
        return GroupHom(
            self.source, other.target, [other.apply(im) for im in self.images]
        )

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{g} -> {im}" for g, im in zip(self.source.generators, self.images)
        )
        return f"GroupHom({pairs or 'trivial'})"


def _verified_element_map(source, target, images):
    mapping = {source.identity: target.identity}
    frontier = [source.identity]
    gens = source.generators
    while frontier:
        nxt = []
        for x in frontier:
            fx = mapping[x]
            for g, fg in zip(gens, images):
                y = x * g
                fy = fx * fg
                known = mapping.get(y)
                if known is None:
                    mapping[y] = fy
                    nxt.append(y)
                elif known != fy:
                    raise RelationViolated(
                        "generator images do not respect the relations "
                        f"of the source (conflict at {y})",
                        witness=y,
                    )
        frontier = nxt
    return mapping


def hom(source: PermGroup, target: PermGroup, images) -> GroupHom:
    """Verified homomorphism mapping source generators to ``images``."""
    return GroupHom(source, target, images)


def identity_hom(G: PermGroup) -> GroupHom:
    return GroupHom(G, G, G.generators)


def kernel(h: GroupHom) -> PermGroup:
    """Kernel as a subgroup of the source, with a reduced generator list."""
    idt = h.target.identity
    members = [p for p, v in h.element_map.items() if v == idt]
    members.sort()
    gens = []
    known = PermGroup(h.source.degree, [])
    for p in members:
        if not p.is_identity() and p not in known:
            gens.append(p)
            known = PermGroup(h.source.degree, gens)
    return known


def image(h: GroupHom) -> PermGroup:
    return PermGroup(h.target.degree, h.images)


# ---------------------------------------------------------------------------
# closures, quotients, invariants


def normal_closure(G: PermGroup, elements) -> PermGroup:
    """Smallest normal subgroup of G containing the given elements."""
    for s in elements:
        if s not in G:
            raise NotInGroup(f"{s} is not in the group")
    gens = []
    for s in elements:
        if not s.is_identity() and s not in gens:
            gens.append(s)
    N = PermGroup(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for n in list(gens):
            for g in G.generators:
                c = n.conj(g)
                if c not in N:
                    gens.append(c)
                    N = PermGroup(G.degree, gens)
                    changed = True
    return N


def right_coset_representatives(G: PermGroup, H: PermGroup) -> list[Permutation]:
    """Lexicographically least element of each right coset Hg, ascending.

    The identity represents H itself and always comes first.
    """
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G")
    helems = H.elements()
    reps = []
    seen = set()
    for e in G.elements():
        if e in seen:
            continue
        reps.append(e)
        for h in helems:
            seen.add(h * e)
    return reps


def quotient(G: PermGroup, N: PermGroup) -> tuple[PermGroup, GroupHom]:
    """Quotient G/N via the action on right cosets, with the projection.

    Coset ``i`` (point ``i + 1``) is the coset of the ``i``-th representative
    in ``right_coset_representatives`` order, so the projection composed with
    that section is the identity on representatives.
    """
    if not N.is_subgroup_of(G):
        raise NotASubgroup("N is not a subgroup of G")
    for n in N.generators:
        for g in G.generators:
            c = n.conj(g)
            if c not in N:
                raise NonNormal(
                    f"subgroup is not normal: {n} conjugated by {g} escapes",
                    witness=(n, g),
                )
    reps = right_coset_representatives(G, N)
    coset_of = {}
    for i, r in enumerate(reps):
        for h in N.elements():
            coset_of[h * r] = i
    perms = []
    for g in G.generators:
        perms.append(
            Permutation(tuple(coset_of[r * g] + 1 for r in reps))
        )
    Q = PermGroup(len(reps), perms)
    proj = GroupHom(G, Q, perms)
    return Q, proj


def abelian_invariants(G: PermGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... | dk of a finite abelian group.

    Ascending divisibility: C4 x C2 x C2 x C2 comes back as [2, 2, 2, 4].
    """
    if not G.is_abelian():
        bad = next(
            (a, b)
            for a, b in itertools.combinations(G.generators, 2)
            if a * b != b * a
        )
        raise NonAbelian("group is not abelian", witness=bad)
    invariants = []
    H = G
    while H.order() > 1:
        elems = H.elements()
        exponent = max(p.order() for p in elems)
        g = next(p for p in elems if p.order() == exponent)
        invariants.append(exponent)
        H, _ = quotient(H, H.subgroup([g]))
    invariants.reverse()
    return invariants


def center(G: PermGroup) -> PermGroup:
    zs = [
        z
        for z in G.elements()
        if all(z * g == g * z for g in G.generators)
    ]
    return PermGroup(G.degree, [z for z in zs if not z.is_identity()])


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = [
        a.commutator(b) for a, b in itertools.combinations(G.generators, 2)
    ]
    return normal_closure(G, [c for c in comms if not c.is_identity()])


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isomorphism invariants; equal fingerprints do not prove
    isomorphism, unequal ones refute it."""

    order: int
    abelianization: tuple[int, ...]
    center_order: int
    derived_order: int
    order_histogram: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "abelianization": list(self.abelianization),
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "order_histogram": [list(pair) for pair in self.order_histogram],
        }


def fingerprint(G: PermGroup) -> Fingerprint:
    if G.order() > ENUMERATION_BOUND:
        raise EnumerationBoundExceeded(
            f"fingerprint needs full enumeration; order {G.order()} is too big"
        )
    derived = derived_subgroup(G)
    ab, _ = quotient(G, derived)
    hist = Counter(p.order() for p in G.elements())
    return Fingerprint(
        order=G.order(),
        abelianization=tuple(abelian_invariants(ab)),
        center_order=center(G).order(),
        derived_order=derived.order(),
        order_histogram=tuple(sorted(hist.items())),
    )


# ---------------------------------------------------------------------------
# isomorphism search


class _GroupContext:
    """Indexed view of a small group: elements, inverse/order arrays and the
    full multiplication table, all over element indices."""

    def __init__(self, G: PermGroup):
        self.group = G
        self.elements = list(G.elements())
        self.index = {p: i for i, p in enumerate(self.elements)}
        n = len(self.elements)
        self.orders = [p.order() for p in self.elements]
        self.inverse = [self.index[p.inverse()] for p in self.elements]
        self.mult = [
            [self.index[a * b] for b in self.elements] for a in self.elements
        ]
        self.by_order = {}
        for i, o in enumerate(self.orders):
            self.by_order.setdefault(o, []).append(i)


def _context(G: PermGroup, bound: int) -> _GroupContext:
    if G.order() > bound:
        raise SearchBoundExceeded(
            f"group order {G.order()} exceeds search bound {bound}"
        )
    if G._ctx is None:
        G._ctx = _GroupContext(G)
    return G._ctx


def _closure(ctx: _GroupContext, seeds) -> set[int]:
    """Subgroup (as an index set) generated by the seed indices."""
    closed = {0}
    frontier = [0]
    seeds = list(seeds)
    while frontier:
        nxt = []
        for i in frontier:
            for s in seeds:
                j = ctx.mult[i][s]
                if j not in closed:
                    closed.add(j)
                    nxt.append(j)
        frontier = nxt
    return closed


def _generating_sequence(ctx: _GroupContext) -> list[int]:
    """Greedy generating sequence, preferring high element orders."""
    n = len(ctx.elements)
    ranked = sorted(range(n), key=lambda i: (-ctx.orders[i], i))
    seq = []
    closed = {0}
    for i in ranked:
        if i not in closed:
            seq.append(i)
            closed = _closure(ctx, seq)
            if len(closed) == n:
                break
    return seq


def _propagate(ctx1, ctx2, map12, map21, domain, pairs, pair_check, action_edges):
    """Grow a partial isomorphism by closing under products (and optional
    action edges); returns False on the first conflict.

    ``map12``/``map21`` are index arrays with -1 for unassigned; ``domain``
    lists assigned source indices in assignment order.  Every product of two
    assigned elements is itself assigned and checked, so a propagation that
    reaches the whole group certifies a bijective homomorphism.
    """
    stack = list(pairs)
    while stack:
        i, j = stack.pop()
        cur = map12[i]
        if cur == j:
            continue
        if cur != -1 or map21[j] != -1:
            return False
        if ctx1.orders[i] != ctx2.orders[j]:
            return False
        if pair_check is not None and not pair_check(i, j):
            return False
        map12[i] = j
        map21[j] = i
        m1 = ctx1.mult
        m2 = ctx2.mult
        for a in domain:
            ja = map12[a]
            stack.append((m1[i][a], m2[j][ja]))
            stack.append((m1[a][i], m2[ja][j]))
        stack.append((m1[i][i], m2[j][j]))
        if action_edges is not None:
            for act1, act2 in action_edges:
                stack.append((act1[i], act2[j]))
        domain.append(i)
    return True


def _iter_isomorphisms(G: PermGroup, H: PermGroup, bound: int):
    """Yield every isomorphism G -> H as a verified GroupHom.

    Backtracks over a greedy generating sequence; candidates matching the
    source element itself are tried first so that identity-like maps surface
    early when source and target share a degree.
    """
    if G.order() != H.order():
        return
    ctx1 = _context(G, bound)
    ctx2 = _context(H, bound)
    seq = _generating_sequence(ctx1)
    n = len(ctx1.elements)
    same_degree = G.degree == H.degree

    def candidates(i, map21):
        cands = [
            j
            for j in ctx2.by_order.get(ctx1.orders[i], [])
            if map21[j] == -1
        ]
        if same_degree:
            cands.sort(
                key=lambda j: (ctx2.elements[j] != ctx1.elements[i], j)
            )
        return cands

    def backtrack(k, map12, map21, domain):
        if k == len(seq):
            if len(domain) != n:
                return
            images = [
                ctx2.elements[map12[ctx1.index[g]]] for g in G.generators
            ]
            yield GroupHom(G, H, images)
            return
        i = seq[k]
        for j in candidates(i, map21):
            m12 = list(map12)
            m21 = list(map21)
            dom = list(domain)
            if _propagate(ctx1, ctx2, m12, m21, dom, [(i, j)], None, None):
                yield from backtrack(k + 1, m12, m21, dom)

    map12 = [-1] * n
    map21 = [-1] * n
    domain = []
    if not _propagate(ctx1, ctx2, map12, map21, domain, [(0, 0)], None, None):
        return
    yield from backtrack(0, map12, map21, domain)


def isomorphic(G: PermGroup, H: PermGroup, max_order: int = ISO_SEARCH_BOUND):
    """First isomorphism G -> H found, or None after an exhausted search.

    The search is complete, so None is a definitive negative for groups
    within ``max_order``; larger groups raise ``SearchBoundExceeded``.
    """
    if G.order() > max_order or H.order() > max_order:
        raise SearchBoundExceeded(
            f"orders {G.order()}, {H.order()} exceed search bound {max_order}"
        )
    if G.order() != H.order():
        return None
    if fingerprint(G) != fingerprint(H):
        return None
    for iso in _iter_isomorphisms(G, H, max_order):
        return iso
    return None


# ---------------------------------------------------------------------------
# named groups


def cyclic(n: int) -> PermGroup:
    """Cyclic group of order n on n points (trivial group for n = 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return PermGroup(1, [])
    shift = Permutation(tuple(list(range(2, n + 1)) + [1]))
    return PermGroup(n, [shift])


def symmetric(n: int) -> PermGroup:
    """Symmetric group on n points."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return PermGroup(1, [])
    if n == 2:
        return PermGroup(2, [Permutation((2, 1))])
    swap = parse_permutation("(1,2)", n)
    cyc = Permutation(tuple(list(range(2, n + 1)) + [1]))
    return PermGroup(n, [swap, cyc])


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even) order.

    For order 2n with n >= 3 this is the n-gon symmetry group on n points;
    order 4 is realized on 4 points and order 2 as a single swap.
    """
    if order < 2 or order % 2:
        raise ValueError("order must be even and at least 2")
    n = order // 2
    if n == 1:
        return cyclic(2)
    if n == 2:
        return PermGroup(4, [parse_permutation("(1,2)", 4),
                             parse_permutation("(3,4)", 4)])
    rot = Permutation(tuple(list(range(2, n + 1)) + [1]))
    refl = Permutation(tuple([1] + list(range(n, 1, -1))))
    return PermGroup(n, [rot, refl])


_F3_POINTS = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
_F3_INDEX = {v: i + 1 for i, v in enumerate(_F3_POINTS)}


def _matrix_perm(m) -> Permutation:
    """Permutation of the 8 nonzero vectors of F3^2 by right multiplication."""
    images = []
    for a, b in _F3_POINTS:
        va = (a * m[0][0] + b * m[1][0]) % 3
        vb = (a * m[0][1] + b * m[1][1]) % 3
        images.append(_F3_INDEX[(va, vb)])
    return Permutation(tuple(images))


def gl23() -> PermGroup:
    """GL(2,3) acting on the 8 nonzero vectors of F3^2; order 48."""
    t = _matrix_perm([[1, 1], [0, 1]])
    s = _matrix_perm([[0, 2], [1, 0]])
    d = _matrix_perm([[2, 0], [0, 1]])
    return PermGroup(8, [t, s, d])


def sl23() -> PermGroup:
    """SL(2,3) as the determinant-one kernel inside gl23(); order 24."""
    G = gl23()
    c2 = cyclic(2)
    # generator determinants are 1, 1, 2
    det = GroupHom(G, c2, [c2.identity, c2.identity, c2.generators[0]])
    return kernel(det)


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    dg, dh = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(tuple(list(g.images) + list(range(dg + 1, dg + dh + 1)))))
    for h in H.generators:
        gens.append(Permutation(tuple(list(range(1, dg + 1)) + [x + dg for x in h.images])))
    return PermGroup(dg + dh, gens)
