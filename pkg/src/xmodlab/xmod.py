"""Crossed modules of finite permutation groups.

A crossed module here is a boundary homomorphism d: M -> Q together with a
right action of Q on M by automorphisms, written m^q, subject to

    CM1:  d(m^q) = q^-1 (dm) q
    CM2:  m^(dm') = m'^-1 m m'   (Peiffer identity)

The action is supplied on the generators of Q only and extended to all of Q by
walking Q's Cayley graph; a conflicting extension means the generator
assignment violates a relation of Q and is rejected at construction.  CM1 and
CM2 themselves are *not* assumed: ``validate`` checks them exhaustively and
reports the first counterexample instead of raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    EnumerationBoundExceeded,
    NonNormal,
    ParseError,
    RelationViolated,
    SearchBoundExceeded,
)
from .perm import (
    ENUMERATION_BOUND,
    ISO_SEARCH_BOUND,
    GroupHom,
    PermGroup,
    Permutation,
    _context,
    _iter_isomorphisms,
    _propagate,
    abelian_invariants,
    fingerprint,
    hom,
    image,
    kernel,
    parse_generator_list,
    quotient,
)

VALIDATION_BOUND = 10_000


class CrossedModule:
    """Boundary d: M -> Q plus a Q-action on M given on Q's generators."""

    def __init__(self, M: PermGroup, Q: PermGroup, boundary: GroupHom, action):
        action = tuple(action)
        if boundary.source is not M or boundary.target is not Q:
            raise ValueError("boundary must map M into Q")
        if len(action) != len(Q.generators):
            raise ValueError("one automorphism of M per generator of Q required")
        for a in action:
            if a.source is not M or a.target is not M:
                raise ValueError("action entries must be endomorphisms of M")
            if not a.is_bijective():
                raise ValueError("action entries must be automorphisms of M")
        self.M = M
        self.Q = Q
        self.boundary = boundary
        self.action = action
        self._table = None
        # extend now so an assignment violating a relation of Q cannot
        # produce a half-usable object
        self._action_table()

    def _action_table(self) -> dict:
        """Index array over M.elements() for every element of Q.

        Built by a breadth-first walk of Q's Cayley graph, composing the
        generator automorphisms; two walks reaching the same element must
        agree or the assignment does not factor through Q.
        """
        if self._table is not None:
            return self._table
        if self.Q.order() > ENUMERATION_BOUND:
            raise EnumerationBoundExceeded(
                f"cannot extend action over group of order {self.Q.order()}"
            )
        elems = self.M.elements()
        index = self.M.element_index()
        gen_arrays = [
            tuple(index[a.apply(m)] for m in elems) for a in self.action
        ]
        identity_array = tuple(range(len(elems)))
        table = {self.Q.identity: identity_array}
        frontier = [self.Q.identity]
        while frontier:
            nxt = []
            for q in frontier:
                arr = table[q]
                for g, garr in zip(self.Q.generators, gen_arrays):
                    qg = q * g
                    composed = tuple(garr[i] for i in arr)
                    known = table.get(qg)
                    if known is None:
                        table[qg] = composed
                        nxt.append(qg)
                    elif known != composed:
                        raise RelationViolated(
                            "action assignment does not respect the "
                            f"relations of Q (conflict at {qg})",
                            witness=qg,
                        )
            frontier = nxt
        self._table = table
        return table

    def act(self, m: Permutation, q: Permutation) -> Permutation:
        """m^q for any q in Q."""
        table = self._action_table()
        try:
            arr = table[q]
        except KeyError:
            raise ValueError(f"{q} is not in Q") from None
        return self.M.elements()[arr[self.M.element_index()[m]]]

    def act_array(self, q: Permutation) -> tuple[int, ...]:
        return self._action_table()[q]

    def boundary_of(self, m: Permutation) -> Permutation:
        return self.boundary.apply(m)

    def __repr__(self) -> str:
        return (
            f"CrossedModule(|M|={self.M.order()}, |Q|={self.Q.order()}, "
            f"|im d|={image(self.boundary).order()})"
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the exhaustive axiom check; witnesses are counterexamples."""

    cm1_ok: bool
    cm2_ok: bool
    cm1_witness: tuple[Permutation, Permutation] | None = None
    cm2_witness: tuple[Permutation, Permutation] | None = None

    @property
    def ok(self) -> bool:
        return self.cm1_ok and self.cm2_ok

    def describe(self) -> str:
        lines = []
        if self.cm1_ok:
            lines.append("CM1 ok")
        else:
            m, q = self.cm1_witness
            lines.append(f"CM1 fails at m={m}, q={q}")
        if self.cm2_ok:
            lines.append("CM2 ok")
        else:
            m, mp = self.cm2_witness
            lines.append(f"CM2 fails at m={m}, m'={mp}")
        return ", ".join(lines)


def validate(X: CrossedModule) -> ValidationReport:
    """Check CM1 and CM2 over every element pair; first failures are kept.

    Exhaustive for |M| within the validation bound; no sampling is done.
    """
    if X.M.order() > VALIDATION_BOUND or X.Q.order() > VALIDATION_BOUND:
        raise EnumerationBoundExceeded(
            "validation is exhaustive and needs both orders within "
            f"{VALIDATION_BOUND}"
        )
    melems = X.M.elements()
    index = X.M.element_index()
    bmap = X.boundary.element_map
    cm1_ok, cm1_witness = True, None
    for q in X.Q.elements():
        arr = X.act_array(q)
        qi = q.inverse()
        for i, m in enumerate(melems):
            if bmap[melems[arr[i]]] != qi * bmap[m] * q:
                cm1_ok, cm1_witness = False, (m, q)
                break
        if not cm1_ok:
            break
    cm2_ok, cm2_witness = True, None
    for mp in melems:
        arr = X.act_array(bmap[mp])
        mpi = mp.inverse()
        for i, m in enumerate(melems):
            if melems[arr[i]] != mpi * m * mp:
                cm2_ok, cm2_witness = False, (m, mp)
                break
        if not cm2_ok:
            break
    return ValidationReport(cm1_ok, cm2_ok, cm1_witness, cm2_witness)


def _conjugation_action(M: PermGroup, Q: PermGroup) -> list[GroupHom]:
    return [
        GroupHom(M, M, [m.conj(q) for m in M.generators])
        for q in Q.generators
    ]


def identity_xmod(P: PermGroup) -> CrossedModule:
    """P -> P with the identity boundary and conjugation action."""
    return CrossedModule(
        P, P, GroupHom(P, P, P.generators), _conjugation_action(P, P)
    )


def normal_inclusion_xmod(N: PermGroup, Q: PermGroup) -> CrossedModule:
    """N -> Q for a normal subgroup N, with the conjugation action."""
    if not N.is_normal_in(Q):
        raise NonNormal("N must be a normal subgroup of Q")
    return CrossedModule(
        N, Q, GroupHom(N, Q, N.generators), _conjugation_action(N, Q)
    )


def pi1(X: CrossedModule) -> PermGroup:
    """Cokernel Q / d(M) (d-image is normal for a valid crossed module)."""
    G, _ = quotient(X.Q, image(X.boundary))
    return G


def pi2(X: CrossedModule) -> tuple[PermGroup, list[int]]:
    """Kernel of d with its invariant factors (central, hence abelian)."""
    K = kernel(X.boundary)
    return K, abelian_invariants(K)


# ---------------------------------------------------------------------------
# morphisms and isomorphism search


@dataclass(frozen=True)
class XModMorphism:
    """Pair of homomorphisms (f: M -> M', g: Q -> Q') commuting with d and
    the actions."""

    f: GroupHom
    g: GroupHom

    def verify(self, X: CrossedModule, Y: CrossedModule) -> bool:
        """Check d'.f = g.d and f(m^q) = f(m)^g(q) on generator pairs.

        Both sides of each law are homomorphisms, so generator checks settle
        the general case.
        """
        for m in X.M.generators:
            if Y.boundary.apply(self.f.apply(m)) != self.g.apply(
                X.boundary.apply(m)
            ):
                return False
        for m in X.M.generators:
            for q in X.Q.generators:
                if self.f.apply(X.act(m, q)) != Y.act(
                    self.f.apply(m), self.g.apply(q)
                ):
                    return False
        return True

    def is_isomorphism(self) -> bool:
        return self.f.is_bijective() and self.g.is_bijective()


def _crossed_generating_sequence(ctx, act_arrays) -> list[int]:
    """Greedy sequence generating M under both products and the Q-action."""

    def subgroup_closure(gens):
        closed = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for s in gens:
                    j = ctx.mult[i][s]
                    if j not in closed:
                        closed.add(j)
                        nxt.append(j)
            frontier = nxt
        return closed

    def crossed_closure(seeds):
        # a subgroup invariant under each generator automorphism is invariant
        # under all of Q, and invariance can be checked on subgroup generators
        gens = list(seeds)
        while True:
            closed = subgroup_closure(gens)
            new = []
            for arr in act_arrays:
                for g in gens:
                    j = arr[g]
                    if j not in closed and j not in new:
                        new.append(j)
            if not new:
                return closed
            gens.extend(new)

    n = len(ctx.elements)
    ranked = sorted(range(n), key=lambda i: (-ctx.orders[i], i))
    seq = []
    closed = {0}
    for i in ranked:
        if i not in closed:
            seq.append(i)
            closed = crossed_closure(seq)
            if len(closed) == n:
                break
    return seq


def xmod_isomorphic(
    X: CrossedModule, Y: CrossedModule, max_order: int = ISO_SEARCH_BOUND
):
    """First crossed-module isomorphism (f, g) found, or None.

    Iterates over the isomorphisms g: Q -> Q' and for each backtracks over
    images of a short sequence that generates M under products *and* the
    Q-action; partial maps are closed under both, checked against d-fibers on
    every assignment, so a completed propagation certifies the morphism.
    The search is exhaustive: None is a definitive negative within the bound.
    """
    for G in (X.M, X.Q, Y.M, Y.Q):
        if G.order() > max_order:
            raise SearchBoundExceeded(
                f"order {G.order()} exceeds search bound {max_order}"
            )
    if X.M.order() != Y.M.order() or X.Q.order() != Y.Q.order():
        return None
    if fingerprint(X.M) != fingerprint(Y.M):
        return None
    if fingerprint(X.Q) != fingerprint(Y.Q):
        return None
    kx, ky = kernel(X.boundary), kernel(Y.boundary)
    if fingerprint(kx) != fingerprint(ky):
        return None
    if fingerprint(image(X.boundary)) != fingerprint(image(Y.boundary)):
        return None

    ctx1 = _context(X.M, max_order)
    ctx2 = _context(Y.M, max_order)
    ctxq1 = _context(X.Q, max_order)
    ctxq2 = _context(Y.Q, max_order)
    n = len(ctx1.elements)

    d1 = [ctxq1.index[X.boundary.apply(m)] for m in ctx1.elements]
    d2 = [ctxq2.index[Y.boundary.apply(m)] for m in ctx2.elements]
    act1 = [
        [ctx1.index[X.act(m, q)] for m in ctx1.elements]
        for q in X.Q.generators
    ]
    fibers2 = {}
    for j, qidx in enumerate(d2):
        fibers2.setdefault(qidx, []).append(j)

    seq = _crossed_generating_sequence(ctx1, act1)

    for g in _iter_isomorphisms(X.Q, Y.Q, max_order):
        gmap = [
            ctxq2.index[g.element_map[q]] for q in ctxq1.elements
        ]
        act2 = [
            [
                ctx2.index[Y.act(m, g.apply(q))] for m in ctx2.elements
            ]
            for q in X.Q.generators
        ]
        action_edges = list(zip(act1, act2))

        def pair_check(i, j):
            return gmap[d1[i]] == d2[j]

        def backtrack(k, map12, map21, domain):
            if k == len(seq):
                if len(domain) != n:
                    return None
                images = [
                    ctx2.elements[map12[ctx1.index[m]]]
                    for m in X.M.generators
                ]
                return GroupHom(X.M, Y.M, images)
            i = seq[k]
            base = fibers2.get(gmap[d1[i]], [])
            for j in base:
                if ctx2.orders[j] != ctx1.orders[i] or map21[j] != -1:
                    continue
                m12, m21, dom = list(map12), list(map21), list(domain)
                if _propagate(
                    ctx1, ctx2, m12, m21, dom, [(i, j)], pair_check,
                    action_edges,
                ):
                    found = backtrack(k + 1, m12, m21, dom)
                    if found is not None:
                        return found
            return None

        map12, map21 = [-1] * n, [-1] * n
        domain = []
        if not _propagate(
            ctx1, ctx2, map12, map21, domain, [(0, 0)], pair_check,
            action_edges,
        ):
            continue
        f = backtrack(0, map12, map21, domain)
        if f is not None:
            morphism = XModMorphism(f, g)
            if not morphism.verify(X, Y):
                continue
            return morphism
    return None


# ---------------------------------------------------------------------------
# JSON schema


def xmod_to_json_dict(X: CrossedModule) -> dict:
    return {
        "M": {
            "degree": X.M.degree,
            "generators": [str(m) for m in X.M.generators],
        },
        "Q": {
            "degree": X.Q.degree,
            "generators": [str(q) for q in X.Q.generators],
        },
        "boundary": [str(im) for im in X.boundary.images],
        "action": [
            [str(im) for im in a.images] for a in X.action
        ],
    }


def xmod_to_json(X: CrossedModule) -> str:
    return json.dumps(xmod_to_json_dict(X), indent=2)


def xmod_from_json_dict(data: dict) -> CrossedModule:
    try:
        mdeg = int(data["M"]["degree"])
        mgens = list(data["M"]["generators"])
        qdeg = int(data["Q"]["degree"])
        qgens = list(data["Q"]["generators"])
        braw = list(data["boundary"])
        araw = list(data["action"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"crossed module JSON missing field: {exc}") from None
    M = PermGroup(mdeg, [_parse_one(s, mdeg) for s in mgens])
    Q = PermGroup(qdeg, [_parse_one(s, qdeg) for s in qgens])
    if len(braw) != len(M.generators):
        raise ParseError("boundary must list one image per M generator")
    boundary = hom(M, Q, [_parse_one(s, qdeg) for s in braw])
    if len(araw) != len(Q.generators):
        raise ParseError("action must list one row per Q generator")
    action = []
    for row in araw:
        if len(row) != len(M.generators):
            raise ParseError("action row must list one image per M generator")
        action.append(GroupHom(M, M, [_parse_one(s, mdeg) for s in row]))
    return CrossedModule(M, Q, boundary, action)


def xmod_from_json(text: str) -> CrossedModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return xmod_from_json_dict(data)


def _parse_one(s: str, degree: int) -> Permutation:
    perms = parse_generator_list(s, degree)
    if len(perms) != 1:
        raise ParseError(f"expected a single permutation, got {s!r}")
    return perms[0]
