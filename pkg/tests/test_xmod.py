"""Crossed modules: construction, axiom checking, invariants, morphisms."""

import json
import random

import pytest

from support import tcompose, tinverse
from xmodlab.errors import NonNormal, ParseError, RelationViolated
from xmodlab.perm import (
    PermGroup,
    cyclic,
    hom,
    normal_closure,
    parse_generator_list,
    parse_permutation,
    symmetric,
)
from xmodlab.xmod import (
    CrossedModule,
    XModMorphism,
    identity_xmod,
    normal_inclusion_xmod,
    pi1,
    pi2,
    validate,
    xmod_from_json,
    xmod_isomorphic,
    xmod_to_json,
)


def P(text, degree):
    return parse_permutation(text, degree)


def v_in_s4():
    S4 = symmetric(4)
    V = normal_closure(S4, [P("(1,2)(3,4)", 4)])
    return normal_inclusion_xmod(V, S4)


def a4_in_s4():
    S4 = symmetric(4)
    A4 = S4.subgroup(parse_generator_list("(1,2,3),(2,3,4)", 4))
    return normal_inclusion_xmod(A4, S4)


def broken_cm2():
    # conjugation in S3 is invisible to the trivial group, so CM2 fails
    S3 = symmetric(3)
    triv = cyclic(1)
    return CrossedModule(
        S3, triv, hom(S3, triv, [triv.identity, triv.identity]), []
    )


class TestConstruction:
    def test_identity_xmod_validates(self):
        for G in [cyclic(1), cyclic(4), symmetric(3), symmetric(4)]:
            assert validate(identity_xmod(G)).ok

    def test_normal_inclusions_validate(self):
        assert validate(v_in_s4()).ok
        assert validate(a4_in_s4()).ok
        S3 = symmetric(3)
        C3 = S3.subgroup([P("(1,2,3)", 3)])
        assert validate(normal_inclusion_xmod(C3, S3)).ok

    def test_normal_inclusion_rejects_nonnormal(self):
        S4 = symmetric(4)
        H = S4.subgroup([P("(1,2)", 4)])
        with pytest.raises(NonNormal):
            normal_inclusion_xmod(H, S4)

    def test_inconsistent_action_rejected(self):
        # an order-3 automorphism assigned to an involution cannot extend
        M = PermGroup(4, parse_generator_list("(1,2),(3,4)", 4))
        C2 = cyclic(2)
        bnd = hom(M, C2, [C2.identity, C2.identity])
        rot = hom(M, M, [P("(3,4)", 4), P("(1,2)(3,4)", 4)])
        with pytest.raises(RelationViolated):
            CrossedModule(M, C2, bnd, [rot])

    def test_action_arity_checked(self):
        S3 = symmetric(3)
        with pytest.raises(ValueError):
            CrossedModule(S3, S3, hom(S3, S3, S3.generators), [])


class TestValidation:
    def test_cm1_failure_with_witness(self):
        # constant boundary plus trivial action breaks equivariance
        M = cyclic(2)
        S3 = symmetric(3)
        bnd = hom(M, S3, [P("(1,2)", 3)])
        ident = hom(M, M, list(M.generators))
        X = CrossedModule(M, S3, bnd, [ident, ident])
        report = validate(X)
        assert not report.cm1_ok
        m, q = report.cm1_witness
        # the witness really breaks CM1, checked with raw tuples
        left = bnd.apply(X.act(m, q)).images
        right = tcompose(
            tcompose(tinverse(q.images), bnd.apply(m).images), q.images
        )
        assert left != right
        assert "CM1 fails" in report.describe()

    def test_cm2_failure_with_witness(self):
        X = broken_cm2()
        report = validate(X)
        assert report.cm1_ok and not report.cm2_ok
        m, mp = report.cm2_witness
        left = X.act(m, X.boundary.apply(mp)).images
        right = tcompose(tcompose(tinverse(mp.images), m.images), mp.images)
        assert left != right

    def test_describe_ok(self):
        assert validate(v_in_s4()).describe() == "CM1 ok, CM2 ok"

    def test_action_composes_along_q(self):
        X = v_in_s4()
        rng = random.Random(6)
        qelems = X.Q.elements()
        melems = X.M.elements()
        for _ in range(100):
            m = rng.choice(melems)
            q1, q2 = rng.choice(qelems), rng.choice(qelems)
            assert X.act(m, q1 * q2) == X.act(X.act(m, q1), q2)


class TestInvariants:
    def test_identity_xmod(self):
        X = identity_xmod(symmetric(4))
        assert pi1(X).order() == 1
        K, inv = pi2(X)
        assert K.order() == 1 and inv == []

    def test_normal_inclusion(self):
        X = v_in_s4()
        assert pi1(X).order() == 6
        K, inv = pi2(X)
        assert K.order() == 1 and inv == []

    def test_central_extension_shape(self):
        # trivial boundary with trivial action: pi2 is all of M
        M = cyclic(2)
        C3 = cyclic(3)
        ident = hom(M, M, list(M.generators))
        X = CrossedModule(
            M, C3, hom(M, C3, [C3.identity]), [ident]
        )
        assert validate(X).ok
        assert pi1(X).order() == 3
        K, inv = pi2(X)
        assert K.order() == 2 and inv == [2]

    def test_kernel_is_central(self):
        for X in [v_in_s4(), a4_in_s4()]:
            K, _ = pi2(X)
            for k in K.elements():
                for m in X.M.elements():
                    assert tcompose(k.images, m.images) == tcompose(
                        m.images, k.images
                    )

    def test_image_is_normal(self):
        from xmodlab.perm import image

        for X in [v_in_s4(), a4_in_s4()]:
            im = image(X.boundary)
            im_set = {g.images for g in im.elements()}
            for g in im.elements():
                for q in X.Q.elements():
                    conj = tcompose(
                        tcompose(tinverse(q.images), g.images), q.images
                    )
                    assert conj in im_set


class TestMorphisms:
    def test_identity_morphism_verifies(self):
        X = v_in_s4()
        mor = XModMorphism(
            hom(X.M, X.M, list(X.M.generators)),
            hom(X.Q, X.Q, list(X.Q.generators)),
        )
        assert mor.verify(X, X)
        assert mor.is_isomorphism()

    def test_mismatched_pair_fails(self):
        X = v_in_s4()
        # swap the two Klein generators but fix Q: boundary square breaks
        f = hom(X.M, X.M, [X.M.generators[1], X.M.generators[0]])
        g = hom(X.Q, X.Q, list(X.Q.generators))
        assert not XModMorphism(f, g).verify(X, X)


class TestIsomorphism:
    def test_self(self):
        X = v_in_s4()
        mor = xmod_isomorphic(X, X)
        assert mor is not None and mor.verify(X, X)

    def test_different_kernels(self):
        assert xmod_isomorphic(v_in_s4(), a4_in_s4()) is None

    def test_action_matters(self):
        # same groups and boundary, different actions: not isomorphic
        M = cyclic(3)
        C2 = cyclic(2)
        triv_b = hom(M, C2, [C2.identity])
        ident = hom(M, M, list(M.generators))
        invert = hom(M, M, [M.generators[0].inverse()])
        X = CrossedModule(M, C2, triv_b, [ident])
        Y = CrossedModule(M, C2, triv_b, [invert])
        assert validate(X).ok and validate(Y).ok
        assert xmod_isomorphic(X, X) is not None
        assert xmod_isomorphic(Y, Y) is not None
        assert xmod_isomorphic(X, Y) is None

    def test_relabelled_points(self):
        S4 = symmetric(4)
        V1 = normal_closure(S4, [P("(1,2)(3,4)", 4)])
        X = normal_inclusion_xmod(V1, S4)
        c = P("(1,4,2)", 4)
        V2 = S4.subgroup([g.conj(c) for g in V1.generators])
        Y = normal_inclusion_xmod(V2, S4)
        mor = xmod_isomorphic(X, Y)
        assert mor is not None and mor.verify(X, Y)


class TestJson:
    def test_round_trip(self):
        X = v_in_s4()
        text = xmod_to_json(X)
        Y = xmod_from_json(text)
        assert validate(Y).ok
        assert xmod_isomorphic(X, Y) is not None
        # serialization is stable
        assert xmod_to_json(Y) == text

    def test_schema_keys(self):
        payload = json.loads(xmod_to_json(identity_xmod(cyclic(2))))
        assert set(payload) == {"M", "Q", "boundary", "action"}
        assert set(payload["M"]) == {"degree", "generators"}

    def test_malformed_rejected(self):
        with pytest.raises(ParseError):
            xmod_from_json("not json")
        with pytest.raises(ParseError):
            xmod_from_json("{}")
        good = json.loads(xmod_to_json(v_in_s4()))
        del good["boundary"]
        with pytest.raises(ParseError):
            xmod_from_json(json.dumps(good))
