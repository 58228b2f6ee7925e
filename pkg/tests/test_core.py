from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from descent_trees.catalog import binary_system, get_rule, get_system
from descent_trees.core import (
    GenerativeSystem,
    PartitionRule,
    compose,
    enumerate_levels,
    level_of,
    path_to_root,
    verify_system,
)
from descent_trees.errors import (
    BrokenSystem,
    DomainError,
    IncompatibleSystems,
    RootHasNoParent,
    UnboundedDegree,
)
from descent_trees.labels import OddPair, Rational
from descent_trees.pythagorean import MOD4, pt1_system, pt2_system, pt3_system
from descent_trees.rational import DENOMINATOR_PARITY, calkin_wilf_system, kepler_system

P = OddPair


def sys_(name):
    return get_system(name).system


def broken_identity_system():
    """descend(x) = x: every non-root node violates the descent inequality."""
    return GenerativeSystem(
        id="broken", root=1, weight=int, descend=lambda n: n,
        expand=lambda n: [n + 1], domain_tag="test",
    )


class TestPathToRoot:
    def test_binary_eleven(self):
        assert path_to_root(binary_system(), 11) == [11, 10, 5, 4, 2, 1]

    def test_root_alone(self):
        assert path_to_root(binary_system(), 1) == [1]

    def test_pt1(self):
        assert path_to_root(pt1_system(), P(5, 3)) == [P(5, 3), P(3, 1)]

    def test_weights_strictly_decrease(self):
        s = binary_system()
        for n in range(1, 500):
            ws = [s.weight(x) for x in path_to_root(s, n)]
            assert all(a > b for a, b in zip(ws, ws[1:]))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            path_to_root(binary_system(), 0)
        with pytest.raises(DomainError):
            path_to_root(pt1_system(), P(4, 2))
        with pytest.raises(DomainError):
            path_to_root(kepler_system(), Rational(2, 4))

    def test_non_decreasing_step_is_broken(self):
        with pytest.raises(BrokenSystem):
            path_to_root(broken_identity_system(), 5)

    def test_budget_guard(self):
        # weight decreases but the chain skips past the root forever
        s = GenerativeSystem(
            id="skips", root=0, weight=lambda n: n, descend=lambda n: n - 2,
            expand=lambda n: [n + 2], domain_tag="test",
        )
        with pytest.raises(BrokenSystem):
            path_to_root(s, 5)


class TestLevelOf:
    def test_examples(self):
        assert level_of(binary_system(), 1) == 0
        assert level_of(binary_system(), 11) == 5
        assert level_of(sys_("pt3"), P(5, 3)) == 1


class TestEnumerate:
    def test_binary(self):
        assert enumerate_levels(binary_system(), 2) == [[1], [2], [3, 4]]

    @pytest.mark.parametrize("name", ["binary", "partitions", "kepler", "stern-brocot", "pt4"])
    def test_depth_zero(self, name):
        s = sys_(name)
        assert enumerate_levels(s, 0) == [[s.root]]

    def test_pt1_level_one(self):
        assert enumerate_levels(pt1_system(), 1) == [[P(3, 1)], [P(5, 1), P(7, 3), P(5, 3)]]

    def test_unbounded(self):
        with pytest.raises(UnboundedDegree):
            enumerate_levels(sys_("universal"), 1)

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            enumerate_levels(binary_system(), -1)

    def test_validates_children(self):
        bad = GenerativeSystem(
            id="bad", root=1, weight=int, descend=lambda n: n - 1, expand=lambda n: [0],
            domain_tag="test", validate=binary_system().validate,
        )
        with pytest.raises(DomainError):
            enumerate_levels(bad, 1)


class TestCompose:
    def test_rational_root_children(self):
        s = compose(kepler_system(), calkin_wilf_system(), DENOMINATOR_PARITY)
        assert set(s.expand(Rational(1, 1))) == {Rational(2, 1), Rational(1, 2)}

    def test_pythagorean_root_children(self):
        s = compose(pt1_system(), pt2_system(), MOD4)
        assert set(s.expand(P(3, 1))) == {P(5, 1), P(7, 3), P(7, 1), P(5, 3)}

    @settings(max_examples=60)
    @given(st.integers(min_value=2, max_value=10**12))
    def test_self_composition_is_identity(self, n):
        f = binary_system()
        for rule in (get_rule("parity"), get_rule("parity").swapped()):
            g = compose(f, f, rule)
            assert g.descend(n) == f.descend(n)
            assert sorted(g.expand(n)) == sorted(f.expand(n))

    def test_tag_mismatch(self):
        with pytest.raises(IncompatibleSystems):
            compose(kepler_system(), sys_("stern-brocot"), DENOMINATOR_PARITY)

    def test_root_mismatch(self):
        other = replace(binary_system(), root=2)
        with pytest.raises(IncompatibleSystems):
            compose(binary_system(), other, get_rule("parity"))

    def test_rule_from_other_domain(self):
        with pytest.raises(IncompatibleSystems):
            compose(pt1_system(), pt2_system(), DENOMINATOR_PARITY)

    def test_unbounded_rejected(self):
        u = sys_("universal")
        with pytest.raises((UnboundedDegree, IncompatibleSystems)):
            compose(u, u, PartitionRule("any", lambda x: "A"))

    @pytest.mark.parametrize("first, second, rule", [
        ("kepler", "calkin-wilf", "denominator-parity"),
        ("calkin-wilf", "kepler", "denominator-parity"),
        ("pt1", "pt2", "mod4"),
        ("pt2", "pt1", "mod4"),
        ("binary", "binary", "parity"),
    ])
    @pytest.mark.parametrize("order", ["AB", "BA"])
    def test_expand_then_descend_is_identity(self, first, second, rule, order):
        r = get_rule(rule)
        if order == "BA":
            r = r.swapped()
        s = compose(sys_(first), sys_(second), r)
        for level in enumerate_levels(s, 6)[:-1]:
            for x in level:
                for c in s.expand(x):
                    assert s.descend(c) == x

    def test_non_commutative(self):
        ab = compose(pt1_system(), pt2_system(), MOD4)
        ba = compose(pt1_system(), pt2_system(), MOD4.swapped())
        assert set(ab.expand(P(3, 1))) != set(ba.expand(P(3, 1)))

    def test_swapped_rule(self):
        sw = MOD4.swapped()
        for p in (P(3, 1), P(5, 1), P(7, 3)):
            assert {MOD4.classify(p), sw.classify(p)} == {"A", "B"}


class TestVerify:
    def test_pt3(self):
        assert verify_system(pt3_system(), 5).ok

    def test_binary(self):
        r = verify_system(binary_system(), 10)
        assert r.ok
        assert r.nodes == sum([1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89])

    def test_broken_reports_descent(self):
        r = verify_system(broken_identity_system(), 3)
        assert not r.ok
        assert r.descent
        assert r.consistency  # descend(n + 1) = n + 1, not n

    def test_duplicates(self):
        dup = GenerativeSystem(
            id="dup", root=0, weight=int, descend=lambda n: 0, expand=lambda n: [1, 1] if n == 0 else [],
            domain_tag="test",
        )
        r = verify_system(dup, 1)
        assert [v.node for v in r.duplicates] == ["1"]

    def test_descend_raising_is_reported(self):
        s = GenerativeSystem(
            id="raises", root=1, weight=int, descend=lambda n: (_ for _ in ()).throw(RootHasNoParent("x")),
            expand=lambda n: [n + 1], domain_tag="test",
        )
        r = verify_system(s, 2)
        assert r.descent and r.consistency
        assert "FAILED" in r.lines()
