"""Acceptance suite: one test per criterion, summarised at the end of the run."""

import pytest

from descent_trees.catalog import LAST_PART, MOD4_TYPES, bounded_systems, get_system
from descent_trees.core import compose, enumerate_levels, level_counts, path_to_root, verify_system
from descent_trees.errors import NotTyped
from descent_trees.labels import Matrix2, Rational
from descent_trees.pythagorean import (
    MOD4,
    ROOT,
    children_big1,
    children_big2,
    pair_to_triple,
    pt1_system,
    pt2_system,
    triple_to_pair,
)
from descent_trees.rational import (
    calkin_wilf_system,
    composed_rational_system,
    kepler_system,
    matrix_to_mediant,
    sb_locate,
    sb_path,
)
from descent_trees.typed import (
    char_polynomial,
    derive_type_matrix,
    generating_function,
    level_counts_matrix,
)
from descent_trees.universal import (
    embed_tree,
    laws_of_growth_system,
    theta_universal,
)

from oracles import (
    compositions_of,
    coprime_fractions,
    fibonacci,
    partitions_of,
    primitive_triples,
    pt3_closed_form,
    pt4_closed_form,
)

criterion = pytest.mark.criterion

PT3_COUNTS = [1, 4, 14, 50, 178, 634, 2258, 8042, 28642]
PT4_COUNTS = [1, 2, 5, 12, 29, 70, 169, 408, 985]


def counts_both_ways(name, depth):
    s = get_system(name).system
    G = derive_type_matrix(s, MOD4_TYPES, 5)
    bfs = level_counts(s, depth)
    # the root (3,1) is of type A2
    matrix = level_counts_matrix(G, (0, 1), depth)
    return bfs, matrix


@criterion(1, "PT1 and PT2 level counts are 3^m for m <= 8, by BFS and by matrix")
def test_criterion_1():
    for name in ("pt1", "pt2"):
        bfs, matrix = counts_both_ways(name, 8)
        assert bfs == matrix == [3**m for m in range(9)]
        assert bfs[8] == 6561


@criterion(2, "PT3 level counts for m <= 8 and generating function numerator 1 + t")
def test_criterion_2():
    bfs, matrix = counts_both_ways("pt3", 8)
    assert bfs == matrix == PT3_COUNTS
    assert generating_function((3, 2), (1, 4)).numerator == (1, 1)


@criterion(3, "PT4 level counts for m <= 8; closed forms within 1e-6 for m <= 20")
def test_criterion_3():
    bfs, matrix = counts_both_ways("pt4", 8)
    assert bfs == matrix == PT4_COUNTS
    for name, closed in (("pt3", pt3_closed_form), ("pt4", pt4_closed_form)):
        G = get_system(name).typed.matrix
        exact = level_counts_matrix(G, (0, 1), 20)
        for m, n in enumerate(exact):
            assert abs(closed(m) - n) / n <= 1e-6, (name, m)


@criterion(4, "derived matrices G1..G4 and their stated characteristic polynomials")
def test_criterion_4():
    expected = {
        "pt1": (((1, 2), (2, 1)), [1, -4, 3]),
        "pt2": (((1, 2), (1, 2)), [1, -3, 0]),
        "pt3": (((1, 2), (2, 2)), [1, -3, -2]),
        "pt4": (((1, 2), (1, 1)), [1, -2, -1]),
    }
    got = {}
    for name, (G, _) in expected.items():
        derived = derive_type_matrix(get_system(name).system, MOD4_TYPES, 6)
        assert derived == G, name
        got[name] = char_polynomial(derived)
    assert got == {name: poly for name, (_, poly) in expected.items()}


@criterion(5, "binary, compositions and partitions level counts against brute force")
def test_criterion_5():
    binary = level_counts(get_system("binary").system, 20)
    assert binary == fibonacci(21)
    assert binary[:20][-1] == 6765

    comp_levels = enumerate_levels(get_system("compositions").system, 15)
    for m, level in enumerate(comp_levels):
        assert len(level) == 2**m
        assert {x.parts for x in level} == set(compositions_of(m + 1))

    part_levels = enumerate_levels(get_system("partitions").system, 12)
    assert [len(level) for level in part_levels] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101]
    for m, level in enumerate(part_levels):
        assert {x.parts for x in level} == set(partitions_of(m + 1))
    # the partitions tree is not typed under last-part classes
    with pytest.raises(NotTyped):
        derive_type_matrix(get_system("partitions").system, LAST_PART, 4)


@criterion(6, "Stern-Brocot path and location of 11/8; locate for e + f <= 60")
def test_criterion_6():
    assert sb_path(Rational(11, 8)) == [
        Rational(11, 8), Rational(7, 5), Rational(4, 3), Rational(3, 2), Rational(2, 1), Rational(1, 1),
    ]
    assert sb_locate(Rational(11, 8)) == Matrix2(7, 4, 5, 3)
    pairs = coprime_fractions(60)
    assert len(pairs) > 1000
    for e, f in pairs:
        m = sb_locate(Rational(e, f))
        assert m.det == 1
        assert matrix_to_mediant(m) == Rational(e, f)


@criterion(7, "rational trees reach 1/1 from every a/b with a + b <= 100; no duplicates at depth 10")
def test_criterion_7():
    systems = (kepler_system(), calkin_wilf_system(), composed_rational_system())
    for s in systems:
        for a, b in coprime_fractions(100):
            assert path_to_root(s, Rational(a, b))[-1] == Rational(1, 1)
        flat = [x for level in enumerate_levels(s, 10) for x in level]
        assert len(flat) == len(set(flat))


@criterion(8, "every primitive triple with z <= 1000 reaches (3,1) in PT1..PT4")
def test_criterion_8():
    triples = primitive_triples(1000)
    assert len(triples) == 158
    for name in ("pt1", "pt2", "pt3", "pt4"):
        s = get_system(name).system
        for t in triples:
            assert path_to_root(s, triple_to_pair(t))[-1] == ROOT
        for level in enumerate_levels(s, 6):
            for p in level:
                t = pair_to_triple(p)
                assert t.x**2 + t.y**2 == t.z**2


@criterion(9, "generic composition equals the hand-coded inverses as ordered lists, both orders")
def test_criterion_9():
    mismatches = []
    for rule, hand, label in ((MOD4, children_big1, "A1,A2"), (MOD4.swapped(), children_big2, "A2,A1")):
        g = compose(pt1_system(), pt2_system(), rule)
        for level in enumerate_levels(g, 6):
            for x in level:
                if g.expand(x) != hand(x):
                    mismatches.append((label, x))
    ab = compose(pt1_system(), pt2_system(), MOD4).expand(ROOT)
    ba = compose(pt1_system(), pt2_system(), MOD4.swapped()).expand(ROOT)
    assert set(ab) != set(ba)
    assert not mismatches, f"{len(mismatches)} nodes differ, first {mismatches[0]}"


@criterion(10, "universal tree: path of 30, commutation of embeddings, laws of growth")
def test_criterion_10():
    chain = [30]
    while chain[-1] != 1:
        chain.append(theta_universal(chain[-1]))
    assert chain == [30, 6, 2, 1]

    for entry in bounded_systems():
        s = entry.system
        j = embed_tree(s, 5)
        violations = [x for x in j if x != s.root and j[s.descend(x)] != theta_universal(j[x])]
        assert violations == [], entry.id
        assert len(set(j.values())) == len(j), entry.id

    assert level_counts(laws_of_growth_system(), 10) == level_counts(get_system("binary").system, 10)


@criterion(11, "verify_system is ok for all 12 bounded systems at depth 8")
def test_criterion_11():
    entries = bounded_systems()
    assert len(entries) == 12
    failed = [e.id for e in entries if not verify_system(e.system, 8).ok]
    assert failed == []
