import pytest
from hypothesis import given, settings, strategies as st

from exact2 import fincat
from exact2.bounds import UNBOUNDED, SizeBounds
from exact2.errors import SizeBoundError
from exact2.fincat import (
    FinCategory,
    FinFunctor,
    build_category,
    categories_isomorphic,
    chaotic_two,
    collapse_functor,
    compose_functors,
    composable_pair,
    discrete_category,
    enumerate_functors,
    functor_category,
    identity_functor,
    identity_nat,
    inverse_functor,
    is_isomorphism,
    parallel_pair,
    product,
    pullback,
    pullback_mediator,
    shape_catalog,
    terminal,
    terminal_functor,
    validate_category,
    validate_functor,
    validate_nat,
    walking_arrow,
    walking_iso,
)


def test_shape_catalog_validates():
    for name, cat in shape_catalog().items():
        assert validate_category(cat) == [], name


def test_validate_category_broken_identity_law():
    two = walking_arrow()
    table = dict(two.compose_table)
    table[("a", "1_0")] = "1_0"  # wrong boundary AND wrong identity law
    broken = FinCategory("bad2", two.objects, two.morphisms, two.identity, table)
    report = validate_category(broken)
    assert len(report) == 1
    assert "wrong boundary" in report[0]


def test_validate_category_identity_law_violation_shape():
    # compose(a, id) mapped to another parallel morphism: a clean identity-law breach
    P = parallel_pair()
    table = dict(P.compose_table)
    table[("u", "1_0")] = "v"
    broken = FinCategory("badP", P.objects, P.morphisms, P.identity, table)
    report = validate_category(broken)
    assert any("identity law" in r for r in report)


def test_validate_category_broken_associativity_reported_exactly():
    # Mutate one composition entry of a category where a triple is genuinely composable.
    # Oracle: brute-force scan over all composable triples of the mutated table.
    cat = build_category(
        "T",
        ["0", "1", "2", "3"],
        [
            ("a", "0", "1"), ("b", "1", "2"), ("c", "2", "3"),
            ("ba", "0", "2"), ("cb", "1", "3"), ("cba", "0", "3"),
        ],
        {
            ("b", "a"): "ba", ("c", "b"): "cb",
            ("c", "ba"): "cba", ("cb", "a"): "cba",
        },
    )
    assert validate_category(cat) == []
    table = dict(cat.compose_table)
    table[("c", "ba")] = "cba"
    table[("cb", "a")] = "cba"
    # break one entry: route c∘(b∘a) to a fresh parallel morphism
    objects = list(cat.objects)
    morphisms = list(cat.morphisms) + [("evil", "0", "3")]
    table[("c", "ba")] = "evil"
    table[("evil", "1_0")] = "evil"
    table[("1_3", "evil")] = "evil"
    broken = FinCategory("Tbad", objects, morphisms, cat.identity, table)
    report = validate_category(broken)
    assoc = [r for r in report if "associativity" in r]
    # brute-force oracle: recompute which triples fail
    expected = []
    for h in broken.mor_ids:
        for g in broken.mor_ids:
            if broken.cod[g] != broken.dom[h]:
                continue
            for f in broken.mor_ids:
                if broken.cod[f] != broken.dom[g]:
                    continue
                lhs = broken.compose_table[(broken.compose_table[(h, g)], f)]
                rhs = broken.compose_table[(h, broken.compose_table[(g, f)])]
                if lhs != rhs:
                    expected.append((h, g, f))
    assert expected == [("c", "b", "a")]
    assert len(assoc) == 1 and "'c'" in assoc[0] and "'b'" in assoc[0] and "'a'" in assoc[0]


def test_validate_functor_identity_and_collapse():
    P = parallel_pair()
    assert validate_functor(identity_functor(P)) == []
    col = collapse_functor()
    assert validate_functor(col) == []


def test_validate_functor_identity_violation():
    two = walking_arrow()
    bad = FinFunctor("bad", two, two, {"0": "0", "1": "1"}, {"1_0": "a", "1_1": "1_1", "a": "a"})
    report = validate_functor(bad)
    assert any("identity not preserved" in r or "boundary" in r for r in report)


def test_validate_nat_identity_and_violation():
    col = collapse_functor()
    assert validate_nat(identity_nat(col)) == []
    # component assignment violating a naturality square
    P = parallel_pair()
    F = identity_functor(P)
    # eta_0 = 1_0, eta_1 = 1_1 is natural; swap one side to break:
    bad = fincat.NatTransf("bad", F, F, {"0": "1_0", "1": "1_1"})
    assert validate_nat(bad) == []
    two = walking_arrow()
    G1 = FinFunctor("c0", two, two, {"0": "0", "1": "0"}, {"1_0": "1_0", "1_1": "1_0", "a": "1_0"})
    G2 = identity_functor(two)
    # components 0 -> a would need naturality through a; pick the broken one
    cand = fincat.NatTransf("eta", G1, G2, {"0": "1_0", "1": "1_0"})
    report = validate_nat(cand)
    assert any("wrong boundary" in r for r in report)


def test_pullback_of_identity_is_isomorphic_to_base():
    for cat in (walking_arrow(), parallel_pair(), composable_pair()):
        pb = pullback(identity_functor(cat), identity_functor(cat), bounds=UNBOUNDED)
        assert validate_category(pb.category) == []
        iso = categories_isomorphic(pb.category, cat, bounds=UNBOUNDED)
        assert iso is not None and is_isomorphism(iso)


def test_pullback_of_collapse_hom_count():
    col = collapse_functor()
    pb = pullback(col, col, bounds=UNBOUNDED)
    C = pb.category
    assert C.n_objects == 2
    o0 = [o for o in C.objects if pb.proj1.on_obj(o) == "0"][0]
    o1 = [o for o in C.objects if pb.proj1.on_obj(o) == "1"][0]
    assert len(C.hom(o0, o1)) == 4  # {u,v} x {u,v}
    assert validate_category(C) == []
    assert validate_functor(pb.proj1) == [] and validate_functor(pb.proj2) == []


def test_product_of_two_and_two_has_four_objects():
    two = walking_arrow()
    pr = product(two, two, bounds=UNBOUNDED)
    assert pr.category.n_objects == 4
    assert validate_category(pr.category) == []


def test_pullback_universal_property_by_enumeration():
    # every cone over the cospan factors uniquely through the pullback
    col = collapse_functor()
    pb = pullback(col, col, bounds=UNBOUNDED)
    P = parallel_pair()
    for J in (terminal(), walking_arrow(), parallel_pair()):
        for h1 in enumerate_functors(J, P, bounds=UNBOUNDED):
            for h2 in enumerate_functors(J, P, bounds=UNBOUNDED):
                lhs = compose_functors(col, h1)
                rhs = compose_functors(col, h2)
                if not lhs.same_as(rhs):
                    continue
                med = pullback_mediator(pb, h1, h2)
                assert validate_functor(med) == []
                assert compose_functors(pb.proj1, med).same_as(h1)
                assert compose_functors(pb.proj2, med).same_as(h2)
                # uniqueness among all functors J -> pb
                count = 0
                for cand in enumerate_functors(J, pb.category, bounds=UNBOUNDED):
                    if compose_functors(pb.proj1, cand).same_as(h1) and compose_functors(
                        pb.proj2, cand
                    ).same_as(h2):
                        count += 1
                assert count == 1


def test_enumerate_functors_counts():
    one, two = terminal(), walking_arrow()
    assert len(enumerate_functors(one, two, bounds=UNBOUNDED)) == 2
    assert len(enumerate_functors(two, two, bounds=UNBOUNDED)) == 3
    assert len(enumerate_functors(two, one, bounds=UNBOUNDED)) == 1


def test_functor_category_counts():
    two = walking_arrow()
    fc = functor_category(two, two, bounds=UNBOUNDED)
    assert fc.category.n_objects == 3
    assert validate_category(fc.category) == []
    # brute-force oracle: object maps (0,0),(0,1),(1,1) admit exactly one
    # functor each (hom(0,1) is a singleton), (1,0) admits none
    P = parallel_pair()
    fcP = functor_category(P, two, bounds=UNBOUNDED)
    assert fcP.category.n_objects == 3

    one = terminal()
    for C in (two, P, walking_iso()):
        fc1 = functor_category(one, C, bounds=UNBOUNDED)
        iso = categories_isomorphic(fc1.category, C, bounds=UNBOUNDED)
        assert iso is not None


def test_functor_category_morphism_count_matches_bruteforce():
    # naturality-passing component families, counted directly
    P, two = parallel_pair(), walking_arrow()
    fc = functor_category(P, two, bounds=UNBOUNDED)
    count = 0
    functors = enumerate_functors(P, two, bounds=UNBOUNDED)
    for F in functors:
        for G in functors:
            for c0 in two.hom(F.on_obj("0"), G.on_obj("0")):
                for c1 in two.hom(F.on_obj("1"), G.on_obj("1")):
                    if all(
                        two.compose(c1, F.on_mor(m)) == two.compose(G.on_mor(m), c0)
                        for m in ("u", "v")
                    ):
                        count += 1
    assert fc.category.n_morphisms == count


def test_size_bound_raised():
    two = walking_arrow()
    with pytest.raises(SizeBoundError):
        enumerate_functors(two, two, bounds=SizeBounds.scaled(0))


def test_categories_isomorphic_basic():
    two = walking_arrow()
    iso = categories_isomorphic(two, two, bounds=UNBOUNDED)
    assert iso is not None and validate_functor(iso) == []
    assert categories_isomorphic(parallel_pair(), two, bounds=UNBOUNDED) is None


def test_chaotic_two_isomorphic_to_iso_completion():
    # both have 2 objects and singleton hom-sets everywhere
    C2 = chaotic_two()
    I = walking_iso()
    iso = categories_isomorphic(C2, I, bounds=UNBOUNDED)
    assert iso is not None
    inv = inverse_functor(iso)
    assert compose_functors(inv, iso).same_as(identity_functor(C2))
    assert compose_functors(iso, inv).same_as(identity_functor(I))


@st.composite
def tiny_posets(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    rel = set()
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rel.add((i, j))
    closed = set(rel)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(closed):
            for (c, d) in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    objs = [f"o{i}" for i in range(n)]
    arrows = [(f"m{i}_{j}", f"o{i}", f"o{j}") for (i, j) in sorted(closed)]
    compose = {}
    for (i, j) in closed:
        for (j2, k) in closed:
            if j == j2:
                compose[(f"m{j}_{k}", f"m{i}_{j}")] = f"m{i}_{k}"
    return build_category(f"poset{n}", objs, arrows, compose)


@given(tiny_posets())
@settings(max_examples=40, deadline=None)
def test_poset_categories_validate_and_selfiso(cat):
    assert validate_category(cat) == []
    iso = categories_isomorphic(cat, cat, bounds=UNBOUNDED)
    assert iso is not None
    inv = inverse_functor(iso)
    assert compose_functors(inv, iso).same_as(identity_functor(cat))


def test_inner_pullback_and_coequalizer_in_poset():
    # lattice 0 < a,b < 1: pullback of a -> 1 <- b is the meet 0
    L = build_category(
        "diamond",
        ["bot", "a", "b", "top"],
        [
            ("ba", "bot", "a"), ("bb", "bot", "b"),
            ("at", "a", "top"), ("bt", "b", "top"), ("btop", "bot", "top"),
        ],
        {("at", "ba"): "btop", ("bt", "bb"): "btop"},
    )
    assert validate_category(L) == []
    res = fincat.inner_pullback(L, "at", "bt")
    assert res is not None and res[0] == "bot"
    coeq = fincat.inner_coequalizer(L, "ba", "ba")
    assert coeq is not None and coeq[0] == "a"
    assert fincat.arrow_is_iso(L, "1_a")
    assert not fincat.arrow_is_iso(L, "ba")
