import random

import pytest

from brauer_monoid.diagrams import (
    BrauerDiagram,
    DeltaSpec,
    HElement,
    Permutation,
    canonical_diagram,
    concat,
    double_factorial,
    embed_permutation,
    enumerate_diagrams,
    flip,
    from_pairs,
    h_mul,
    h_power,
    identity_diagram,
    make_e,
    make_gamma,
    make_gamma_partition,
    make_h_t,
    make_loop,
    tensor,
)
from brauer_monoid.invariants import cycle_type
from brauer_monoid.partitions import partitions


def all_permutations(n):
    import itertools

    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def loop_count_oracle(a, b):
    """Count closed interface cycles by explicit graph walking."""
    r = a.r
    # nodes: ('t', i) a-top, ('m', i) interface, ('b', i) b-bottom
    adj = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for x, y in a.edges():
        u = ("t", x) if x < r else ("m", x - r)
        v = ("t", y) if y < r else ("m", y - r)
        link(u, v)
    for x, y in b.edges():
        u = ("m", x) if x < r else ("b", x - r)
        v = ("m", y) if y < r else ("b", y - r)
        link(u, v)
    seen = set()
    loops = 0
    for i in range(r):
        node = ("m", i)
        if node in seen:
            continue
        stack = [node]
        comp = []
        internal = True
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            comp.append(u)
            if u[0] != "m":
                internal = False
            stack.extend(adj[u])
        if internal:
            loops += 1
    return loops


def random_diagram(r, rng):
    dots = list(range(2 * r))
    rng.shuffle(dots)
    return from_pairs(r, [(dots[2 * i], dots[2 * i + 1]) for i in range(r)])


class TestConcat:
    def test_worked_example(self):
        a = BrauerDiagram.from_text("r=4; 1-2, 3-1', 4-4', 2'-3'")
        b = BrauerDiagram.from_text("r=4; 1-2', 2-3, 4-3', 1'-4'")
        prod, loops = concat(a, b)
        assert prod == BrauerDiagram.from_text("r=4; 1-2, 3-2', 4-3', 1'-4'")
        assert loops == 1

    def test_identity_neutral(self):
        for d in enumerate_diagrams(3):
            assert concat(identity_diagram(3), d) == (d, 0)
            assert concat(d, identity_diagram(3)) == (d, 0)

    def test_loop_count_matches_path_tracer(self):
        rng = random.Random(7)
        for _ in range(200):
            d = random_diagram(4, rng)
            other = flip(d)
            _, loops = concat(d, other)
            assert loops == loop_count_oracle(d, other)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            concat(identity_diagram(2), identity_diagram(3))


class TestHMul:
    def test_exponent_additivity_generic(self):
        a = BrauerDiagram.from_text("r=4; 1-2, 3-1', 4-4', 2'-3'")
        b = BrauerDiagram.from_text("r=4; 1-2', 2-3, 4-3', 1'-4'")
        prod = h_mul(HElement.of(a, 1), HElement.of(b, 2), DeltaSpec.generic())
        assert prod.exponent == 4  # 1 + 2 + one loop
        assert prod.diagram == concat(a, b)[0]

    def test_mod_reduction_finite_order(self):
        a = BrauerDiagram.from_text("r=4; 1-2, 3-1', 4-4', 2'-3'")
        b = BrauerDiagram.from_text("r=4; 1-2', 2-3, 4-3', 1'-4'")
        prod = h_mul(HElement.of(a, 1), HElement.of(b, 2), DeltaSpec.finite_order(2))
        assert prod.exponent == 0

    def test_zero_absorption(self):
        e = make_e()
        assert h_mul(HElement.of(e), HElement.of(e), DeltaSpec.zero()).is_zero
        assert h_mul(HElement.zero_element(), HElement.of(e), DeltaSpec.zero()).is_zero
        # e*e = delta e under the generic spec
        prod = h_mul(HElement.of(e), HElement.of(e), DeltaSpec.generic())
        assert prod == HElement.of(e, 1)

    def test_associativity_exhaustive_r2(self):
        specs = [DeltaSpec.generic(), DeltaSpec.finite_order(2), DeltaSpec.zero()]
        ds = [HElement.of(d) for d in enumerate_diagrams(2)]
        for spec in specs:
            for x in ds:
                for y in ds:
                    for z in ds:
                        assert h_mul(h_mul(x, y, spec), z, spec) == h_mul(
                            x, h_mul(y, z, spec), spec
                        )

    def test_associativity_random_r5(self):
        rng = random.Random(11)
        specs = [DeltaSpec.generic(), DeltaSpec.finite_order(3), DeltaSpec.zero()]
        for _ in range(300):
            x = HElement.of(random_diagram(5, rng), rng.randrange(3))
            y = HElement.of(random_diagram(5, rng), rng.randrange(3))
            z = HElement.of(random_diagram(5, rng), rng.randrange(3))
            for spec in specs:
                assert h_mul(h_mul(x, y, spec), z, spec) == h_mul(x, h_mul(y, z, spec), spec)


class TestEmbed:
    def test_identity(self):
        assert embed_permutation(Permutation.identity(3)) == identity_diagram(3)

    def test_swap(self):
        swap = embed_permutation(Permutation.from_cycles(2, (1, 2)))
        assert swap == BrauerDiagram.from_text("r=2; 1-2', 2-1'")

    def test_homomorphism_sigma4(self):
        for s in all_permutations(4):
            for t in all_permutations(4):
                prod, loops = concat(embed_permutation(s), embed_permutation(t))
                assert loops == 0
                assert prod == embed_permutation(s.compose(t))


class TestTensor:
    def test_e_tensor_e(self):
        d = tensor(make_e(), make_e())
        assert d == BrauerDiagram.from_text("r=4; 1-2, 3-4, 1'-2', 3'-4'")

    def test_gamma_partition(self):
        assert tensor(make_gamma(3), make_gamma(2)) == make_gamma_partition((3, 2))

    def test_cycle_type_concatenates(self):
        for ra in (1, 2, 3):
            for rb in (1, 2, 3):
                for a in enumerate_diagrams(ra):
                    for b in enumerate_diagrams(rb):
                        expect = tuple(
                            sorted(cycle_type(a) + cycle_type(b), reverse=True)
                        )
                        assert cycle_type(tensor(a, b)) == expect


class TestNamedDiagrams:
    def test_make_e(self):
        assert make_e() == BrauerDiagram.from_text("r=2; 1-2, 1'-2'")

    def test_gamma_1_is_identity(self):
        assert make_gamma(1) == identity_diagram(1)

    def test_gamma_partition_order_is_lcm(self):
        from math import lcm

        spec = DeltaSpec.generic()
        for n in range(1, 6):
            for lam in partitions(n):
                if not lam:
                    continue
                d = HElement.of(make_gamma_partition(lam))
                expect = 1
                for p in lam:
                    expect = lcm(expect, p)
                acc = d
                j = 1
                ident = HElement.of(identity_diagram(sum(lam)))
                while acc != ident:
                    acc = h_mul(acc, d, spec)
                    j += 1
                    assert j <= expect
                assert j == expect

    def test_h2_cycle123_matches_displayed_diagram(self):
        d = make_h_t(2, Permutation.from_cycles(3, (1, 2, 3)), 7)
        assert d == BrauerDiagram.from_text(
            "r=7; 1-2, 3-4, 5-6', 6-7', 7-1', 2'-3', 4'-5'"
        )

    def test_h0_is_embedding(self):
        for s in all_permutations(3):
            assert make_h_t(0, s, 3) == embed_permutation(s)

    def test_ht_multiplicative(self):
        for s1 in all_permutations(3):
            for s2 in all_permutations(3):
                prod, loops = concat(make_h_t(1, s1, 5), make_h_t(1, s2, 5))
                assert loops == 0
                assert prod == make_h_t(1, s1.compose(s2), 5)

    def test_ht_range_check(self):
        with pytest.raises(ValueError):
            make_h_t(3, Permutation.identity(1), 5)


class TestCanonicalDiagram:
    def test_r13_worked_example(self):
        d = canonical_diagram((3, 2, 0, 0), 13)
        assert d == BrauerDiagram.from_text(
            "r=13; 1-2, 3-4, 5-6', 6-7', 7-1', 8-9', 9-8', "
            "10-11, 12-13, 2'-3', 4'-5', 10'-11', 12'-13'"
        )

    def test_identity_cycle_type(self):
        for r in (1, 2, 3, 4):
            assert canonical_diagram((1,) * r, r) == identity_diagram(r)

    def test_cycle_type_roundtrip_to_r6(self):
        for r in range(1, 7):
            for mu in valid_cycle_types(r):
                assert cycle_type(canonical_diagram(mu, r)) == mu

    def test_invalid_rejected(self):
        with pytest.raises(ValueError):
            canonical_diagram((2,), 3)
        with pytest.raises(ValueError):
            canonical_diagram((1, 0, 0), 3)
        with pytest.raises(ValueError):
            canonical_diagram((), 4)

    def test_all_zero_case(self):
        assert canonical_diagram((0, 0), 4) == tensor(make_e(), make_e())
        assert cycle_type(canonical_diagram((0,), 4)) == (0,)
        assert canonical_diagram((0,), 2) == make_e()


def valid_cycle_types(r):
    out = []
    for k in range(r // 2 + 1):
        for nz in partitions(r - 2 * k):
            top = (r - sum(nz)) // 2
            for m0 in range(0, top + 1):
                mu = nz + (0,) * m0
                if mu:
                    out.append(mu)
    return out


class TestFlip:
    def test_flip_e(self):
        assert flip(make_e()) == make_e()

    def test_flip_permutation(self):
        for s in all_permutations(3):
            assert flip(embed_permutation(s)) == embed_permutation(s.inverse())

    def test_flip_involution_and_cycle_type(self):
        for r in range(1, 6):
            for d in enumerate_diagrams(r):
                assert flip(flip(d)) == d
                assert cycle_type(flip(d)) == cycle_type(d)


class TestEnumerate:
    def test_counts(self):
        assert len(list(enumerate_diagrams(1))) == 1
        assert len(list(enumerate_diagrams(3))) == 15
        assert len(list(enumerate_diagrams(5))) == 945
        assert double_factorial(2 * 5 - 1) == 945

    def test_distinct(self):
        seen = set(enumerate_diagrams(4))
        assert len(seen) == 105


class TestMonoidFacts:
    def test_horizontal_arcs_never_disappear(self):
        for a in enumerate_diagrams(3):
            if not a.top_arcs():
                continue
            for b in enumerate_diagrams(3):
                prod, _ = concat(a, b)
                assert prod.top_arcs()

    def test_units_are_permutations(self):
        for r in (1, 2, 3, 4):
            ident = identity_diagram(r)
            for d in enumerate_diagrams(r):
                invertible = False
                for x in enumerate_diagrams(r):
                    if concat(d, x) == (ident, 0) and concat(x, d) == (ident, 0):
                        invertible = True
                        break
                assert invertible == d.is_permutation()


class TestTextFormat:
    def test_roundtrip(self):
        rng = random.Random(3)
        for _ in range(50):
            d = random_diagram(4, rng)
            assert BrauerDiagram.from_text(d.to_text()) == d

    def test_example_is_e(self):
        assert BrauerDiagram.from_text("r=2; 1-2, 1'-2'") == make_e()
        assert make_e().to_text() == "r=2; 1-2, 1'-2'"

    def test_parse_errors(self):
        for bad in ["", "r=2; 1-2", "r=2; 1-1, 1'-2'", "r=0; ", "r=2; 1-2, 1-2'", "r=2; 1-3, 1'-2'"]:
            with pytest.raises(ValueError):
                BrauerDiagram.from_text(bad)


class TestPowers:
    def test_loop_diagram(self):
        d = make_loop(4)
        assert cycle_type(d) == (0,)
        sq = h_power(HElement.of(d), 2, DeltaSpec.generic())
        assert sq == HElement.of(d, 1)  # one loop per self-stack
