import itertools
import random

import pytest

from brauer_monoid.diagrams import (
    BrauerDiagram,
    DeltaSpec,
    HElement,
    Permutation,
    concat,
    embed_permutation,
    enumerate_diagrams,
    h_mul,
    identity_diagram,
    make_e,
    identity_diagram as ident,
    tensor,
)
from brauer_monoid.invariants import (
    GCT,
    canon_string,
    ct_from_gct,
    cycle_type,
    cycle_type_h,
    cycle_type_str,
    gct,
    gct_equivalent,
    p_prime_part,
    string_net,
)
from brauer_monoid.partitions import is_p_special

# the running 8-column example diagram
PAPER_D8 = BrauerDiagram.from_text(
    "r=8; 1-2, 3-5, 4-5', 6-7, 8-8', 1'-4', 2'-3', 6'-7'"
)

# the two rank-5 diagrams with cycle type (1) but different arc structure
REMARK_A = BrauerDiagram.from_text("r=5; 1-2, 3-2', 4-3', 5-1', 4'-5'")
REMARK_B = BrauerDiagram.from_text("r=5; 1-2, 3-4, 5-1', 2'-3', 4'-5'")


def conjugate_by(d, sigma):
    s = embed_permutation(sigma)
    left, l1 = concat(embed_permutation(sigma.inverse()), d)
    out, l2 = concat(left, s)
    assert l1 == l2 == 0
    return out


def all_perms(n):
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


class TestCycleType:
    def test_paper_example(self):
        assert cycle_type(PAPER_D8) == (1, 1, 0)

    def test_identity(self):
        for r in (1, 2, 5):
            assert cycle_type(identity_diagram(r)) == (1,) * r

    def test_remark_pair_both_type_one(self):
        assert cycle_type(REMARK_A) == (1,)
        assert cycle_type(REMARK_B) == (1,)


class TestGct:
    def test_paper_example(self):
        assert gct(PAPER_D8) == GCT.of(["ULUTL", "UL", "T"])

    def test_identity(self):
        assert gct(identity_diagram(4)) == GCT.of(["T"] * 4)

    def test_e_padded(self):
        d = tensor(make_e(), identity_diagram(3))
        assert gct(d) == GCT.of(["UL", "T", "T", "T"])

    def test_letter_bookkeeping(self):
        for d in enumerate_diagrams(4):
            letters = "".join(gct(d).strings)
            assert letters.count("T") == len(d.through_arcs())
            assert letters.count("U") == len(d.top_arcs())
            assert letters.count("L") == len(d.bottom_arcs())
            assert letters.count("U") == letters.count("L")

    def test_alternation_holds_to_r6(self):
        for r in range(1, 7):
            for d in enumerate_diagrams(r):
                for s in gct(d).strings:
                    anchors = [c for c in s if c != "T"]
                    assert len(anchors) % 2 == 0
                    for i in range(len(anchors)):
                        assert anchors[i] != anchors[i - 1]


class TestCanonString:
    def test_closure_under_shift_reverse(self):
        rng = random.Random(5)
        for _ in range(10_000):
            n = rng.randrange(1, 9)
            s = "".join(rng.choice("ULT") for _ in range(n))
            k = rng.randrange(n)
            rotated = s[k:] + s[:k]
            assert canon_string(s) == canon_string(rotated)
            assert canon_string(s) == canon_string(s[::-1])

    def test_idempotent(self):
        rng = random.Random(6)
        for _ in range(500):
            s = "".join(rng.choice("ULT") for _ in range(rng.randrange(1, 9)))
            assert canon_string(canon_string(s)) == canon_string(s)

    def test_single_t(self):
        assert canon_string("T") == "T"

    def test_reversal_pair(self):
        assert canon_string("ULUTL") == canon_string("LTULU")
        # enumerate rotations of both by hand
        for k in range(5):
            s = "ULUTL"[k:] + "ULUTL"[:k]
            t = "LTULU"[k:] + "LTULU"[:k]
            assert canon_string(s) == canon_string("ULUTL")
            assert canon_string(t) == canon_string("ULUTL")


class TestGctEquivalence:
    def test_conjugation_invariance_to_r4(self):
        for r in (1, 2, 3, 4):
            perms = list(all_perms(r))
            for d in enumerate_diagrams(r):
                g = gct(d)
                for s in perms:
                    assert gct_equivalent(g, gct(conjugate_by(d, s)))

    def test_remark_pair_not_equivalent(self):
        assert not gct_equivalent(gct(REMARK_A), gct(REMARK_B))
        assert len(REMARK_A.top_arcs() + REMARK_A.bottom_arcs()) != len(
            REMARK_B.top_arcs() + REMARK_B.bottom_arcs()
        )

    def test_reflexive(self):
        for d in enumerate_diagrams(3):
            assert gct_equivalent(gct(d), gct(d))


class TestCtFromGct:
    def test_paper_scan_example(self):
        assert ct_from_gct(GCT.of(["UTTLTUL"])) == (1,)

    def test_pure_through(self):
        for k in (1, 2, 5):
            assert ct_from_gct(GCT.of(["T" * k])) == (k,)

    def test_matches_direct_cycle_type_to_r5(self):
        for r in range(1, 6):
            for d in enumerate_diagrams(r):
                assert ct_from_gct(gct(d)) == cycle_type(d)

    def test_same_gct_implies_same_ct(self):
        for r in (1, 2, 3, 4):
            by_gct = {}
            for d in enumerate_diagrams(r):
                by_gct.setdefault(gct(d), set()).add(cycle_type(d))
            for cts in by_gct.values():
                assert len(cts) == 1

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            string_net("UTUL")  # U/L letters fail to alternate
        with pytest.raises(ValueError):
            string_net("UU")


class TestPPrimePart:
    def test_examples(self):
        assert p_prime_part((4, 3, 0), 2) == (3, 1, 1, 1, 1, 0)
        assert p_prime_part((2, 2, 1), 3) == (2, 2, 1)
        assert p_prime_part((2, 2, 1), 0) == (2, 2, 1)

    def test_result_is_p_special(self):
        from brauer_monoid.partitions import partitions

        for p in (2, 3, 5):
            for n in range(0, 9):
                for lam in partitions(n):
                    reduced = p_prime_part(lam, p)
                    assert is_p_special(tuple(x for x in reduced if x), p)
                    assert sum(reduced) == n

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            p_prime_part((2, 1), 4)


class TestCycleTypeH:
    def test_plain(self):
        d = REMARK_A
        assert cycle_type_h(HElement.of(d)) == cycle_type(d)

    def test_scaled_identity(self):
        assert cycle_type_h(HElement.of(identity_diagram(2), 2)) == (1, 1, 0, 0)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            cycle_type_h(HElement.zero_element())

    def test_products_match_stacked_tracer(self):
        rng = random.Random(9)
        spec = DeltaSpec.generic()
        diagrams = list(enumerate_diagrams(4))
        for _ in range(1000):
            x = HElement.of(rng.choice(diagrams), rng.randrange(2))
            y = HElement.of(rng.choice(diagrams), rng.randrange(2))
            assert cycle_type_h(h_mul(x, y, spec)) == stacked_cycle_type(x, y)


def stacked_cycle_type(x, y):
    """Cycle type of x*y read off the four-row stacked picture directly.

    Components alternate diagram edges with either interface glue (a's bottom
    dot identified with b's top dot) or the outer connector closing column i
    of the product.  The part of a component is the net number of downward
    glue crossings; interface loops never cross a boundary and give parts 0.
    """
    a, b = x.diagram, y.diagram
    r = a.r
    edge = {}
    for u, v in a.edges():
        edge[("a", u)], edge[("a", v)] = ("a", v), ("a", u)
    for u, v in b.edges():
        edge[("b", u)], edge[("b", v)] = ("b", v), ("b", u)

    def hop(node):
        """Glue (interface) or wrap (product connector); signed glue direction."""
        side, u = node
        if side == "a":
            if u >= r:
                return ("b", u - r), 1  # down through the interface
            return ("b", u + r), 0  # outer wrap: product top i to bottom i
        if u < r:
            return ("a", u + r), -1  # up through the interface
        return ("a", u - r), 0

    seen = set()
    parts = []
    for start in edge:
        if start in seen:
            continue
        net = 0
        cur = start
        while True:
            seen.add(cur)
            nx = edge[cur]
            seen.add(nx)
            cur, sign = hop(nx)
            net += sign
            if cur == start:
                break
        parts.append(abs(net))
    extra = x.exponent + y.exponent
    return tuple(sorted(parts + [0] * extra, reverse=True))
