import json
import random

import pytest

from brauer_monoid.diagrams import canonical_diagram, enumerate_diagrams
from brauer_monoid.invariants import GCT, canon_string, ct_from_gct, cycle_type, gct
from brauer_monoid.rewriting import (
    RewriteBudgetExceeded,
    RewriteRule,
    Site,
    apply_rule,
    expected_normal_form,
    normal_form,
    normal_form_of_cycle_type,
)


def find_site(g, component_string, desired, **extra):
    """Locate the orientation of one component equal to `desired`."""
    idx = g.strings.index(component_string)
    for reverse in (False, True):
        base = component_string[::-1] if reverse else component_string
        for k in range(len(base)):
            if base[k:] + base[:k] == desired:
                return Site(idx, rotation=k, reverse=reverse, **extra)
    raise AssertionError("orientation not found")


class TestApplyRule:
    def test_defer_through_example(self):
        g = GCT.of(["ULTULT"])
        site = find_site(g, g.strings[0], "ULTULT")
        out = apply_rule(g, RewriteRule.ULTZ_TO_ULZT, site)
        assert out == GCT.of(["ULULTT"])

    def test_collapse_example(self):
        g = GCT.of(["TLTUL"])
        site = find_site(g, g.strings[0], "TLTUL")
        out = apply_rule(g, RewriteRule.TLTZ_TO_LULZ, site)
        assert out == GCT.of(["LULUL"])

    def test_collapse_needs_tail(self):
        # a bare TLT (empty tail) is rejected
        g = GCT.of(["TLT"])
        site = find_site(g, g.strings[0], "TLT")
        with pytest.raises(ValueError):
            apply_rule(g, RewriteRule.TLTZ_TO_LULZ, site)

    def test_split_example(self):
        g = GCT.of(["T", "ULT"])
        receiver = g.strings.index("T")
        donor = g.strings.index("ULT")
        out = apply_rule(
            g,
            RewriteRule.SPLIT_UL,
            Site(receiver, rotation=0, donor=donor),
        )
        assert out == GCT.of(["TLU", "T"])
        assert out == GCT.of(["ULT", "T"])  # same multiset up to equivalence

    def test_split_donor_must_survive(self):
        g = GCT.of(["T", "UL"])
        donor = g.strings.index("UL")
        receiver = g.strings.index("T")
        with pytest.raises(ValueError):
            apply_rule(g, RewriteRule.SPLIT_UL, Site(receiver, donor=donor))

    def test_shift_reverse_is_identity_on_the_multiset(self):
        g = GCT.of(["ULUTL", "T"])
        out = apply_rule(g, RewriteRule.SHIFT_REVERSE, Site(0, rotation=3, reverse=True))
        assert out == g

    def test_pattern_mismatch(self):
        g = GCT.of(["ULUL"])
        with pytest.raises(ValueError):
            apply_rule(g, RewriteRule.ULTZ_TO_ULZT, Site(0))

    def test_ct_preserved_fuzz(self):
        rng = random.Random(23)
        diagrams = [d for r in (3, 4, 5) for d in enumerate_diagrams(r)]
        applications = 0
        while applications < 10_000:
            d = rng.choice(diagrams)
            g = gct(d)
            idx = rng.randrange(len(g.strings))
            s = g.strings[idx]
            reverse = rng.random() < 0.5
            rotation = rng.randrange(len(s))
            oriented = (s[::-1] if reverse else s)
            oriented = oriented[rotation:] + oriented[:rotation]
            site = Site(idx, rotation=rotation, reverse=reverse)
            if oriented.startswith("ULT"):
                rule = RewriteRule.ULTZ_TO_ULZT
            elif oriented.startswith("TLT") and len(oriented) > 3:
                rule = RewriteRule.TLTZ_TO_LULZ
            else:
                continue
            out = apply_rule(g, rule, site)  # internally asserts CT preservation
            assert ct_from_gct(out) == ct_from_gct(g)
            applications += 1


class TestLetterAccounting:
    def test_defer_preserves_letter_counts(self):
        g = GCT.of(["ULTULT"])
        out = apply_rule(g, RewriteRule.ULTZ_TO_ULZT, Site(0))
        for letter in "ULT":
            assert "".join(out.strings).count(letter) == "".join(g.strings).count(letter)

    def test_collapse_trades_two_through_letters_for_arcs(self):
        g = GCT.of(["TLTUL"])
        out = apply_rule(g, RewriteRule.TLTZ_TO_LULZ, find_site(g, g.strings[0], "TLTUL"))
        before = "".join(g.strings)
        after = "".join(out.strings)
        assert len(after) == len(before)
        assert after.count("T") == before.count("T") - 2
        assert after.count("U") == before.count("U") + 1
        assert after.count("L") == before.count("L") + 1

    def test_split_preserves_letter_totals(self):
        g = GCT.of(["T", "ULT"])
        out = apply_rule(
            g, RewriteRule.SPLIT_UL, Site(g.strings.index("T"), donor=g.strings.index("ULT"))
        )
        for letter in "ULT":
            assert "".join(out.strings).count(letter) == "".join(g.strings).count(letter)


class TestNormalForm:
    def test_paper_running_example(self):
        g = GCT.of(["ULUTL", "UL", "T"])
        assert ct_from_gct(g) == (1, 1, 0)
        nf, trace = normal_form(g)
        assert nf == GCT.of(["ULULT", "T", "UL"])  # (UL)^2 T, T, UL

    def test_pure_through_fixed(self):
        for k in (1, 2, 5):
            g = GCT.of(["T" * k])
            nf, trace = normal_form(g)
            assert nf == g
            assert trace.steps == []

    def test_exhaustive_r_le_5(self):
        for r in range(1, 6):
            by_ct = {}
            for d in enumerate_diagrams(r):
                nf, trace = normal_form(gct(d))
                ct = cycle_type(d)
                assert ct_from_gct(nf) == ct
                by_ct.setdefault(ct, set()).add(nf)
                # the normal form matches the canonical diagram of that cycle type
                assert nf == gct(canonical_diagram(ct, r))
            for forms in by_ct.values():
                assert len(forms) == 1

    def test_normal_forms_separate_cycle_types(self):
        for r in (3, 4, 5):
            seen = {}
            for d in enumerate_diagrams(r):
                nf, _ = normal_form(gct(d))
                ct = cycle_type(d)
                if nf in seen:
                    assert seen[nf] == ct
                seen[nf] = ct

    def test_random_r6_within_budget(self):
        rng = random.Random(31)
        diagrams = list(enumerate_diagrams(6))
        for d in rng.sample(diagrams, 400):
            nf, trace = normal_form(gct(d), step_budget=10_000)
            assert nf == gct(canonical_diagram(cycle_type(d), 6))

    def test_trace_steps_are_replayable(self):
        g = GCT.of(["ULUTL", "UL", "T"])
        nf, trace = normal_form(g)
        cur = g
        for step in trace.steps:
            cur = apply_rule(cur, step.rule, step.site)
            assert cur == step.gct
        assert cur == nf

    def test_trace_jsonl(self):
        d = canonical_diagram((1,), 5)
        # pick something with actual steps
        for dd in enumerate_diagrams(4):
            _, trace = normal_form(gct(dd))
            if trace.steps:
                lines = trace.to_jsonl().strip().split("\n")
                for line in lines:
                    rec = json.loads(line)
                    assert rec["rule"] in {r.value for r in RewriteRule}
                    assert "component" in rec["site"]
                    GCT.parse(rec["gct"])
                break

    def test_budget_enforced(self):
        g = GCT.of(["ULTULT"])  # needs one gather step
        with pytest.raises(RewriteBudgetExceeded):
            normal_form(g, step_budget=0)

    def test_expected_form_all_zero_types(self):
        assert normal_form_of_cycle_type((0,), 4) == GCT.of(["ULUL"])
        assert normal_form_of_cycle_type((0, 0), 4) == GCT.of(["UL", "UL"])
        assert normal_form_of_cycle_type((0, 0), 6) == GCT.of(["ULUL", "UL"])
        assert expected_normal_form(GCT.of(["ULUL"])) == GCT.of(["ULUL"])
