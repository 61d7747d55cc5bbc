"""Rewriting calculus on generalized cycle types.

Three substitution rules (plus free rotation/reversal) generate the relation
under which two diagram invariants with the same cycle type can be driven to
one shared normal form:

    ULTZ -> ULZT      defer a through letter to the end of the component
    TLTZ -> LULZ      trade an up/down pair of through letters for arcs
    {Z, ULZ'} -> {ZLU, Z'}   move an arc pair between components

``normal_form`` plans a sequence of rule applications reaching the shape

    {(UL)^x T^m1, T^m2, ..., T^mk, UL, ..., UL}

with one UL component per zero part of the cycle type and all surplus arc
pairs collected in the first component.  Every planned step goes through
``apply_rule``, which checks the pattern syntactically and asserts that the
cycle type is preserved.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum

from .invariants import GCT, CycleType, canon_string, ct_from_gct, string_net


class RewriteRule(Enum):
    SHIFT_REVERSE = "ShiftReverse"
    ULTZ_TO_ULZT = "ULTZ_to_ULZT"
    TLTZ_TO_LULZ = "TLTZ_to_LULZ"
    SPLIT_UL = "SplitUL"


@dataclass(frozen=True)
class Site:
    """Where a rule applies: orient component `component` by `reverse` then
    rotate left by `rotation`; the pattern must start at `offset`.  SplitUL
    uses `component` as the receiver and the donor fields for the component
    losing its UL prefix."""

    component: int
    rotation: int = 0
    reverse: bool = False
    offset: int = 0
    donor: int | None = None
    donor_rotation: int = 0
    donor_reverse: bool = False

    def to_json(self) -> dict:
        out = {
            "component": self.component,
            "rotation": self.rotation,
            "reverse": self.reverse,
            "offset": self.offset,
        }
        if self.donor is not None:
            out.update(
                donor=self.donor,
                donor_rotation=self.donor_rotation,
                donor_reverse=self.donor_reverse,
            )
        return out


@dataclass(frozen=True)
class TraceStep:
    rule: RewriteRule
    site: Site
    gct: GCT


@dataclass
class RewriteTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps({"rule": s.rule.value, "site": s.site.to_json(), "gct": str(s.gct)})
            + "\n"
            for s in self.steps
        )


class RewriteBudgetExceeded(RuntimeError):
    pass


def _rotate(s: str, k: int) -> str:
    k %= len(s)
    return s[k:] + s[:k]


def _transform(s: str, rotation: int, reverse: bool, offset: int = 0) -> str:
    base = s[::-1] if reverse else s
    return _rotate(base, rotation + offset)


def _validate_component(s: str) -> None:
    if not s:
        raise ValueError("empty component")
    if set(s) - set("ULT"):
        raise ValueError(f"bad letters in {s!r}")


def _ct_or_none(g: GCT):
    """The rules also act on abstract strings where no cycle type is defined."""
    try:
        return ct_from_gct(g)
    except ValueError:
        return None


def _replace(g: GCT, index: int, new_strings: list[str]) -> GCT:
    strings = list(g.strings)
    del strings[index]
    return GCT.of(strings + new_strings)


def apply_rule(g: GCT, rule: RewriteRule, site: Site) -> GCT:
    """Apply one rewrite at an explicit site; the cycle type must survive."""
    if not 0 <= site.component < len(g.strings):
        raise ValueError(f"no component {site.component}")
    before_ct = _ct_or_none(g)
    s = g.strings[site.component]
    oriented = _transform(s, site.rotation, site.reverse, site.offset)

    if rule is RewriteRule.SHIFT_REVERSE:
        out = _replace(g, site.component, [oriented])
    elif rule is RewriteRule.ULTZ_TO_ULZT:
        if not oriented.startswith("ULT"):
            raise ValueError(f"pattern ULT does not match {oriented!r}")
        z = oriented[3:]
        out = _replace(g, site.component, ["UL" + z + "T"])
    elif rule is RewriteRule.TLTZ_TO_LULZ:
        if not oriented.startswith("TLT"):
            raise ValueError(f"pattern TLT does not match {oriented!r}")
        z = oriented[3:]
        if not z:
            raise ValueError("TLTZ rule needs a non-empty tail")
        out = _replace(g, site.component, ["LUL" + z])
    elif rule is RewriteRule.SPLIT_UL:
        if site.donor is None or not 0 <= site.donor < len(g.strings):
            raise ValueError("SplitUL needs a donor component")
        if site.donor == site.component:
            raise ValueError("donor and receiver must differ")
        donor = _transform(
            g.strings[site.donor], site.donor_rotation, site.donor_reverse
        )
        if not donor.startswith("UL"):
            raise ValueError(f"donor must expose a UL prefix, got {donor!r}")
        rest = donor[2:]
        if not rest:
            raise ValueError("donor would vanish; it must keep at least one letter")
        receiver = oriented + "LU"
        strings = list(g.strings)
        hi, lo = max(site.component, site.donor), min(site.component, site.donor)
        del strings[hi]
        del strings[lo]
        out = GCT.of(strings + [receiver, rest])
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(f"unknown rule {rule!r}")

    for comp in out.strings:
        _validate_component(comp)
    after_ct = _ct_or_none(out)
    if before_ct is not None and after_ct is not None and after_ct != before_ct:
        raise AssertionError(
            f"rewrite changed the cycle type: {g} -> {out} via {rule.value}"
        )
    return out


_SHAPED = re.compile(r"^(UL)*T*$")


def expected_normal_form(g: GCT) -> GCT:
    """The target shape determined by the total letter count and cycle type."""
    r = sum(len(s) for s in g.strings)
    ct = ct_from_gct(g)
    return normal_form_of_cycle_type(ct, r)


def normal_form_of_cycle_type(ct: CycleType, r: int) -> GCT:
    nz = [p for p in ct if p > 0]
    m0 = len(ct) - len(nz)
    if nz:
        x = (r - sum(nz)) // 2 - m0
        comps = ["UL" * x + "T" * nz[0]]
        comps += ["T" * p for p in nz[1:]]
        comps += ["UL"] * m0
    else:
        comps = ["UL" * (r // 2 - m0 + 1)]
        comps += ["UL"] * (m0 - 1)
    return GCT.of(comps)


def _runs(w: str) -> list[tuple[str, int, int]]:
    """Cyclic (anchor, position, t-count) blocks; w must start with an anchor."""
    anchors = [(i, c) for i, c in enumerate(w) if c != "T"]
    out = []
    for idx, (pos, char) in enumerate(anchors):
        nxt = anchors[(idx + 1) % len(anchors)][0]
        count = (nxt - pos - 1) % len(w) if len(anchors) > 1 else len(w) - 1
        out.append((char, pos, count))
    return out


def _find_site(stored: str, desired: str, component: int) -> Site:
    for reverse in (False, True):
        base = stored[::-1] if reverse else stored
        for k in range(len(base)):
            if _rotate(base, k) == desired:
                return Site(component, rotation=k, reverse=reverse)
    raise AssertionError(f"{desired!r} is not an orientation of {stored!r}")


def _orient(s: str) -> str:
    """Orientation with upward through letters only where unavoidable.

    Canonical strings start with U whenever they contain one; if every
    through letter sits in a U block, work with the reversed string so the
    letters read as downward instead.
    """
    runs = _runs(s)
    ups = [i for i, (c, _, t) in enumerate(runs) if c == "U" and t > 0]
    downs = [i for i, (c, _, t) in enumerate(runs) if c == "L" and t > 0]
    if ups and not downs:
        rev = s[::-1]
        k = rev.index("U")
        return _rotate(rev, k)
    return s


def _component_step(s: str) -> tuple[RewriteRule, str, str]:
    """One planned rewrite for an unshaped component.

    Returns (rule, desired orientation of the stored string, replacement in
    that orientation).  The caller resolves the orientation to a site.
    """
    w = _orient(s)
    runs = _runs(w)
    ups = [i for i, (c, _, t) in enumerate(runs) if c == "U" and t > 0]
    if ups:
        # distance from an up block to the next non-empty L block, in hops
        def dist(i: int) -> int:
            hops = 0
            j = i
            while True:
                _, _, tcount = runs[(j + 1) % len(runs)]
                if runs[(j + 1) % len(runs)][0] == "L" and tcount > 0:
                    return hops
                hops += 1
                j = (j + 2) % len(runs)

        best = min(ups, key=lambda i: (dist(i), i))
        char, pos, tcount = runs[best]
        junction = (pos + tcount) % len(w)  # last T of the up block
        anchored = _rotate(w, junction)
        if dist(best) == 0:
            # ... T L T ... collapses the up/down pair
            assert anchored.startswith("TLT")
            return RewriteRule.TLTZ_TO_LULZ, anchored, "LUL" + anchored[3:]
        # ... T L U ... hop the through letter into the next U block;
        # realized as ULT(Z^r) -> UL(Z^r)T on the reversed orientation
        assert anchored.startswith("TLU")
        z = anchored[3:]
        desired = "ULT" + z[::-1]
        return RewriteRule.ULTZ_TO_ULZT, desired, "UL" + z[::-1] + "T"
    # gather phase: every through letter is in an L block; move one T from the
    # last non-empty L block backwards
    nonempty = [i for i, (c, _, t) in enumerate(runs) if c == "L" and t > 0]
    assert len(nonempty) >= 2, f"component {s!r} is already shaped"
    _, pos, _ = runs[nonempty[-1]]
    anchored = _rotate(w, pos - 1)  # the U anchor right before that L
    assert anchored.startswith("ULT")
    return RewriteRule.ULTZ_TO_ULZT, anchored, "UL" + anchored[3:] + "T"


def _shape(s: str) -> tuple[int, int]:
    m = _SHAPED.fullmatch(s)
    assert m is not None
    ul = s.count("U")
    return s.count("T"), ul


def normal_form(g: GCT, step_budget: int = 10_000) -> tuple[GCT, RewriteTrace]:
    """Drive a generalized cycle type to its cycle-type normal form."""
    for s in g.strings:
        _validate_component(s)
    cur = GCT.of(g.strings)
    trace = RewriteTrace()

    def record(rule: RewriteRule, site: Site) -> None:
        nonlocal cur
        cur = apply_rule(cur, rule, site)
        trace.steps.append(TraceStep(rule, site, cur))
        if len(trace.steps) > step_budget:
            raise RewriteBudgetExceeded(
                f"no normal form within {step_budget} steps for {g}"
            )

    # per-component phase: shape every component into (UL)^m T^k
    while True:
        idx = next(
            (i for i, s in enumerate(cur.strings) if not _SHAPED.fullmatch(s)), None
        )
        if idx is None:
            break
        rule, desired, _replacement = _component_step(cur.strings[idx])
        record(rule, _find_site(cur.strings[idx], desired, idx))

    # transfer phase: collect surplus UL pairs in the component with the
    # longest through run (most UL pairs as tie break)
    while True:
        shapes = [_shape(s) for s in cur.strings]
        receiver = max(range(len(shapes)), key=lambda i: (shapes[i], -i))
        donor = None
        for i, (t, m) in enumerate(shapes):
            if i == receiver:
                continue
            surplus = m if t >= 1 else m - 1
            if surplus > 0:
                donor = i
                break
        if donor is None:
            break
        recv = cur.strings[receiver]
        rotation = 1 if recv.startswith("U") else 0  # start at an L anchor
        record(
            RewriteRule.SPLIT_UL,
            Site(
                receiver,
                rotation=rotation,
                donor=donor,
            ),
        )

    target = expected_normal_form(g)
    if cur != target:
        raise AssertionError(f"normal form mismatch: {cur} != expected {target}")
    return cur, trace
