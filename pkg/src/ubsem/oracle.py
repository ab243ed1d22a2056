"""Deliberately naive reference implementations used as ground truth in tests.

Nothing here shares code paths with the propagation-based solvers: labellings
are generated by exhaustive 3^n enumeration and checked pointwise.
"""

from __future__ import annotations

import itertools

from .errors import ResourceLimitError
from .framework import Argument, Framework
from .labelling import Label, Labelling, LabellingSet

DEFAULT_CAP = 12
_ORDER = (Label.IN, Label.OUT, Label.UNDEC)


def is_weakly_complete(fw: Framework, lab: Labelling) -> bool:
    lab.check_total(fw)
    for a in fw.arguments:
        atts = [lab[b] for b in fw.attackers(a)]
        if lab[a] is Label.IN:
            if Label.IN in atts:
                return False
        elif lab[a] is Label.OUT:
            if Label.IN not in atts:
                return False
        elif Label.UNDEC not in atts or Label.IN in atts:
            return False
    return True


def is_complete(fw: Framework, lab: Labelling) -> bool:
    lab.check_total(fw)
    for a in fw.arguments:
        atts = [lab[b] for b in fw.attackers(a)]
        if lab[a] is Label.IN:
            if any(x is not Label.OUT for x in atts):
                return False
        elif lab[a] is Label.OUT:
            if Label.IN not in atts:
                return False
        elif Label.UNDEC not in atts or Label.IN in atts:
            return False
    return True


class BruteForce:
    """Exhaustive labelling enumerator with a hard size cap."""

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap

    def labellings(self, fw: Framework):
        """All 3^n labellings, lexicographic in (in, out, undec) per argument."""
        if len(fw) > self.cap:
            raise ResourceLimitError(f"brute force capped at {self.cap} arguments, got {len(fw)}")
        for combo in itertools.product(_ORDER, repeat=len(fw)):
            yield Labelling.from_mapping(dict(zip(fw.arguments, combo)))

    def weakly_complete(self, fw: Framework) -> LabellingSet:
        return LabellingSet.of(lab for lab in self.labellings(fw) if is_weakly_complete(fw, lab))

    def complete(self, fw: Framework) -> LabellingSet:
        return LabellingSet.of(lab for lab in self.labellings(fw) if is_complete(fw, lab))

    def stable(self, fw: Framework) -> LabellingSet:
        return self.complete(fw).filter(lambda lab: not lab.undec)

    def credulous(self, fw: Framework, arg: Argument) -> bool:
        fw.check_members([arg])
        return any(arg in lab.in_ for lab in self.weakly_complete(fw))


_default = BruteForce()


def brute_force_weakly_complete(fw: Framework) -> LabellingSet:
    return _default.weakly_complete(fw)


def brute_force_complete(fw: Framework) -> LabellingSet:
    return _default.complete(fw)


def brute_force_credulous(fw: Framework, arg: Argument) -> bool:
    return _default.credulous(fw, arg)


def _conflict_free(fw: Framework, s: frozenset[Argument]) -> bool:
    return not any((a, b) in fw.attacks for a in s for b in s)


def _reduct_args(fw: Framework, args: frozenset[Argument], e: frozenset[Argument]) -> frozenset[Argument]:
    hit = {b for a in e for b in fw.attacked_by(a)}
    return args - e - hit


def brute_force_weakly_admissible(fw: Framework, args: frozenset[Argument] | None = None) -> list[frozenset[Argument]]:
    """Weakly admissible sets by plain recursion over all subsets, no memo.

    Attackers are taken inside the current subframework ``args``; an
    attacker y of E is harmless iff y belongs to no weakly admissible set
    of the E-reduct.
    """
    if args is None:
        args = frozenset(fw.arguments)
    result = []
    ordered = [a for a in fw.arguments if a in args]
    for r in range(len(ordered) + 1):
        for combo in itertools.combinations(ordered, r):
            e = frozenset(combo)
            if not _conflict_free(fw, e):
                continue
            if not e:
                result.append(e)
                continue
            red = _reduct_args(fw, args, e)
            red_union = set().union(*brute_force_weakly_admissible(fw, red))
            atts = {y for y in args for x in e if (y, x) in fw.attacks}
            if not atts & red_union:
                result.append(e)
    return result


def brute_force_weakly_defends(fw: Framework, e: frozenset[Argument], x: frozenset[Argument],
                               reading: str = "reduct-share") -> bool:
    """Every attacker of x is hit by e, or lies outside e and every weakly
    admissible set of the e-reduct while x fits in one of them.

    With ``reading="reduct-share"`` only the part of x left in the reduct has
    to fit; ``"literal"`` asks for all of x.
    """
    red = _reduct_args(fw, frozenset(fw.arguments), e)
    red_sets = brute_force_weakly_admissible(fw, red)
    red_union = set().union(*red_sets)
    need = x & red if reading == "reduct-share" else x
    if reading not in ("reduct-share", "literal"):
        raise ValueError(f"unknown reading {reading!r}")
    for y in fw.arguments:
        if not any((y, a) in fw.attacks for a in x):
            continue
        if any((b, y) in fw.attacks for b in e):
            continue
        if y in e or y in red_union or not any(need <= s for s in red_sets):
            return False
    return True


def brute_force_bbu_complete(fw: Framework, reading: str = "reduct-share") -> list[frozenset[Argument]]:
    adm = brute_force_weakly_admissible(fw)
    everything = [frozenset(c) for r in range(len(fw) + 1) for c in itertools.combinations(fw.arguments, r)]
    return [
        e for e in adm
        if not any(e < x and _conflict_free(fw, x) and brute_force_weakly_defends(fw, e, x, reading) for x in everything)
    ]


def naive_grounded_extension(fw: Framework) -> frozenset[Argument]:
    """Least fixpoint of the characteristic function, iterated from the empty set."""
    s: frozenset[Argument] = frozenset()
    while True:
        nxt = frozenset(
            a for a in fw.arguments
            if all(any((d, b) in fw.attacks for d in s) for b in fw.arguments if (b, a) in fw.attacks)
        )
        if nxt == s:
            return s
        s = nxt


def naive_stable_labellings(fw: Framework) -> LabellingSet:
    """Zero-undec complete labellings found by scanning all 2^n in/out splits."""
    found = []
    for combo in itertools.product((Label.IN, Label.OUT), repeat=len(fw)):
        lab = Labelling.from_mapping(dict(zip(fw.arguments, combo)))
        if is_complete(fw, lab):
            found.append(lab)
    return LabellingSet.of(found)
