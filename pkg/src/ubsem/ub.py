"""SCC-recursive undecidedness-blocking semantics.

Components are labelled in topological order. Arguments attacked from an
earlier component by an in-labelled argument are out; the rest of the
component is labelled by a base function applied to its restriction, so
attacks from undec arguments outside the component are ignored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import EmptyFrameworkError
from .framework import Argument, Framework, restrict, scc_decomposition
from .labelling import Labelling, LabellingSet
from .propagation import grounded_labelling
from .weakly import credulous_wc, weakly_complete_labellings, weakly_preferred_labellings

BaseFunction = Callable[[Framework], Iterable[Labelling]]


def _ub(fw: Framework, base: BaseFunction) -> list[Labelling]:
    if not fw.arguments:
        return [Labelling()]
    dec = scc_decomposition(fw)
    if len(dec) == 1:
        return list(base(fw))
    partials = [Labelling()]
    for comp in dec.components:
        members = frozenset(comp)
        extended = []
        for part in partials:
            hit = frozenset(
                a for a in comp if any(b in part.in_ for b in fw.attackers(a) if b not in members)
            )
            rest = members - hit
            subs = _ub(restrict(fw, rest), base) if rest else [Labelling()]
            head = part.merged(Labelling(out=hit))
            extended.extend(head.merged(s) for s in subs)
        partials = extended
    return partials


def ub_labellings(fw: Framework, base: BaseFunction) -> LabellingSet:
    """Apply the ub schema with ``base`` (which must yield weakly complete labellings)."""
    if not fw.arguments:
        raise EmptyFrameworkError("semantics are undefined on an empty framework")
    return LabellingSet.of(_ub(fw, base))


def ub_grounded_labelling(fw: Framework) -> Labelling:
    (lab,) = ub_labellings(fw, lambda f: [grounded_labelling(f)])
    return lab


class PrecedenceMode(str, enum.Enum):
    """How semantic precedence and its initial set are read.

    ``REPORTED`` relates any two arguments (not only members of one SCC) and
    keeps only credulously accepted arguments in the initial set; it matches
    the initial sets worked out by hand for the floating-assignment graph,
    the self-attacker chain and the five-argument cycle fixture. ``SCC``
    restricts pairs to a shared SCC and keeps every argument with no strict
    predecessor.
    """

    REPORTED = "reported"
    SCC = "scc"


@dataclass(frozen=True)
class PrecedenceRelation:
    pairs: frozenset[tuple[Argument, Argument]]

    @property
    def strict(self) -> frozenset[tuple[Argument, Argument]]:
        return frozenset((a, b) for a, b in self.pairs if (b, a) not in self.pairs)

    def precedes(self, a: Argument, b: Argument) -> bool:
        return (a, b) in self.strict


def semantic_precedence(
    fw: Framework, mode: PrecedenceMode = PrecedenceMode.REPORTED, **kw
) -> PrecedenceRelation:
    """(a, b) is a pair when a is credulously accepted and every weakly
    complete labelling accepting a leaves b decided."""
    wc = list(weakly_complete_labellings(fw, **kw))
    dec = scc_decomposition(fw)
    pairs = set()
    for a in fw.arguments:
        with_a = [lab for lab in wc if a in lab.in_]
        if not with_a:
            continue
        for b in fw.arguments:
            if b == a:
                continue
            if mode is PrecedenceMode.SCC and dec.component_of[a] != dec.component_of[b]:
                continue
            if all(b not in lab.undec for lab in with_a):
                pairs.add((a, b))
    return PrecedenceRelation(frozenset(pairs))


def precedence_initial_set(
    fw: Framework, mode: PrecedenceMode = PrecedenceMode.REPORTED, **kw
) -> frozenset[Argument]:
    strict = semantic_precedence(fw, mode, **kw).strict
    preceded = {b for _, b in strict}
    initial = frozenset(a for a in fw.arguments if a not in preceded)
    if mode is PrecedenceMode.REPORTED:
        initial = frozenset(a for a in initial if credulous_wc(fw, a))
    return initial


def ub_preferred_labellings(
    fw: Framework, mode: PrecedenceMode = PrecedenceMode.REPORTED, **kw
) -> LabellingSet:
    """ub schema whose base keeps the weakly preferred labellings of each
    subframework with a maximal accepted share of the precedence-initial set.

    The initial set is computed once on the whole framework.
    """
    ip = precedence_initial_set(fw, mode, **kw)

    def base(sub: Framework) -> list[Labelling]:
        prefs = list(weakly_preferred_labellings(sub, **kw))
        keys = [lab.in_ & ip for lab in prefs]
        return [lab for lab, k in zip(prefs, keys) if not any(k < other for other in keys)]

    return ub_labellings(fw, base)
