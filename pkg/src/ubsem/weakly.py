"""Weakly complete labellings and the semantics derived from them.

Enumeration follows the ground-based scheme: start from the grounded
labelling and repeatedly try to accept one more undec argument with
:func:`in_out_fw`; every consistent attempt yields a new weakly complete
labelling with a strictly larger in-set.
"""

from __future__ import annotations

import sys

from .errors import EmptyFrameworkError, FrameworkError, ResourceLimitError
from .framework import Argument, Framework
from .labelling import Label, Labelling, LabellingSet, maximal_by_in
from .propagation import Inconsistency, grounded_labelling, in_out_fw

DEFAULT_MAX_ARGS = 25


def _check_size(fw: Framework, max_args: int | None) -> None:
    if not fw.arguments:
        raise EmptyFrameworkError("semantics are undefined on an empty framework")
    limit = DEFAULT_MAX_ARGS if max_args is None else max_args
    if limit >= 0 and len(fw) > limit:
        raise ResourceLimitError(
            f"full enumeration refused for {len(fw)} arguments (limit {limit}); raise max_args to override"
        )


def weakly_complete_labellings(
    fw: Framework, *, max_args: int | None = None, max_labellings: int | None = None
) -> LabellingSet:
    """All weakly complete labellings of ``fw``.

    ``provenance`` maps each in-set to the ground sequences (beyond the
    initial arguments) that reached it; ``discoveries`` counts every
    consistent propagation including repeats. A labelling reached twice is
    expanded only once, since what can follow depends on the labelling alone.

    Pass ``max_args=-1`` to lift the argument limit.
    """
    _check_size(fw, max_args)
    found = LabellingSet()
    expanded: set[frozenset[Argument]] = set()

    def compute(lab: Labelling, seq: tuple[Argument, ...]) -> None:
        if lab.in_ in expanded:
            return
        expanded.add(lab.in_)
        for g in fw.arguments:
            if g not in lab.undec:
                continue
            nxt = in_out_fw(fw, (g,), lab)
            if isinstance(nxt, Inconsistency):
                continue
            found.add(nxt, seq + (g,))
            if max_labellings is not None and len(found) > max_labellings:
                raise ResourceLimitError(f"more than {max_labellings} labellings")
            compute(nxt, seq + (g,))

    grounded = grounded_labelling(fw)
    found.add(grounded, ())
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(fw) + 200))
    try:
        compute(grounded, ())
    finally:
        sys.setrecursionlimit(old)
    return found


def terminal_labellings(fw: Framework, **kw) -> LabellingSet:
    """Leaves of the ground-based search: no undec argument can be accepted."""
    wc = weakly_complete_labellings(fw, **kw)
    return wc.filter(
        lambda lab: all(
            isinstance(in_out_fw(fw, (g,), lab), Inconsistency) for g in fw.sorted_args(lab.undec)
        )
    )


def weakly_preferred_labellings(fw: Framework, **kw) -> LabellingSet:
    return maximal_by_in(weakly_complete_labellings(fw, **kw))


def weakly_grounded_labelling(fw: Framework) -> Labelling:
    # undec-maximal weakly complete labelling coincides with grounded
    return grounded_labelling(fw)


def weakly_stable_labellings(fw: Framework, **kw) -> LabellingSet:
    return weakly_complete_labellings(fw, **kw).filter(lambda lab: not lab.undec)


def is_admissible_labelling(fw: Framework, lab: Labelling) -> bool:
    return all(fw.attackers(a) <= lab.out for a in lab.in_)


def dung_complete_labellings(fw: Framework, **kw) -> LabellingSet:
    return weakly_complete_labellings(fw, **kw).filter(lambda lab: is_admissible_labelling(fw, lab))


def dung_preferred_labellings(fw: Framework, **kw) -> LabellingSet:
    return maximal_by_in(dung_complete_labellings(fw, **kw))


def dung_stable_labellings(fw: Framework, **kw) -> LabellingSet:
    return dung_complete_labellings(fw, **kw).filter(lambda lab: not lab.undec)


def credulous_wc(fw: Framework, arg: Argument) -> bool:
    """Is ``arg`` in in some weakly complete labelling? Polynomial, no enumeration."""
    if arg not in fw:
        raise FrameworkError(f"unknown argument {arg!r}")
    grounded = grounded_labelling(fw)
    label = grounded[arg]
    if label is not Label.UNDEC:
        return label is Label.IN
    return not isinstance(in_out_fw(fw, (arg,), grounded), Inconsistency)


def skeptical_wc(fw: Framework, arg: Argument, **kw) -> bool:
    if arg not in fw:
        raise FrameworkError(f"unknown argument {arg!r}")
    return all(arg in lab.in_ for lab in weakly_complete_labellings(fw, **kw))
