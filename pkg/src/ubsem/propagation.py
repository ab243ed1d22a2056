"""Forward in/out label propagation and the grounded labelling built on it."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyFrameworkError, PreconditionError
from .framework import Argument, Framework, attacked_set, initial_arguments, is_conflict_free
from .labelling import Label, Labelling


@dataclass(frozen=True)
class Inconsistency:
    """Propagation clash: ``argument`` would have to be both in and out."""

    argument: Argument

    def __bool__(self) -> bool:
        return False


def in_out_fw(
    fw: Framework, grounds: Iterable[Argument], labelling: Labelling
) -> Labelling | Inconsistency:
    """Accept ``grounds`` and propagate the forced consequences.

    Every ground becomes in and its targets out. An undec argument whose
    attackers are all out is promoted to in, repeatedly, until nothing
    changes. Labels that were already in or out are never altered. If some
    argument would be forced out while labelled in, an :class:`Inconsistency`
    naming that argument is returned and ``labelling`` is left untouched.

    Runs in O(|args| + |attacks|): each argument is examined once when it
    turns out, decrementing a per-argument count of attackers not yet out.
    """
    grounds = list(dict.fromkeys(grounds))
    labelling.check_total(fw)
    for g in grounds:
        if g not in labelling.undec:
            raise PreconditionError(f"ground {g!r} must be undec, is {labelling.get(g)}")
    if not grounds:
        return labelling

    labels = labelling.as_dict()
    pending = {
        x: sum(1 for y in fw.attackers(x) if labels[y] is not Label.OUT)
        for x in labelling.undec
    }
    for g in grounds:
        labels[g] = Label.IN
    queue = deque(grounds)
    # undec arguments already fully defeated are promotable too
    for x in fw.arguments:
        if labels[x] is Label.UNDEC and pending[x] == 0:
            labels[x] = Label.IN
            queue.append(x)

    while queue:
        g = queue.popleft()
        for x in fw.sorted_args(fw.attacked_by(g)):
            lab = labels[x]
            if lab is Label.IN:
                return Inconsistency(x)
            if lab is Label.OUT:
                continue
            labels[x] = Label.OUT
            for y in fw.attacked_by(x):
                if labels[y] is Label.UNDEC:
                    pending[y] -= 1
                    if pending[y] == 0:
                        labels[y] = Label.IN
                        queue.append(y)
    return Labelling.from_mapping(labels)


def grounded_labelling(fw: Framework) -> Labelling:
    """Dung's grounded labelling: propagation seeded with the initial arguments."""
    if not fw.arguments:
        raise EmptyFrameworkError("grounded labelling of an empty framework")
    result = in_out_fw(fw, fw.sorted_args(initial_arguments(fw)), Labelling.all_undec(fw))
    assert isinstance(result, Labelling), "initial arguments can never clash"
    return result


def labelling_from_in_set(fw: Framework, in_set: Iterable[Argument]) -> Labelling:
    """The unique candidate labelling with the given in-set.

    Targets of ``in_set`` are out and everything else undec.
    """
    in_set = fw.check_members(in_set)
    if not is_conflict_free(fw, in_set):
        raise PreconditionError(f"in-set {sorted(in_set)} is not conflict-free")
    return Labelling.of(fw, in_set, attacked_set(fw, in_set))
