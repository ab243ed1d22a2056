"""Weak admissibility semantics (BBU): weakly admissible, complete, preferred and grounded sets.

A conflict-free set E is weakly admissible when no attacker of E belongs to
a weakly admissible set of the E-reduct (the framework minus E and the
arguments E attacks). Every reduct is an induced subframework of the input,
so results are memoised by argument set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyFrameworkError, ResourceLimitError
from .framework import Argument, Framework, attacked_set, restrict
from .labelling import Labelling, LabellingSet

DEFAULT_MAX_ARGS = 20

# An attacker y of E is harmless iff it is NOT in any weakly admissible set
# of the E-reduct. The opposite polarity makes a lone self-attacker defeat
# its target, contradicting the worked examples.
HARMLESS_IF_IN_REDUCT_ADMISSIBLE = False


class DefenceReading(str, enum.Enum):
    """Which part of X must extend to a weakly admissible set of the E-reduct.

    ``REDUCT_SHARE`` (default) asks only for the part of X still present in
    the reduct; it keeps "weakly admissible iff weakly defends itself".
    ``LITERAL`` asks for all of X. Members of E never survive into the
    E-reduct, so a non-empty E then only defends sets whose attackers it
    attacks outright, and {c} becomes complete on the chain a -> b -> c.
    """

    LITERAL = "literal"
    REDUCT_SHARE = "reduct-share"


DEFAULT_READING = DefenceReading.REDUCT_SHARE


@dataclass(frozen=True)
class ExtensionSet:
    extensions: tuple[frozenset[Argument], ...] = ()

    @classmethod
    def of(cls, sets: Iterable[Iterable[Argument]]) -> ExtensionSet:
        return cls(tuple(dict.fromkeys(frozenset(s) for s in sets)))

    def __iter__(self) -> Iterator[frozenset[Argument]]:
        return iter(self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)

    def __contains__(self, item: object) -> bool:
        return frozenset(item) in set(self.extensions)  # type: ignore[arg-type]

    def as_set(self) -> set[frozenset[Argument]]:
        return set(self.extensions)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtensionSet):
            return self.as_set() == other.as_set()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.extensions))


def reduct(fw: Framework, e: Iterable[Argument]) -> Framework:
    """Restriction of ``fw`` to arguments neither in ``e`` nor attacked by ``e``."""
    e = fw.check_members(e)
    return restrict(fw, frozenset(fw.arguments) - e - attacked_set(fw, e))


def conflict_free_sets(fw: Framework, pool: Iterable[Argument] | None = None,
                       base: frozenset[Argument] = frozenset()) -> Iterator[frozenset[Argument]]:
    """Conflict-free supersets of ``base`` drawn from ``pool``, by backtracking.

    Branches that would add a conflicting argument are cut immediately.
    """
    cand = [a for a in (fw.arguments if pool is None else fw.sorted_args(pool))
            if a not in base and (a, a) not in fw.attacks]

    def rec(i: int, chosen: frozenset[Argument], blocked: frozenset[Argument]):
        if i == len(cand):
            yield chosen
            return
        yield from rec(i + 1, chosen, blocked)
        a = cand[i]
        if a not in blocked:
            yield from rec(i + 1, chosen | {a}, blocked | fw.attacked_by(a) | fw.attackers(a))

    start_blocked = frozenset().union(*(fw.attacked_by(a) | fw.attackers(a) for a in base)) if base else frozenset()
    yield from rec(0, base, start_blocked)


class WeakAdmissibility:
    """Memoised weakly admissible sets for every induced subframework of ``fw``."""

    def __init__(self, fw: Framework, max_args: int | None = None,
                 reading: DefenceReading = DEFAULT_READING):
        limit = DEFAULT_MAX_ARGS if max_args is None else max_args
        if not fw.arguments:
            raise EmptyFrameworkError("semantics are undefined on an empty framework")
        if limit >= 0 and len(fw) > limit:
            raise ResourceLimitError(f"weak admissibility refused for {len(fw)} arguments (limit {limit})")
        self.fw = fw
        self.reading = DefenceReading(reading)
        self._memo: dict[frozenset[Argument], tuple[frozenset[Argument], ...]] = {}

    def reduct_args(self, args: frozenset[Argument], e: frozenset[Argument]) -> frozenset[Argument]:
        return args - e - attacked_set(self.fw, e)

    def sets(self, args: frozenset[Argument] | None = None) -> tuple[frozenset[Argument], ...]:
        """Weakly admissible sets of the subframework induced by ``args``."""
        args = frozenset(self.fw.arguments) if args is None else args
        hit = self._memo.get(args)
        if hit is not None:
            return hit
        fw = self.fw
        result = []
        for e in conflict_free_sets(fw, args):
            if not e:
                result.append(e)
                continue
            red = self.reduct_args(args, e)
            red_union = frozenset().union(*self.sets(red))
            attackers = frozenset(y for x in e for y in fw.attackers(x) if y in args)
            if HARMLESS_IF_IN_REDUCT_ADMISSIBLE:
                ok = attackers <= red_union
            else:
                ok = not (attackers & red_union)
            if ok:
                result.append(e)
        self._memo[args] = tuple(result)
        return self._memo[args]

    def weakly_defends(self, e: frozenset[Argument], x: frozenset[Argument]) -> bool:
        """Does ``e`` weakly defend ``x``?

        Each attacker y of x must be attacked by e, or else lie outside e and
        outside every weakly admissible set of the e-reduct, with x (or its
        part surviving in the reduct, see ``DefenceReading``) contained in
        one of those sets.
        """
        fw = self.fw
        args = frozenset(fw.arguments)
        red = self.reduct_args(args, e)
        red_sets = self.sets(red)
        red_union = frozenset().union(*red_sets)
        survivors = x & red if self.reading is DefenceReading.REDUCT_SHARE else x
        e_hits = attacked_set(fw, e)
        for y in frozenset(b for a in x for b in fw.attackers(a)):
            if y in e_hits:
                continue
            if y in e or y in red_union:
                return False
            if not any(survivors <= s for s in red_sets):
                return False
        return True

    def complete(self) -> tuple[frozenset[Argument], ...]:
        fw = self.fw
        result = []
        for e in self.sets():
            closed = True
            for x in conflict_free_sets(fw, base=e):
                if x != e and self.weakly_defends(e, x):
                    closed = False
                    break
            if closed:
                result.append(e)
        return tuple(result)


def weakly_admissible_sets(fw: Framework, *, max_args: int | None = None) -> ExtensionSet:
    return ExtensionSet.of(WeakAdmissibility(fw, max_args).sets())


def weakly_defends(fw: Framework, e: Iterable[Argument], x: Iterable[Argument], *,
                   max_args: int | None = None, reading: DefenceReading = DEFAULT_READING) -> bool:
    e, x = fw.check_members(e), fw.check_members(x)
    return WeakAdmissibility(fw, max_args, reading).weakly_defends(e, x)


def bbu_complete(fw: Framework, *, max_args: int | None = None,
                 reading: DefenceReading = DEFAULT_READING) -> ExtensionSet:
    return ExtensionSet.of(WeakAdmissibility(fw, max_args, reading).complete())


def bbu_preferred(fw: Framework, *, max_args: int | None = None) -> ExtensionSet:
    sets = WeakAdmissibility(fw, max_args).sets()
    return ExtensionSet.of(s for s in sets if not any(s < t for t in sets))


def bbu_grounded(fw: Framework, *, max_args: int | None = None,
                 reading: DefenceReading = DEFAULT_READING) -> ExtensionSet:
    co = WeakAdmissibility(fw, max_args, reading).complete()
    return ExtensionSet.of(s for s in co if not any(t < s for t in co))


def extensions_to_labellings(fw: Framework, exts: Iterable[frozenset[Argument]]) -> LabellingSet:
    """in = extension, out = its targets, undec = the rest."""
    return LabellingSet.of(Labelling.of(fw, e, attacked_set(fw, e)) for e in exts)
