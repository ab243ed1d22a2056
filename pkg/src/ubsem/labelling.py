"""Three-valued labellings and deduplicated labelling collections."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import FrameworkError
from .framework import Argument, Framework


class Label(str, enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Labelling:
    """Total assignment of in/out/undec to a framework's arguments.

    Stored as three disjoint frozensets; two labellings are equal iff the
    three sets are equal.
    """

    in_: frozenset[Argument] = frozenset()
    out: frozenset[Argument] = frozenset()
    undec: frozenset[Argument] = frozenset()

    def __post_init__(self):
        if self.in_ & self.out or self.in_ & self.undec or self.out & self.undec:
            raise ValueError("in/out/undec sets of a labelling must be disjoint")

    @classmethod
    def from_mapping(cls, labels: Mapping[Argument, Label | str]) -> Labelling:
        groups: dict[Label, set[Argument]] = {lab: set() for lab in Label}
        for arg, lab in labels.items():
            groups[Label(lab)].add(arg)
        return cls(frozenset(groups[Label.IN]), frozenset(groups[Label.OUT]), frozenset(groups[Label.UNDEC]))

    @classmethod
    def all_undec(cls, fw: Framework | Iterable[Argument]) -> Labelling:
        return cls(undec=frozenset(fw))

    @classmethod
    def of(cls, fw: Framework, in_: Iterable[Argument] = (), out: Iterable[Argument] = ()) -> Labelling:
        """Labelling of ``fw`` with the given in/out sets; everything else undec."""
        in_, out = frozenset(in_), frozenset(out)
        fw.check_members(in_ | out)
        return cls(in_, out, frozenset(fw.arguments) - in_ - out)

    @property
    def arguments(self) -> frozenset[Argument]:
        return self.in_ | self.out | self.undec

    def __getitem__(self, arg: Argument) -> Label:
        if arg in self.in_:
            return Label.IN
        if arg in self.out:
            return Label.OUT
        if arg in self.undec:
            return Label.UNDEC
        raise KeyError(arg)

    def get(self, arg: Argument, default=None):
        try:
            return self[arg]
        except KeyError:
            return default

    def as_dict(self) -> dict[Argument, Label]:
        d = {a: Label.IN for a in self.in_}
        d.update((a, Label.OUT) for a in self.out)
        d.update((a, Label.UNDEC) for a in self.undec)
        return d

    def restricted(self, args: Iterable[Argument]) -> Labelling:
        args = frozenset(args)
        return Labelling(self.in_ & args, self.out & args, self.undec & args)

    def merged(self, other: Labelling) -> Labelling:
        """Union with a labelling over disjoint arguments."""
        if self.arguments & other.arguments:
            raise ValueError("cannot merge labellings over overlapping arguments")
        return Labelling(self.in_ | other.in_, self.out | other.out, self.undec | other.undec)

    def check_total(self, fw: Framework) -> None:
        if self.arguments != frozenset(fw.arguments):
            raise FrameworkError("labelling is not total over the framework's arguments")

    def __repr__(self) -> str:
        def fmt(s):
            return "{" + ",".join(sorted(s)) + "}"

        return f"Labelling(in={fmt(self.in_)}, out={fmt(self.out)}, undec={fmt(self.undec)})"


@dataclass
class LabellingSet:
    """Labellings keyed by in-set, in discovery order.

    For a weakly complete labelling the in-set determines the rest, so it is
    used as the deduplication key. ``provenance`` optionally records the
    ground sequences that produced each labelling.
    """

    _items: dict[frozenset[Argument], Labelling] = field(default_factory=dict)
    provenance: dict[frozenset[Argument], list[tuple[Argument, ...]]] = field(default_factory=dict)
    discoveries: int = 0

    @classmethod
    def of(cls, labellings: Iterable[Labelling]) -> LabellingSet:
        ls = cls()
        for lab in labellings:
            ls.add(lab)
        return ls

    def add(self, lab: Labelling, grounds: tuple[Argument, ...] | None = None) -> bool:
        """Insert ``lab``; return True if its in-set was new."""
        self.discoveries += 1
        if grounds is not None:
            self.provenance.setdefault(lab.in_, []).append(grounds)
        prev = self._items.get(lab.in_)
        if prev is None:
            self._items[lab.in_] = lab
            return True
        if prev != lab:
            raise ValueError(f"two labellings share in-set {sorted(lab.in_)}: {prev!r} vs {lab!r}")
        return False

    def __iter__(self) -> Iterator[Labelling]:
        return iter(self._items.values())

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, lab: object) -> bool:
        return isinstance(lab, Labelling) and self._items.get(lab.in_) == lab

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabellingSet):
            return NotImplemented
        return set(self) == set(other)

    def in_sets(self) -> set[frozenset[Argument]]:
        return set(self._items)

    def filter(self, pred) -> LabellingSet:
        return LabellingSet.of(lab for lab in self if pred(lab))

    def sorted(self) -> list[Labelling]:
        return sorted(self, key=lambda lab: sorted(lab.in_))

    def __repr__(self) -> str:
        return f"LabellingSet({self.sorted()!r})"


def maximal_by_in(labellings: Iterable[Labelling]) -> LabellingSet:
    """Members whose in-set is maximal w.r.t. set inclusion."""
    labs = list(labellings)
    return LabellingSet.of(
        lab for lab in labs if not any(lab.in_ < other.in_ for other in labs)
    )
