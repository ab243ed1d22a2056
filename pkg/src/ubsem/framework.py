"""Argumentation frameworks: construction, graph queries, restriction and SCCs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import FrameworkError

Argument = str
Attack = tuple[str, str]


@dataclass(frozen=True)
class Framework:
    """Immutable attack graph over named arguments.

    Argument order is the insertion order and drives every deterministic
    traversal in the package. Use :func:`build_framework` to construct one.
    """

    arguments: tuple[Argument, ...]
    attacks: frozenset[Attack]
    index: dict[Argument, int] = field(repr=False, compare=False)
    _attackers: dict[Argument, frozenset[Argument]] = field(repr=False, compare=False)
    _attacked: dict[Argument, frozenset[Argument]] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, arg: object) -> bool:
        return arg in self.index

    def __iter__(self) -> Iterator[Argument]:
        return iter(self.arguments)

    def __hash__(self) -> int:
        return hash((self.arguments, self.attacks))

    def attackers(self, arg: Argument) -> frozenset[Argument]:
        """Arguments attacking ``arg``."""
        try:
            return self._attackers[arg]
        except KeyError:
            raise FrameworkError(f"unknown argument {arg!r}") from None

    def attacked_by(self, arg: Argument) -> frozenset[Argument]:
        """Arguments that ``arg`` attacks."""
        try:
            return self._attacked[arg]
        except KeyError:
            raise FrameworkError(f"unknown argument {arg!r}") from None

    def attacks_pair(self, a: Argument, b: Argument) -> bool:
        return (a, b) in self.attacks

    def sorted_args(self, args: Iterable[Argument]) -> list[Argument]:
        """``args`` in framework order."""
        return sorted(args, key=self.index.__getitem__)

    def sorted_attacks(self) -> list[Attack]:
        return sorted(self.attacks, key=lambda ab: (self.index[ab[0]], self.index[ab[1]]))

    def check_members(self, args: Iterable[Argument]) -> frozenset[Argument]:
        args = frozenset(args)
        unknown = args - self.index.keys()
        if unknown:
            raise FrameworkError(f"unknown argument(s) {sorted(unknown)!r}")
        return args

    def __repr__(self) -> str:
        atts = ", ".join(f"{a}->{b}" for a, b in self.sorted_attacks())
        return f"Framework([{', '.join(self.arguments)}], {{{atts}}})"


def build_framework(arguments: Iterable[Argument], attacks: Iterable[Attack]) -> Framework:
    """Validate and normalise an argument list and attack list into a Framework.

    Raises FrameworkError on duplicate or blank ids and on attacks whose
    endpoints were not declared. Duplicate attack pairs are collapsed.
    """
    args = tuple(arguments)
    index: dict[Argument, int] = {}
    for i, a in enumerate(args):
        if not isinstance(a, str) or not a.strip():
            raise FrameworkError(f"argument ids must be non-empty strings, got {a!r}")
        if a in index:
            raise FrameworkError(f"duplicate argument {a!r}")
        index[a] = i
    atts = set()
    for pair in attacks:
        a, b = pair
        for end in (a, b):
            if end not in index:
                raise FrameworkError(f"attack ({a}, {b}) references undeclared argument {end!r}")
        atts.add((a, b))
    attackers: dict[Argument, set[Argument]] = {a: set() for a in args}
    attacked: dict[Argument, set[Argument]] = {a: set() for a in args}
    for a, b in atts:
        attackers[b].add(a)
        attacked[a].add(b)
    return Framework(
        arguments=args,
        attacks=frozenset(atts),
        index=index,
        _attackers={a: frozenset(s) for a, s in attackers.items()},
        _attacked={a: frozenset(s) for a, s in attacked.items()},
    )


def attackers(fw: Framework, arg: Argument) -> frozenset[Argument]:
    return fw.attackers(arg)


def attacked_by(fw: Framework, arg: Argument) -> frozenset[Argument]:
    return fw.attacked_by(arg)


def initial_arguments(fw: Framework) -> frozenset[Argument]:
    """Arguments with no attackers at all (self-attackers are not initial)."""
    return frozenset(a for a in fw.arguments if not fw.attackers(a))


def attacked_set(fw: Framework, args: Iterable[Argument]) -> frozenset[Argument]:
    """Union of the targets of ``args``."""
    out: set[Argument] = set()
    for a in args:
        out |= fw.attacked_by(a)
    return frozenset(out)


def is_conflict_free(fw: Framework, args: Iterable[Argument]) -> bool:
    args = frozenset(args)
    return not any(fw.attacked_by(a) & args for a in args)


def restrict(fw: Framework, subset: Iterable[Argument]) -> Framework:
    """Vertex-induced subframework on ``subset``; framework order is preserved."""
    keep = fw.check_members(subset)
    if len(keep) == len(fw.arguments):
        return fw
    args = [a for a in fw.arguments if a in keep]
    atts = [(a, b) for a, b in fw.attacks if a in keep and b in keep]
    return build_framework(args, atts)


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components in a topological order of the condensation.

    Attacks between different components only go from earlier to later ones.
    Each component lists its arguments in framework order.
    """

    components: tuple[tuple[Argument, ...], ...]
    component_of: dict[Argument, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[tuple[Argument, ...]]:
        return iter(self.components)


def _tarjan(fw: Framework) -> list[list[Argument]]:
    # iterative, so chains with thousands of arguments do not hit the recursion limit
    index: dict[Argument, int] = {}
    low: dict[Argument, int] = {}
    on_stack: set[Argument] = set()
    stack: list[Argument] = []
    result: list[list[Argument]] = []
    counter = 0
    succ = {a: fw.sorted_args(fw.attacked_by(a)) for a in fw.arguments}

    for root in fw.arguments:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            children = succ[v]
            while i < len(children):
                w = children[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return result


def scc_decomposition(fw: Framework) -> SccDecomposition:
    """Tarjan SCCs, ordered by Kahn's algorithm with ties broken by framework order."""
    comps = [tuple(fw.sorted_args(c)) for c in _tarjan(fw)]
    comp_of = {a: i for i, c in enumerate(comps) for a in c}
    succ: list[set[int]] = [set() for _ in comps]
    indeg = [0] * len(comps)
    for a, b in fw.attacks:
        ca, cb = comp_of[a], comp_of[b]
        if ca != cb and cb not in succ[ca]:
            succ[ca].add(cb)
            indeg[cb] += 1
    key = [fw.index[c[0]] for c in comps]
    heap = [(key[i], i) for i in range(len(comps)) if indeg[i] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (key[j], j))
    ordered = tuple(comps[i] for i in order)
    return SccDecomposition(
        components=ordered,
        component_of={a: i for i, c in enumerate(ordered) for a in c},
    )


def is_acyclic_argument(fw: Framework, arg: Argument) -> bool:
    """True iff ``arg`` lies on no cycle (singleton SCC without a self-attack)."""
    fw.check_members([arg])
    if fw.attacks_pair(arg, arg):
        return False
    dec = scc_decomposition(fw)
    return len(dec.components[dec.component_of[arg]]) == 1


def initial_components(fw: Framework, dec: SccDecomposition | None = None) -> list[tuple[Argument, ...]]:
    """SCCs receiving no attack from outside themselves."""
    dec = dec or scc_decomposition(fw)
    result = []
    for comp in dec.components:
        members = set(comp)
        if all(fw.attackers(a) <= members for a in comp):
            result.append(comp)
    return result
