"""Named example frameworks shipped as TGF files.

g1..g7 are the small graphs used throughout the weakly complete examples
(g2 and g6 share a topology), fig1a..fig1d the motivating graphs, fig6 and
fig7 the ub-preferred examples, fig9 the weak admissibility graph with two
grounded extensions. ``scc``, ``two_cycle`` and ``self_isolated`` are extra
test shapes.
"""

from __future__ import annotations

from importlib import resources

from ..formats import parse_tgf
from ..framework import Framework


def names() -> list[str]:
    return sorted(p.name[:-4] for p in resources.files(__name__).iterdir() if p.name.endswith(".tgf"))


def text(name: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.tgf").read_text()


def load(name: str) -> Framework:
    try:
        return parse_tgf(text(name))
    except FileNotFoundError:
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(names())}") from None
