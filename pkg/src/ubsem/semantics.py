"""Registry mapping semantics ids to labelling-set functions."""

from __future__ import annotations

from typing import Callable

from . import bbu, ub, weakly
from .errors import EmptyFrameworkError
from .framework import Framework
from .labelling import LabellingSet
from .propagation import grounded_labelling

SemanticsFn = Callable[..., LabellingSet]


def _single(fn):
    def wrapped(fw: Framework, max_args: int | None = None) -> LabellingSet:
        return LabellingSet.of([fn(fw)])

    return wrapped


def _bbu(fn):
    def wrapped(fw: Framework, max_args: int | None = None) -> LabellingSet:
        return bbu.extensions_to_labellings(fw, fn(fw, max_args=max_args))

    return wrapped


def _enum(fn):
    def wrapped(fw: Framework, max_args: int | None = None) -> LabellingSet:
        return fn(fw, max_args=max_args)

    return wrapped


SEMANTICS: dict[str, SemanticsFn] = {
    "GR": _single(grounded_labelling),
    "CO": _enum(weakly.dung_complete_labellings),
    "PR": _enum(weakly.dung_preferred_labellings),
    "ST": _enum(weakly.dung_stable_labellings),
    "WCO": _enum(weakly.weakly_complete_labellings),
    "WPR": _enum(weakly.weakly_preferred_labellings),
    "WGR": _single(weakly.weakly_grounded_labelling),
    "WST": _enum(weakly.weakly_stable_labellings),
    "UBGR": _single(ub.ub_grounded_labelling),
    "UBPR": _enum(ub.ub_preferred_labellings),
    "BBU-CO": _bbu(bbu.bbu_complete),
    "BBU-PR": _bbu(bbu.bbu_preferred),
    "BBU-GR": _bbu(bbu.bbu_grounded),
}

SINGLE_STATUS = frozenset({"GR", "WGR", "UBGR"})
BBU_IDS = frozenset({"BBU-CO", "BBU-PR", "BBU-GR"})


def get(sem_id: str) -> SemanticsFn:
    try:
        return SEMANTICS[sem_id.upper()]
    except KeyError:
        raise ValueError(f"unknown semantics {sem_id!r}; choose from {', '.join(SEMANTICS)}") from None


def labellings(sem_id: str, fw: Framework, max_args: int | None = None) -> LabellingSet:
    if not fw.arguments:
        raise EmptyFrameworkError("semantics are undefined on an empty framework")
    return get(sem_id)(fw, max_args)
