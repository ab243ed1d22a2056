"""Weakly complete semantics for abstract argumentation.

Labellings may leave an argument in while it is attacked by undecided
arguments, provided the attacker is blocked by its own undecidedness.
"""

from .errors import (
    ArgumentationError,
    EmptyFrameworkError,
    FrameworkError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .framework import Framework, build_framework, restrict, scc_decomposition
from .labelling import Label, Labelling, LabellingSet
from .propagation import Inconsistency, grounded_labelling, in_out_fw
from .weakly import (
    credulous_wc,
    dung_complete_labellings,
    skeptical_wc,
    weakly_complete_labellings,
    weakly_grounded_labelling,
    weakly_preferred_labellings,
    weakly_stable_labellings,
)
from .ub import PrecedenceMode, ub_grounded_labelling, ub_preferred_labellings
from .bbu import bbu_complete, bbu_grounded, bbu_preferred, weakly_admissible_sets

__version__ = "0.1.0"
