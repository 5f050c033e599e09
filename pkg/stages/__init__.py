"""DEA pipeline stages.

This package provides:
- Template, TemplateOrigin, OriginKind: candidate common subsequences and their provenance
- deposit, DepositionConfig, FrontState: MF/MC deposition with a bounded search range
- extend_ends, expand_runs, extend, grow: template extension moves
- TemplatePool, build_pool, basic_templates: the template pool

Use __all__ as the canonical list of exported names.
"""

from .deposition import DepositionConfig, FrontState, deposit
from .extension import (
    TemplatePool,
    basic_templates,
    build_pool,
    expand_runs,
    extend,
    extend_ends,
    grow,
)
from .templates import OriginKind, Template, TemplateOrigin

__all__ = [
    "DepositionConfig",
    "FrontState",
    "OriginKind",
    "Template",
    "TemplateOrigin",
    "TemplatePool",
    "basic_templates",
    "build_pool",
    "deposit",
    "expand_runs",
    "extend",
    "extend_ends",
    "grow",
]
