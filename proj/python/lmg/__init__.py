"""Normal forms in the n-adic Lodha-Moore group G0(n).

Words use the text syntax of the command line tool: ``x0 x1[21]^-2 y[30]^3``.
Points are eventually periodic words written ``pre(per)*``.
"""

from ._lmg import (
    DomainError,
    Element,
    InvariantError,
    ParseError,
    abelianize,
    embed,
    equal,
    evaluate,
    is_y_index,
    normalize,
    standard_generators,
)

__all__ = [
    "DomainError",
    "Element",
    "InvariantError",
    "ParseError",
    "abelianize",
    "embed",
    "equal",
    "evaluate",
    "is_y_index",
    "normalize",
    "standard_generators",
]
