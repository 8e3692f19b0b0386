"""Instance compilers, solvers, and oracles for four Game Boy game models.

Thin wrapper around the _gbhard extension module; all functions speak the
same text formats as the gbhard CLI (DIMACS CNF, edge lists, knapsack lines,
push-1 grids, and level JSON).
"""

try:
    from ._gbhard import (  # type: ignore[attr-defined]
        CapExceeded,
        ParseError,
        SchemaError,
        oracle,
        reduce,
        render,
        replay,
        solve,
        validate,
        verify,
    )
except ImportError:  # running against a build tree, module beside the package
    from _gbhard import (  # type: ignore[no-redef]
        CapExceeded,
        ParseError,
        SchemaError,
        oracle,
        reduce,
        render,
        replay,
        solve,
        validate,
        verify,
    )

__all__ = [
    "CapExceeded",
    "ParseError",
    "SchemaError",
    "oracle",
    "reduce",
    "render",
    "replay",
    "solve",
    "validate",
    "verify",
]
