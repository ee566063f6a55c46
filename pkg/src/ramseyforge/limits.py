"""Size caps for builders and exact oracles.

The vertex limit can be raised or lowered through the RAMSEY_FORGE_MAX_N
environment variable; everything else is a keyword argument on the function
that enforces it.
"""
import os
from dataclasses import dataclass

DEFAULT_MAX_VERTICES = 200_000

DENSE_SPECTRUM_CAP = 2500
TOUGHNESS_CAP = 16
INDEPENDENCE_CAP = 300
CUT_CAP = 20
CIRCLE_LEMMA_CAP = 31
NODE_BUDGET = 10**8

# Exact independence is attempted inside verifiers only below these sizes;
# larger graphs get a recorded bound instead of an open-ended search.
VERIFY_ALPHA_CAP_GEOMETRIC = 100
VERIFY_ALPHA_CAP_CODE = 64
VERIFY_TRIANGLE_CAP = 5000


def max_vertices() -> int:
    """Vertex limit for graph construction, overridable via RAMSEY_FORGE_MAX_N."""
    raw = os.environ.get("RAMSEY_FORGE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_VERTICES
    return value if value > 0 else DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class ResourceLimits:
    """Resource caps threaded through sweeps and verifiers."""

    max_n: int = DEFAULT_MAX_VERTICES
    spectrum_cap: int = DENSE_SPECTRUM_CAP
    toughness_cap: int = TOUGHNESS_CAP
    independence_cap: int = INDEPENDENCE_CAP
    cut_cap: int = CUT_CAP
    node_budget: int = NODE_BUDGET
