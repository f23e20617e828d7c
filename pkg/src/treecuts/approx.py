"""Approximation pipeline for slim tree-cut width.

The pipeline leans on a provider for plain tree-cut width: given (g,
omega) it must return a decomposition of width at most 2*omega or None
to assert tcw(g) > omega. Since tcw <= stcw, a provider "no" rules out
slim width omega as well. A returned decomposition is normalized to very
nice; bounded B2 child counts then certify slim width <= 6(omega+1)^3,
and an oversized B2 set refutes slim width omega.
"""
from __future__ import annotations

import subprocess
from dataclasses import dataclass, field
from typing import Callable, Optional

from .decomposition import TreeCutDecomposition, node_stats, width_report
from .multigraph import MultiGraph
from .oracle import exact_width
from .transform import make_very_nice

# returns a decomposition of width <= 2*omega, or None meaning tcw > omega
TcwProvider = Callable[[MultiGraph, int], Optional[TreeCutDecomposition]]


class ProviderError(RuntimeError):
    """The provider misbehaved; distinct from a legitimate 'no' answer."""


def oracle_provider(g: MultiGraph, omega: int) -> TreeCutDecomposition | None:
    """Exact tree-cut width as a (trivially valid) 2-approximation."""
    value, d = exact_width(g, "tcw", max_vertices=9)
    return d if value <= omega else None


class ExternalProvider:
    """Wraps an executable: graph edge-list on stdin, and either the line
    "NO" or the line "DECOMP" followed by decomposition JSON on stdout."""

    def __init__(self, path: str):
        self.path = path

    def __call__(self, g: MultiGraph, omega: int) -> TreeCutDecomposition | None:
        from .formats import parse_decomposition_json, write_edge_list

        try:
            proc = subprocess.run(
                [self.path, str(omega)],
                input=write_edge_list(g),
                capture_output=True,
                text=True,
                timeout=600,
            )
        except OSError as e:
            raise ProviderError(f"provider could not run: {e}") from None
        if proc.returncode != 0:
            raise ProviderError(f"provider exited with {proc.returncode}")
        out = proc.stdout.strip()
        if out == "NO":
            return None
        if out.startswith("DECOMP"):
            try:
                return parse_decomposition_json(out[len("DECOMP"):])
            except ValueError as e:
                raise ProviderError(f"provider emitted bad JSON: {e}") from None
        raise ProviderError("provider output is neither NO nor DECOMP")


@dataclass
class ApproxResult:
    accepted: bool
    omega: int
    reason: str  # "certified" | "provider-no" | "b2-threshold"
    b2_threshold: int
    slim_bound: int
    decomposition: TreeCutDecomposition | None = None
    slim_width: int | None = None
    b2_sizes: dict[int, int] = field(default_factory=dict)


def approximate_stcw(
    g: MultiGraph, omega: int, provider: TcwProvider = oracle_provider
) -> ApproxResult:
    """Decomposition of slim width <= 6(omega+1)^3, or a certified
    report that stcw(g) > omega. The full very-nice decomposition and
    every audited B2 count are included either way."""
    if omega < 1:
        raise ValueError("omega must be positive")
    threshold = 6 * omega * (omega + 1) ** 2
    bound = 6 * (omega + 1) ** 3
    d0 = provider(g, omega)
    if d0 is None:
        return ApproxResult(
            accepted=False,
            omega=omega,
            reason="provider-no",
            b2_threshold=threshold,
            slim_bound=bound,
        )
    dvn = make_very_nice(d0, g)
    b2_sizes = {t: len(node_stats(dvn, g, t).children_B2) for t in dvn.nodes()}
    if any(v > threshold for v in b2_sizes.values()):
        return ApproxResult(
            accepted=False,
            omega=omega,
            reason="b2-threshold",
            b2_threshold=threshold,
            slim_bound=bound,
            decomposition=dvn,
            b2_sizes=b2_sizes,
        )
    slim = width_report(dvn, g).slim_width
    return ApproxResult(
        accepted=True,
        omega=omega,
        reason="certified",
        b2_threshold=threshold,
        slim_bound=bound,
        decomposition=dvn,
        slim_width=slim,
        b2_sizes=b2_sizes,
    )
