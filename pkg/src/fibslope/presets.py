"""Ready-made pencils: the nodal plane pencil of degree 18, the two nodal
pencils of bidegree (8, 8) on P^1 x P^1, and pencils of smooth plane curves."""

from __future__ import annotations

from .pencil import PencilSpec


def plane_nodal_18() -> PencilSpec:
    """Degree 18, 54 nodes and 108 simple base points (6m = d^2): genus 82."""
    return PencilSpec("P2", 18, 108, 54)


def quadric_nodal_26() -> PencilSpec:
    """Bidegree (8, 8) with 26 nodes: genus 23.  Gonality 6 is asserted."""
    return PencilSpec("F0", (8, 8), 24, 26, assumed_gonality=6)


def quadric_nodal_24() -> PencilSpec:
    """Bidegree (8, 8) with 24 nodes: genus 25 and K_f^2 = 6(g - 1).
    Gonality 5 is asserted."""
    return PencilSpec("F0", (8, 8), 32, 24, assumed_gonality=5)


def smooth_plane(d: int) -> PencilSpec:
    """Pencil of smooth plane curves of degree d with d^2 simple base points."""
    return PencilSpec("P2", d, d * d, 0)


def plane_nodal(d: int, m: int, **kwargs) -> PencilSpec:
    return PencilSpec("P2", d, d * d - 4 * m, m, **kwargs)


def quadric_nodal(alpha: int, beta: int, m: int, **kwargs) -> PencilSpec:
    return PencilSpec("F0", (alpha, beta), 2 * alpha * beta - 4 * m, m, **kwargs)


GOLDEN = {
    "plane_nodal_18": plane_nodal_18,
    "quadric_nodal_26": quadric_nodal_26,
    "quadric_nodal_24": quadric_nodal_24,
}
