"""Adaptive trapezoid integration with midpoint refinement.

Used for Stieltjes inversion, where the integrand is a smooth Poisson-type
profile for y > 0 but develops narrow spikes of width ~ y near atoms.  An
initial uniform grid guards against missing such spikes; cells are then
bisected until the midpoint-refined trapezoid value stabilizes.
"""

from __future__ import annotations

__all__ = ["adaptive_trapezoid"]


def adaptive_trapezoid(f, a, b, rel_tol=1e-6, min_cells=64, max_depth=48):
    if not b > a:
        raise ValueError("integration interval must satisfy a < b")
    width = b - a
    xs = [a + width * k / min_cells for k in range(min_cells + 1)]
    fs = [float(f(x)) for x in xs]
    rough = sum(
        0.5 * (f0 + f1) * (x1 - x0)
        for x0, x1, f0, f1 in zip(xs, xs[1:], fs, fs[1:])
    )
    scale = max(abs(rough), max(abs(v) for v in fs) * width, 1e-300)

    def cell(x0, f0, x1, f1, depth):
        xm = 0.5 * (x0 + x1)
        fm = float(f(xm))
        coarse = 0.5 * (f0 + f1) * (x1 - x0)
        fine = 0.25 * (f0 + 2.0 * fm + f1) * (x1 - x0)
        budget = rel_tol * scale * (x1 - x0) / width
        if depth >= max_depth or abs(fine - coarse) <= budget:
            # one Richardson step turns the refined trapezoid into Simpson
            return fine + (fine - coarse) / 3.0
        return cell(x0, f0, xm, fm, depth + 1) + cell(xm, fm, x1, f1, depth + 1)

    return sum(
        cell(x0, f0, x1, f1, 0)
        for x0, x1, f0, f1 in zip(xs, xs[1:], fs, fs[1:])
    )
