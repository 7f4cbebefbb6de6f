"""Exception types shared across the package."""


class OrthogonalStartError(ValueError):
    """Start state has (numerically) zero overlap with the target state."""


class DegeneratePlaneError(ValueError):
    """Start and target states are (numerically) parallel; the search plane collapses."""
