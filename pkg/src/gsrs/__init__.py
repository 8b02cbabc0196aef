"""Exact-arithmetic toolkit for one-dimensional Gaussian shift radix
systems: the parameter map, finiteness decision via witness sets, cutout
polygon catalog, the conjectured characterization region, and the
verification campaigns over it."""

__all__ = [
    "cli",
    "cutout",
    "dynamics",
    "exact",
    "families",
    "geometry",
    "region",
    "verify",
]

__version__ = "0.1.0"
