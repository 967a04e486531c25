"""LP-driven search for discharging proofs of distance-2 coloring bounds."""

__version__ = "0.1.0"
