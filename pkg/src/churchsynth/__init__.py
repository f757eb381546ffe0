"""Parity games, regular path representations, pushdown games and Church synthesis."""

__version__ = "0.1.0"
