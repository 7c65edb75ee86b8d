"""Iterated line graphs, exact graph parameters and index verification."""

from __future__ import annotations

__version__ = "0.1.0"
