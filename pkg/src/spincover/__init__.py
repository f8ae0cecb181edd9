"""Exact spin covers of Weyl groups of Kac-Moody type."""

__version__ = "0.1.0"
