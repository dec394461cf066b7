"""Discrete mixed second moments of derivatives of the Riemann zeta function."""

__version__ = "0.1.0"
