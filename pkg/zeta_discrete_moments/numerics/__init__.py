"""Arbitrary-precision numerics for zeta and its derivatives."""
