"""Test package for zeta-discrete-moments."""
