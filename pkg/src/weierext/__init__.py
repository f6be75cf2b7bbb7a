"""Exact numerical extendability checks for Weierstrass elliptic surfaces."""
__version__ = "0.1.0"
