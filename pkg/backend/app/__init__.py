"""Exact law of the Ewens partition length and its normal-approximation bounds."""

__version__ = "1.0.0"
