"""Exact arithmetic for 2^a 3^b + 2^c 3^d = 2^e 3^f + 2^g 3^h and related equations."""

__version__ = "0.1.0"
