"""Similarity of integer matrices over Z with certified conjugators."""

__version__ = "0.1.0"
