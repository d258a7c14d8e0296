"""Rings, modules and binary pairs attached to binary n-ic forms."""

__version__ = "0.1.0"
