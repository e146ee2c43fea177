"""Restricted Lukasiewicz path adsorption models in exact arithmetic."""

__version__ = "0.1.0"
