"""Tanisaki ideals with evaluation parameters, their quotient rings and characters, in exact arithmetic."""

__version__ = "0.1.0"
