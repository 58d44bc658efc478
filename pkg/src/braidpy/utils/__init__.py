"""Numeric backend and oracle loading."""
