"""Twist-word and 4-tuple representations of (1,1)-knots."""
__version__ = "0.1.0"
