"""List total colouring of pseudo-outerplanar graphs."""

__version__ = "0.1.0"
