"""R-motivic Steenrod algebra, its dual, and duality for finite free modules."""

__version__ = "0.1.0"
