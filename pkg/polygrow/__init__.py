"""Exact classification of rational polygons by growing"""

__version__ = "1.0.0"
