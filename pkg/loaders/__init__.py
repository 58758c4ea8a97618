"""
Data loaders for degree sequences, graphs, augmented cores and trees.
"""

from .text_loader import TextDataLoader

__all__ = [
    "TextDataLoader"
]
