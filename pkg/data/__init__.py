"""
Data module for the splitting toolkit.
Handles .tgg documents, JSON schemas and DOT / JSON exports.
"""

from .document import (
    ComplexLoader,
    dumps_complex,
    loads_complex,
    parse_complex,
    save_complex,
    serialize_complex,
)

__all__ = [
    'ComplexLoader',
    'dumps_complex',
    'loads_complex',
    'parse_complex',
    'save_complex',
    'serialize_complex',
]
