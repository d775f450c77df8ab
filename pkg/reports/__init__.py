"""
Reports module for the splitting toolkit.
Contains the running-time benchmark of the normalization loop.
"""

from .benchmark import PolynomialityBenchmark

__all__ = ['PolynomialityBenchmark']
