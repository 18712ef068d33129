"""Orthogonal polynomials on the wedge and the square, served over MCP"""

__version__ = "0.1.0"
