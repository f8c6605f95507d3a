# Cycle and P3 convexity on graph products
"""
Cycle convexity and P3 convexity on graphs and graph products.

This package provides:
- Graph representation, codecs and generators (graph_core)
- Cartesian, strong and lexicographic products (products)
- Interval and closure operators (kernel)
- Exact hull-number, convexity-number and independence solvers (solvers)
- Hardness gadgets and reduction instances (gadgets)
- The theorem-check harness and the `cxh` CLI (harness)
"""

__version__ = "0.1.0"
