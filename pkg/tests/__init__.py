"""
Convexity Test Suite

Unit and integration tests for the graph toolkit, the solvers, the
gadget constructions and the verification harness.
"""
