"""
Integration tests for the cxh command line and full suite runs.
"""
