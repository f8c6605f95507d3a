"""
Test utilities and helpers.

Provides seeded graph generators and hypothesis strategies.
"""
