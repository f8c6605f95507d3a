"""
Unit Tests

Fast tests on small graphs; no files outside tmp_path.
"""
