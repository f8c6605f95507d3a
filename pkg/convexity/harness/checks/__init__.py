"""
Theorem checks.

Each check takes a CheckContext and returns a Counterexample, or None when
every instance satisfied the statement.
"""
