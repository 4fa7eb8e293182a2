"""Shared accumulator for acceptance-criteria result lines.

test_acceptance.py appends one line per criterion; the conftest terminal
summary hook replays them at the end of the pytest run so they are visible
even with output capture enabled.
"""

LINES = []
