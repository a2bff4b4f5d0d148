"""Shared fixtures: hand-transcribed worked examples and small helpers."""

import pytest
from hypothesis import settings

from ratab.tableaux import parse_rat

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# 13-strip tableau with three diagonals; insertion and zigzag examples use it.
INSERTION_EXAMPLE = """\
shape: 1220012020021
arrows: U@(1,8) U@(1,11) U@(2,5) L@(2,6) U@(3,4) U@(6,10) L@(9,10) L@(12,13)
"""

# 8-strip tableau used for the statistics example, and its extension.
STATS_EXAMPLE = """\
shape: 22101020
arrows: L@(1,5) U@(3,6) L@(7,8)
"""
STATS_EXAMPLE_EXTENDED = """\
shape: 122101020
arrows: U@(1,5) U@(1,9) L@(2,6) U@(4,7) L@(8,9)
"""

# extended alternative tableau of size 10 used for the AT insertion and zigzag maps
AT_EXAMPLE = """\
shape: 2220220002
arrows: U@(1,9) U@(5,8) U@(1,4) L@(5,9) U@(6,7) L@(2,4)
"""

# 15-strip tableau with four diagonals that splits into seven packed pieces
SPLIT_EXAMPLE = """\
shape: 201220200121001
arrows: U@(1,2) U@(3,6) L@(5,12) U@(7,8) L@(7,9) U@(10,13) L@(11,14) U@(12,14)
"""

# packed diagonal tableau and its straightening
STRAIGHT_BEFORE = """\
shape: 2220010202200
arrows: U@(1,5) U@(1,12) L@(1,13) U@(2,7) L@(2,12) U@(3,4) L@(3,6) U@(6,9) U@(6,13) L@(8,9) L@(10,13) L@(11,12)
"""
STRAIGHT_AFTER = """\
shape: 2220000202200
arrows: U@(1,5) U@(1,12) L@(1,13) U@(2,7) L@(2,12) U@(3,4) L@(3,6) L@(8,9) L@(10,13) L@(11,12)
"""

# corner-deletion example on the label set {2, 4, 7, 8}
CORNER_BEFORE = """\
shape: 1200
labels: 2 4 7 8
arrows: U@(2,8) U@(4,7)
"""
CORNER_AFTER = """\
shape: 120
labels: 2 4 8
arrows: U@(2,8)
"""

# Laguerre histories of the weight example
MLH_EXAMPLE = "H:0! U:0 H:0 U:1! H:2 D:0! D:0! U:0! U:1 D:1! h:0! D:0"
MLH_STAR_EXAMPLE = "H:0!a U!d H:0 U!ad H:2 D:0,1 D:0,0 U!a U!d D:1,1 h:0!a D:0,0"

# signed permutation of the phi example, with the corrected step-3 mark
PHI_SIGNED = "-9 -8 -2 4 7 -6 -5 1 3"
PHI_STEPS = "U!a U!ad h:1 H:0 U!d H:3!a D:0,2 D:1,1 D:0,0"


@pytest.fixture
def insertion_example():
    return parse_rat(INSERTION_EXAMPLE)


@pytest.fixture
def stats_example():
    return parse_rat(STATS_EXAMPLE)


@pytest.fixture
def stats_example_extended():
    return parse_rat(STATS_EXAMPLE_EXTENDED)


@pytest.fixture
def at_example():
    return parse_rat(AT_EXAMPLE)
