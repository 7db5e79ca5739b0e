import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

FIVE = [(3, 0), (5, 0), (0, 1), (1, 3), (2, 3)]
FIVE_GAPS = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (4, 0), (4, 1), (4, 2),
               (7, 0), (7, 1), (7, 2)]
DEGENERATE = [(2, 0), (1, 1), (0, 2)]
TWELVE = [(18, 9), (18, 3), (4, 1), (20, 8), (23, 10), (8, 3), (11, 5), (11, 2), (10, 3),
          (14, 3), (7, 2), (7, 3)]
TEN = [(3, 0), (4, 1), (4, 2), (5, 2), (7, 0), (7, 3), (7, 4), (7, 5), (8, 1), (9, 2)]
GLUE_1 = [(2, 0, 0), (3, 0, 0), (0, 1, 0), (1, 1, 0)]
GLUE_2 = [(1, 1, 0), (1, 1, 1), (0, 0, 2), (0, 0, 3)]

CRITERIA = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA):
            terminalreporter.write_line(line)
