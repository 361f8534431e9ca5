"""Golden instances shared by the test modules.

Order-3 matrices use the symbols a, b, c as 0, 1, 2.
"""
from quadrecon.tables import CayleyMatrix, PartialMatrix

ABC = ("a", "b", "c")
_ = None

FIRST_ROW_ONLY = PartialMatrix([[0, 1, 2], [_, _, _], [_, _, _]], ABC)
CYCLIC_SYMMETRIC = CayleyMatrix([[0, 1, 2], [1, 2, 0], [2, 0, 1]], ABC)
CYCLIC_SKEW = CayleyMatrix([[0, 1, 2], [2, 0, 1], [1, 2, 0]], ABC)
CORNER_ONLY = PartialMatrix([[0, _, _], [_, _, _], [_, _, _]], ABC)
REVERSED_SYMMETRIC = CayleyMatrix([[0, 2, 1], [2, 1, 0], [1, 0, 2]], ABC)
# headline a b c, sideline a c b
LABELED_HEADLINE = (0, 1, 2)
LABELED_SIDELINE = (0, 2, 1)

C3_STUCK_HOLES = [(1, 0), (2, 1)]
C4_AWKWARD_HOLES = [(1, 3), (3, 1), (3, 3)]

C3_STANDARD = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
C4_STANDARD = ((0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2))

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list = []
