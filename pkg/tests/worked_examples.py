"""Frozen worked examples shared across the test modules.

The tableau below lives on (5,5,4,3)/(4,3,2); inserting 7 bumps along
(4,2), (3,3) and comes to rest at (2,3), and deleting at (3,3) emits 5.
The picture LAMBDA_MAP encodes the same data through the reading that
restricts the row reading of (5,5,4,2,1)/(3,2,1) to the smaller diagram
(5,5,4,2,1)/(3,3,2,1).
"""

T_OUTER = (5, 5, 4, 3)
T_INNER = (4, 3, 2)
T_ENTRIES = {
    (4, 1): 1, (4, 2): 5, (4, 3): 10,
    (3, 3): 3, (3, 4): 11,
    (2, 4): 8, (2, 5): 9,
    (1, 5): 6,
}

E7T_INNER = (4, 2, 2)
E7T_ENTRIES = {
    (4, 1): 1, (4, 2): 7, (4, 3): 10,
    (3, 3): 5, (3, 4): 11,
    (2, 3): 3, (2, 4): 8, (2, 5): 9,
    (1, 5): 6,
}

F33T_INNER = (4, 3, 3)
F33T_ENTRIES = {
    (4, 1): 1, (4, 2): 3, (4, 3): 10,
    (3, 4): 11,
    (2, 4): 8, (2, 5): 9,
    (1, 5): 6,
}

BIG_OUTER = (5, 5, 4, 2, 1)
BIG_INNER = (3, 2, 1)
ROW_READING_BIG = {
    (5, 1): 1,
    (4, 1): 2, (4, 2): 3,
    (3, 2): 4, (3, 3): 5, (3, 4): 6,
    (2, 3): 7, (2, 4): 8, (2, 5): 9,
    (1, 4): 10, (1, 5): 11,
}

TARGET_INNER = (3, 3, 2, 1)

LAMBDA_MAP = {
    (4, 1): (5, 1),
    (3, 3): (4, 2),
    (4, 2): (3, 3),
    (1, 5): (3, 4),
    (2, 4): (2, 4),
    (2, 5): (2, 5),
    (4, 3): (1, 4),
    (3, 4): (1, 5),
}

# after inserting target cell (2,3): source (5,5,4,3)/(4,2,2) onto (5,5,4,2,1)/(3,2,2,1)
E23_LAMBDA_MAP = {
    (4, 1): (5, 1),
    (2, 3): (4, 2),
    (3, 3): (3, 3),
    (1, 5): (3, 4),
    (4, 2): (2, 3),
    (2, 4): (2, 4),
    (2, 5): (2, 5),
    (4, 3): (1, 4),
    (3, 4): (1, 5),
}

# after deleting source cell (3,3): source (5,5,4,3)/(4,3,3) onto (5,5,4,2,1)/(3,3,3,1)
F33_LAMBDA_MAP = {
    (4, 1): (5, 1),
    (4, 2): (4, 2),
    (1, 5): (3, 4),
    (2, 4): (2, 4),
    (2, 5): (2, 5),
    (4, 3): (1, 4),
    (3, 4): (1, 5),
}

# the seven pictures decomposing (5,3,1,1) tensor the leg-6 hook, as
# reading-composed tableaux keyed by overlap; the first two carry the
# balanced cocorner (1,3), the rest balanced corners (1,4) / (1,3)
PH_LAMBDA = (5, 3, 1, 1)
PH_MU = (4, 3, 3)
PH_TABLEAUX = (
    ((3, 1), {(4, 1): 3, (3, 2): 5, (3, 3): 6, (2, 2): 2, (2, 3): 4, (1, 3): 1}),
    ((3, 1), {(4, 1): 2, (3, 2): 5, (3, 3): 6, (2, 2): 3, (2, 3): 4, (1, 3): 1}),
    ((3, 1), {(4, 1): 5, (3, 2): 3, (3, 3): 6, (2, 2): 2, (2, 3): 4, (1, 3): 1}),
    ((2, 2), {(4, 1): 4, (3, 1): 3, (3, 2): 5, (3, 3): 6, (2, 3): 2, (1, 3): 1}),
    ((2, 2), {(4, 1): 4, (3, 1): 2, (3, 2): 5, (3, 3): 6, (2, 3): 3, (1, 3): 1}),
    ((2, 1, 1), {(4, 1): 4, (3, 1): 2, (3, 2): 5, (3, 3): 6, (2, 2): 1, (2, 3): 3}),
    ((2, 1, 1), {(4, 1): 4, (3, 1): 1, (3, 2): 5, (3, 3): 6, (2, 2): 2, (2, 3): 3}),
)
PH_BALANCED_COCORNERS = ((1, 3), (1, 3), None, None, None, None, None)
PH_BALANCED_CORNERS = (None, None, (1, 4), (1, 3), (1, 3), (1, 3), (1, 3))
