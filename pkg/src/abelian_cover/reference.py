"""Published values for the Ceva (Z/5)^2 cover, used for cross-checks and provenance notes."""

# Rows x*phi_1 + y*phi_2 in the printed order, one line per subgroup H1..H6.
PRINTED_ROWS: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((1, 1, 1, 3, 3, 0, 0, 0, 1), (2, 2, 2, 1, 1, 0, 0, 0, 2),
     (3, 3, 3, 4, 4, 0, 0, 0, 3), (4, 4, 4, 2, 2, 0, 0, 0, 4)),
    ((1, 0, 1, 3, 0, 1, 1, 2, 1), (2, 0, 2, 1, 0, 2, 2, 4, 2),
     (3, 0, 3, 4, 0, 3, 3, 1, 3), (4, 0, 4, 2, 0, 4, 4, 3, 4)),
    ((2, 1, 2, 1, 3, 1, 1, 2, 2), (4, 2, 4, 2, 1, 2, 2, 4, 4),
     (1, 3, 1, 3, 4, 3, 3, 1, 1), (3, 4, 3, 4, 2, 4, 4, 3, 3)),
    ((3, 1, 3, 4, 3, 2, 2, 4, 3), (1, 2, 1, 3, 1, 4, 4, 3, 1),
     (4, 3, 4, 2, 4, 1, 1, 2, 4), (2, 4, 2, 1, 2, 3, 3, 1, 2)),
    ((4, 1, 4, 2, 3, 3, 3, 1, 4), (3, 2, 3, 4, 1, 1, 1, 2, 3),
     (2, 3, 2, 1, 4, 4, 4, 3, 2), (1, 4, 1, 3, 2, 2, 2, 4, 1)),
    ((0, 1, 0, 0, 3, 4, 4, 3, 0), (0, 2, 0, 0, 1, 3, 3, 1, 0),
     (0, 3, 0, 0, 4, 2, 2, 4, 0), (0, 4, 0, 0, 2, 1, 1, 2, 0)),
)

# Exponent vectors of the cyclic quotient equations z^5 = prod l_i^{k_i}.
QUOTIENT_EQUATIONS: tuple[tuple[int, ...], ...] = (
    (1, 1, 1, 3, 3, 0, 0, 0, 1),
    (1, 0, 1, 3, 0, 1, 1, 2, 1),
    (2, 1, 2, 1, 3, 1, 1, 2, 2),
    (1, 2, 1, 3, 1, 4, 4, 3, 1),
    (1, 4, 1, 3, 2, 2, 2, 4, 1),
    (0, 2, 0, 0, 1, 3, 3, 1, 0),
)

SUBGROUP_GENERATORS: tuple[tuple[int, int], ...] = (
    (0, 1), (1, 0), (4, 1), (3, 1), (2, 1), (1, 1),
)

QUOTIENT_PG: tuple[int, ...] = (1, 5, 5, 13, 11, 1)

EIGENSPACE_DIMENSIONS: tuple[tuple[int, ...], ...] = (
    (0, 1, 0, 0, 0),
    (2, 2, 1, 0, 0),
    (1, 2, 1, 1, 0),
    (4, 5, 2, 2, 0),
    (3, 3, 3, 2, 0),
    (0, 1, 0, 0, 0),
)

TOTAL_PG = 36
K_SQUARED = 333
EULER = 111

# Triple points named in the published form lists, in order of appearance.
PRINTED_POINT_NAMES: tuple[str, ...] = (
    "p349", "p789", "p168", "p147",
    "p123", "p456",
    "p159", "p348", "p267",
    "p369", "p357", "p258",
)

# Bound tables as printed for p = 5: rows j = 0..4, columns as in the header.
PRINTED_DEGREE_TABLE: dict[int, tuple[int, ...]] = {
    1: (1, 0, 0, 0, 0),
    2: (5, 3, 1, 0, 0),
    3: (8, 6, 3, 0, 0),
    4: (13, 9, 5, 1, 0),
}

PRINTED_DIVISIBILITY_TABLE: dict[int, tuple[int, ...]] = {
    1: (0, 0, 0, 0, 0),
    2: (1, 1, 0, 0, 0),
    3: (2, 1, 1, 0, 0),
    4: (3, 2, 1, 0, 0),
}

PRINTED_POINT_TABLE: dict[int, tuple[int, ...]] = {
    2: (0, 0, 0, 0, 0),
    3: (1, 0, 0, 0, 0),
    4: (2, 1, 0, 0, 0),
    5: (3, 2, 1, 0, 0),
    6: (3, 2, 1, 0, 0),
    7: (4, 3, 1, 0, 0),
    8: (5, 3, 2, 0, 0),
    9: (6, 4, 2, 0, 0),
    10: (7, 5, 3, 1, 0),
    11: (7, 5, 3, 1, 0),
    12: (8, 6, 3, 1, 0),
}

# The G4 form list states "p267 in {P1 = 0}" twice.
DUPLICATED_CONDITION = ("G4", "p267", "P1")
