"""Published label rows used as fixtures and regression data.

Rows are listed path by path from u to v (cycles: from the core, starting
with the first central edge).
"""

# 2-coloring of theta(10^[2], 8^[8]), colors 85 and 105. The long paths come
# first. The printed source repeats the label 28 in the first length-8 row;
# 38 is the only value restoring a bijection and the 85/105 alternation.
LIFT_BASE_L2_LENGTHS = (10, 10) + (8,) * 8
LIFT_BASE_L2_ROWS = (
    (1, 84, 21, 64, 41, 44, 61, 24, 81, 4),
    (2, 83, 22, 63, 42, 43, 62, 23, 82, 3),
    (7, 78, 27, 58, 47, 38, 67, 18),
    (8, 77, 28, 57, 48, 37, 68, 17),
    (9, 76, 29, 56, 49, 36, 69, 16),
    (11, 74, 31, 54, 51, 34, 71, 14),
    (13, 72, 33, 52, 53, 32, 73, 12),
    (15, 70, 35, 50, 55, 30, 75, 10),
    (19, 66, 39, 46, 59, 26, 79, 6),
    (20, 65, 40, 45, 60, 25, 80, 5),
)
LIFT_BASE_L2_AS_PRINTED_ROW3 = (7, 78, 27, 58, 47, 28, 67, 18)
LIFTED_L2_LONG_ROWS = (
    (2, 21, 64, 41, 44, 61, 24, 81, 4),
    (1, 22, 63, 42, 43, 62, 23, 82, 3),
)

PAIRED_ALL_EVEN = (2, 4, 6, 6, 10)
PAIRED_ALL_EVEN_ROWS = (
    (1, 55), (56, 2), (3, 53, 5, 51), (54, 4, 52, 6),
    (7, 49, 9, 47, 11, 45), (50, 8, 48, 10, 46, 12),
    (13, 43, 15, 41, 17, 39), (44, 14, 42, 16, 40, 18),
    (19, 37, 21, 35, 23, 33, 25, 31, 27, 29),
    (38, 20, 36, 22, 34, 24, 32, 26, 30, 28),
)
PAIRED_MIXED = (2, 4, 6, 6, 7)
PAIRED_MIXED_ROWS = (
    (1, 49), (50, 2), (3, 47, 5, 45), (48, 4, 46, 6),
    (7, 43, 9, 41, 11, 39), (44, 8, 42, 10, 40, 12),
    (13, 37, 15, 35, 17, 33), (38, 14, 36, 16, 34, 18),
    (19, 31, 21, 29, 23, 27, 25), (32, 20, 30, 22, 28, 24, 26),
)

SIZE_4M3_ROWS = ((15, 1, 14, 2, 13, 3, 12), (4, 11, 5), (8, 7, 9, 6, 10))
SIZE_4M3_FIVE_ROWS = ((15, 1), (2, 14), (13, 3, 12), (4, 11, 5), (8, 7, 9, 6, 10))

SIZE_4M_FIRST = dict(m=6, xbreaks=(1, 6), ybreaks=(13, 14, 18))
SIZE_4M_FIRST_ROWS = (
    (24, 1), (6, 19, 5, 20, 4, 21, 3, 22, 2, 23),
    (12, 13), (14, 11), (10, 15, 9, 16, 8, 17, 7, 18),
)
SIZE_4M_SECOND = dict(m=6, xbreaks=(3, 6), ybreaks=(13, 14, 16, 17, 18))
SIZE_4M_SECOND_ROWS = (
    (24, 1, 23, 2, 22, 3), (6, 19, 5, 20, 4, 21),
    (12, 13), (14, 11), (10, 15, 9, 16), (17, 8), (7, 18),
)

CYCLE_A_R3_ROWS = (
    (1, 24, 6, 19, 11, 14, 16, 9, 21, 4),
    (2, 23, 7, 18, 12, 13, 17, 8, 22, 3),
    (5, 20, 10, 15),
)
CYCLE_B_R5_ROWS = (
    (1, 44, 11, 34, 21, 24, 31, 14, 41, 4),
    (2, 43, 12, 33, 22, 23, 32, 13, 42, 3),
    (5, 40, 15, 30, 25, 20, 35, 10),
    (6, 39, 16, 29, 26, 19, 36, 9),
    (7, 38, 17, 28, 27, 18, 37, 8),
)
