"""Golden data: the published L-polynomial and point-count tables.

L-polynomials are recorded ascending as (1, a, p) triples; the genus-2 column
is a pair of such factors (duplicates kept when the square is printed).  The
duplicated row of the source table is stored once.
"""

# p -> (L12, (factor, factor), L1234, p_rank)
LPOLY_TABLE = {
    5: ((1, -1, 5), ((1, -1, 5), (1, 3, 5)), (1, -1, 5), 4),
    7: ((1, 0, 7), ((1, 0, 7), (1, 4, 7)), (1, 0, 7), 1),
    11: ((1, -4, 11), ((1, -4, 11), (1, 0, 11)), (1, -4, 11), 3),
    13: ((1, 5, 13), ((1, 1, 13), (1, 5, 13)), (1, 5, 13), 4),
    17: ((1, -5, 17), ((1, -5, 17), (1, 3, 17)), (1, -5, 17), 4),
    19: ((1, -8, 19), ((1, -8, 19), (1, 4, 19)), (1, -8, 19), 4),
    23: ((1, -4, 23), ((1, -4, 23), (1, 0, 23)), (1, -4, 23), 3),
    29: ((1, 3, 29), ((1, -9, 29), (1, 3, 29)), (1, 3, 29), 4),
    31: ((1, 4, 31), ((1, 4, 31), (1, 4, 31)), (1, 4, 31), 4),
    37: ((1, -3, 37), ((1, 1, 37), (1, -3, 37)), (1, -3, 37), 4),
    41: ((1, -6, 41), ((1, -6, 41), (1, -6, 41)), (1, -6, 41), 4),
    43: ((1, -4, 43), ((1, -8, 43), (1, -4, 43)), (1, -4, 43), 4),
    47: ((1, -12, 47), ((1, -12, 47), (1, 12, 47)), (1, -12, 47), 4),
    53: ((1, -10, 53), ((1, -10, 53), (1, 6, 53)), (1, -10, 53), 4),
    59: ((1, 8, 59), ((1, 0, 59), (1, 8, 59)), (1, 8, 59), 3),
    61: ((1, 5, 61), ((1, 1, 61), (1, 5, 61)), (1, 5, 61), 4),
    67: ((1, -8, 67), ((1, -8, 67), (1, 4, 67)), (1, -8, 67), 4),
    71: ((1, 16, 71), ((1, 12, 71), (1, 16, 71)), (1, 16, 71), 4),
    73: ((1, 5, 73), ((1, -11, 73), (1, 5, 73)), (1, 5, 73), 4),
    79: ((1, -4, 79), ((1, -4, 79), (1, 16, 79)), (1, -4, 79), 4),
    83: ((1, 4, 83), ((1, 4, 83), (1, 12, 83)), (1, 4, 83), 4),
    89: ((1, 3, 89), ((1, 3, 89), (1, 3, 89)), (1, 3, 89), 4),
    97: ((1, -2, 97), ((1, -2, 97), (1, -2, 97)), (1, -2, 97), 4),
    101: ((1, 6, 101), ((1, 6, 101), (1, 6, 101)), (1, 6, 101), 4),
    103: ((1, -4, 103), ((1, -4, 103), (1, 4, 103)), (1, -4, 103), 4),
}

# p -> (lower bound, #C(F_p), upper bound)
POINTS_TABLE = {
    5: (-10, 6, 22),
    7: (-12, 12, 28),
    11: (-12, 0, 36),
    13: (-14, 30, 42),
    17: (-14, 6, 50),
    19: (-12, 0, 52),
    23: (-12, 12, 60),
    29: (-10, 30, 70),
    31: (-12, 48, 76),
    37: (-10, 30, 86),
    41: (-6, 18, 90),
    43: (-8, 24, 96),
    47: (-4, 24, 100),
    53: (-2, 30, 110),
    59: (0, 84, 120),
    61: (2, 78, 122),
    67: (4, 48, 132),
    71: (8, 132, 136),
    73: (6, 78, 142),
    79: (12, 84, 148),
    83: (12, 108, 156),
    89: (18, 102, 162),
    97: (22, 90, 174),
    101: (22, 126, 182),
    103: (24, 96, 184),
}

TABLE_PRIMES = sorted(LPOLY_TABLE)

# primes where the two elliptic pieces of the genus-2 quotient are isogenous
ISOGENOUS_FACTOR_PRIMES = {31, 41, 89, 97, 101}

# published Igusa invariants of the genus-2 quotient and the absolute triple
IGUSA_VALUES = (-138240, 234150912, -448888946688, -12999674453557248)
ABSOLUTE_VALUES = ("2823/1600", "2597331/128000", "6561/52428800000")
