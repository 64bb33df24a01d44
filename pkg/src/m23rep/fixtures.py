"""Verbatim transcriptions of the published reference tables and matrices.

These rows record exactly what the source prints (markup stripped, one
misplaced math delimiter and the contributor-initials columns dropped);
the diff layer in :mod:`m23rep.reports` is where any disagreement with
freshly computed values is surfaced.  Confirmed discrepancies live in
``CONFIRMED_ERRATA`` so regressions can be told apart from known slips.
"""

from __future__ import annotations

# (exponent, expression, binary string) for X^11 .. X^100
X_POWERS = (
    (11, 'X^2+1', '00000000101'),
    (12, 'X^3+X', '00000001010'),
    (13, 'X^4+X^2', '00000010100'),
    (14, 'X^5+X^3', '00000101000'),
    (15, 'X^6+X^4', '00001010000'),
    (16, 'X^7+X^5', '00010100000'),
    (17, 'X^8+X^6', '00101000000'),
    (18, 'X^9+X^7', '01010000000'),
    (19, 'X^10+X^8', '10100000000'),
    (20, 'X^9+X^2+1', '01000000101'),
    (21, 'X^10+X^3+X', '10000001010'),
    (22, 'X^4+1', '00000010001'),
    (23, 'X^5+X', '00000100010'),
    (24, 'X^6+X^2', '00001000100'),
    (25, 'X^7+X^3', '00010001000'),
    (26, 'X^8+X^4', '00100010000'),
    (27, 'X^9+X^5', '01000100000'),
    (28, 'X^10+X^6', '10001000000'),
    (29, 'X^7+X^2+1', '00010000101'),
    (30, 'X^8+X^3+X', '00100001010'),
    (31, 'X^9+X^4+X^2', '01000010100'),
    (32, 'X^10+X^5+X^3', '10000101000'),
    (33, 'X^6+X^4+X^2+1', '00001010101'),
    (34, 'X^7+X^5+X^3+X', '00010101010'),
    (35, 'X^8+X^6+X^4+X^2', '00101010100'),
    (36, 'X^9+X^7+X^5+X^3', '01010101000'),
    (37, 'X^10+X^8+X^6+X^4', '10101010000'),
    (38, 'X^9+X^7+X^5+X^2+1', '01010100101'),
    (39, 'X^10+X^8+X^6+X^3+X', '10101001010'),
    (40, 'X^9+X^7+X^4+1', '01010010001'),
    (41, 'X^10+X^8+X^5+X', '10100100010'),
    (42, 'X^9+X^6+1', '01001000001'),
    (43, 'X^10+X^7+X', '10010000010'),
    (44, 'X^8+1', '00100000001'),
    (45, 'X^9+X', '01000000010'),
    (46, 'X^10+X^2', '10000000100'),
    (47, 'X^3+X^2+1', '00000001101'),
    (48, 'X^4+X^3+X', '00000011010'),
    (49, 'X^5+X^4+X^2', '00000110100'),
    (50, 'X^6+X^5+X^3', '00001101000'),
    (51, 'X^7+X^6+X^4', '00011010000'),
    (52, 'X^8+X^7+X^5', '00110100000'),
    (53, 'X^9+X^8+X^6', '01101000000'),
    (54, 'X^10+X^9+X^7', '11010000000'),
    (55, 'X^10+X^8+X^2+1', '10100000101'),
    (56, 'X^9+X^3+X^2+X+1', '01000001111'),
    (57, 'X^10+X^4+X^3+X^2+X', '10000011110'),
    (58, 'X^5+X^4+X^3+1', '00000111001'),
    (59, 'X^6+X^5+X^4+X', '00001110010'),
    (60, 'X^7+X^6+X^5+X^2', '00011100100'),
    (61, 'X^8+X^7+X^6+X^3', '00111001000'),
    (62, 'X^9+X^8+X^7+X^4', '01110010000'),
    (63, 'X^10+X^9+X^8+X^5', '11100100000'),
    (64, 'X^10+X^9+X^6+X^2+1', '11001000101'),
    (65, 'X^10+X^7+X^3+X^2+X+1', '10010001111'),
    (66, 'X^8+X^4+X^3+X+1', '00100011011'),
    (67, 'X^9+X^5+X^4+X^2+X', '01000110110'),
    (68, 'X^10+X^6+X^5+X^3+X^2', '10001101100'),
    (69, 'X^7+X^6+X^4+X^3+X^2+1', '00011011101'),
    (70, 'X^8+X^7+X^5+X^4+X^3+X', '00110111010'),
    (71, 'X^9+X^8+X^6+X^5+X^4+X^2', '01101110100'),
    (72, 'X^10+X^9+X^7+X^6+X^5+X^3', '11011101000'),
    (73, 'X^10+X^8+X^7+X^6+X^4+X^2+1', '10111010101'),
    (74, 'X^9+X^8+X^7+X^5+X^3+X^2+X+1', '01110101111'),
    (75, 'X^10+X^9+X^8+X^6+X^4+X^3+X^2+X', '11101011110'),
    (76, 'X^10+X^9+X^7+X^5+X^4+X^3+1', '11010111001'),
    (77, 'X^10+X^8+X^6+X^5+X^4+X^2+X+1', '10101110111'),
    (78, 'X^9+X^7+X^6+X^5+X^3+X+1', '01011101011'),
    (79, 'X^10+X^8+X^7+X^6+X^4+X^2+X', '10111010110'),
    (80, 'X^9+X^8+X^7+X^5+X^3+1', '01110101001'),
    (81, 'X^10+X^9+X^8+X^6+X^4+X', '11101010010'),
    (82, 'X^10+X^9+X^7+X^5+1', '11010100001'),
    (83, 'X^10+X^8+X^6+X^2+X+1', '10101000111'),
    (84, 'X^9+X^7+X^3+X+1', '01010001011'),
    (85, 'X^10+X^8+X^4+X^2+X', '10100010110'),
    (86, 'X^9+X^5+X^3+1', '01000101001'),
    (87, 'X^10+X^6+X^4+X', '10001010010'),
    (88, 'X^7+X^5+1', '00010100001'),
    (89, 'X^8+X^6+X', '00101000010'),
    (90, 'X^9+X^7+X^2', '01010000100'),
    (91, 'X^10+X^8+X^3', '10100001000'),
    (92, 'X^9+X^4+X^2+1', '01000010101'),
    (93, 'X^10+X^5+X^3+X', '10000101010'),
    (94, 'X^6+X^4+1', '00001010001'),
    (95, 'X^7+X^5+X', '00010100010'),
    (96, 'X^8+X^6+X^2', '00101000100'),
    (97, 'X^9+X^7+X^3', '01010001000'),
    (98, 'X^10+X^8+X^4', '10100010000'),
    (99, 'X^9+X^5+X^2+1', '01000100101'),
    (100, 'X^10+X^6+X^3+X', '10001001010'),
)

# (exponent, expression, binary string) for the subgroup generator powers a^1 .. a^24
ALPHA_POWERS = (
    (1, 'X^8+X^6+X', '00101000010'),
    (2, 'X^7+X^5+X^3+X^2+X', '00010101110'),
    (3, 'X^10+X^7+X^3+X^2', '10010001100'),
    (4, 'X^10+X^6+X^5+X^4+X^3+X^2', '10001111100'),
    (5, 'X^8+X^7+X^6+X^5+1', '00111100001'),
    (6, 'X^9+X^6+X^5+X^4+X^3+X^2+1', '01001111101'),
    (7, 'X^10+X^9+X^8+X^7+X^4+X^2+X', '11110010110'),
    (8, 'X^10+X^9+X^8+X^6+X^4+X^3+X^2+X+1', '11101011111'),
    (9, 'X^10+X^8+X^7+X^6+X^5+X^3+X^2+X', '10111101110'),
    (10, 'X^10+X^7+X+1', '10010000011'),
    (11, 'X^7+X^5+X^2+X+1', '00010100111'),
    (12, 'X^10+X^9+X^8+X^7+X^6+X^4+X^3+X+1', '11111011011'),
    (13, 'X^8+X^7+X^5+X', '00110100010'),
    (14, 'X^8+X^4+X^3+1', '00100011001'),
    (15, 'X^10+X^8+X^7+X^6+X^5+X^4+X^2+1', '11010011110'),
    (16, 'X^8+X^6+X^5+X^4+X^3+X', '00101111010'),
    (17, 'X^10+X^9+X^7+X^6', '11011000000'),
    (18, 'X^10+X^9+X^7+X^6+X^4+X+1', '11011010011'),
    (19, 'X^8+X^5+X^4+X^3+X^2+X+1', '00100111111'),
    (20, 'X^9+X^5+X^3', '01000101000'),
    (21, 'X^10+X^9+X^8+X^6+X^4+X^2', '11101010100'),
    (22, 'X^10+X^5+X^4+X^3+X^2+1', '10000111101'),
    (23, '1', '00000000001'),
    (24, 'X^8+X^6+X', '00101000010'),
)

# (beta exponent, matching alpha exponent, alpha exponent, matching beta exponent)
CROSS_TABLE = (
    (1, 5, 1, 14),
    (2, 10, 2, 5),
    (3, 15, 3, 19),
    (4, 20, 4, 10),
    (5, 2, 5, 1),
    (6, 7, 6, 15),
    (7, 12, 7, 6),
    (8, 17, 8, 20),
    (9, 22, 9, 11),
    (10, 4, 10, 2),
    (11, 9, 11, 16),
    (12, 14, 12, 7),
    (13, 19, 13, 21),
    (14, 1, 14, 12),
    (15, 6, 15, 3),
    (16, 11, 16, 17),
    (17, 16, 17, 8),
    (18, 21, 18, 22),
    (19, 3, 19, 13),
    (20, 8, 20, 4),
    (21, 13, 21, 18),
    (22, 18, 22, 9),
    (23, 23, 23, 23),
)

# (exponent, expression in basis A) for X^0 .. X^10
X_IN_A = (
    (0, '1'),
    (1, 'a10+a5+a3+a2+a'),
    (2, 'a9+a7+a6+1'),
    (3, 'a9+a7+a6+a5+a2+a'),
    (4, 'a8+a6+a5+a4+a2+1'),
    (5, 'a9+a3+a'),
    (6, 'a10+a8+a6+a5'),
    (7, 'a10+a9+a2+a+1'),
    (8, 'a8+a6+a3+a2'),
    (9, 'a10+a9+a6+a5+a4+a3+1'),
    (10, 'a10+a9+a5+a3'),
)

# (exponent, expression in basis A) for a^11 .. a^23
ALPHA_IN_A = (
    (11, 'a9+a7+a6+a5+a+1'),
    (12, 'a10+a8+a7+a6+a2+a'),
    (13, 'a8+a6+a5+a3+a2+a+1'),
    (14, 'a9+a7+a6+a4+a3+a2+a'),
    (15, 'a10+a8+a7+a5+a4+a3+a2'),
    (16, 'a8+a7+a4+a3+a+1'),
    (17, 'a9+a8+a5+a4+a2+a'),
    (18, 'a10+a9+a6+a5+a3+a2'),
    (19, 'a10+a9+a5+a4+a3+a+1'),
    (20, 'a10+a9+a7+a4+a2+1'),
    (21, 'a10+a9+a8+a7+a6+a3+1'),
    (22, 'a10+a8+a6+a5+a4+1'),
    (23, '1'),
)

# 11x11 matrices, line i column j = entry (i, j)
MATRIX_GA = (
    "01000000000",
    "00010000010",
    "10111000110",
    "01000000110",
    "10100000010",
    "10000100100",
    "00001000110",
    "00101001010",
    "10001010000",
    "10100000110",
    "00101000101",
)

MATRIX_FA = (
    "00000010100",
    "00000011110",
    "00000001111",
    "00000000111",
    "00000000011",
    "10000010101",
    "01000011110",
    "00100011011",
    "00010001101",
    "00001010010",
    "00000101001",
)

MATRIX_F_CHI = (
    "10000110000",
    "00011101100",
    "00100100010",
    "00010100010",
    "00010110011",
    "10001101101",
    "11000001100",
    "11110001110",
    "11101000011",
    "01110000011",
    "00111100101",
)

MATRIX_G_CHI = (
    "00011110000",
    "01000101100",
    "00001100010",
    "01010100010",
    "00111110011",
    "00001101101",
    "10011001100",
    "10010001110",
    "00100000011",
    "11101000011",
    "10110100101",
)

MATRICES = {
    "matrix-fA": MATRIX_FA,
    "matrix-gA": MATRIX_GA,
    "matrix-fChi": MATRIX_F_CHI,
    "matrix-gChi": MATRIX_G_CHI,
}

# Generator permutations of the 23 subgroup exponents (f is the full cycle
# j -> j+1) and the candidate 24-point involution for the extension test.
G_CYCLES = "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"
H_CYCLES = "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"

# The twelve image claims g(b^j) = b^k printed alongside the worked
# extension checks, in source order.
G_BETA_IMAGES = (
    (16, 15), (7, 9), (21, 16), (12, 23), (3, 17), (17, 10),
    (8, 18), (22, 21), (13, 14), (4, 13), (18, 11), (9, 3),
)

# Image of a^11 under the non-extendable transposition example, printed as
# a sum of basis-A elements that lies outside the subgroup C.
TRANSPOSITION_WITNESS_EXPRESSION = "a9+a7+a6+a5+a2+1"

# Cells where recomputation disagrees with the transcription.  Element-order
# probes side with the computed values: the transcribed [g]_A, [f]_chi and
# [g]_chi have no finite small order, while the computed matrices have the
# orders their restrictions to C force (23 for f, 5 for g).  The alpha-powers
# binary cell for a^15 contradicts that row's own expression column.
CONFIRMED_ERRATA = {
    "alpha-powers": ("alpha-powers[15].binary",),
    "matrix-gA": (
        "matrix-gA[0,1]", "matrix-gA[0,2]", "matrix-gA[1,0]", "matrix-gA[1,3]", "matrix-gA[1,4]",
    ),
    "matrix-fChi": (
        "matrix-fChi[0,3]", "matrix-fChi[0,4]", "matrix-fChi[1,1]", "matrix-fChi[1,3]",
        "matrix-fChi[1,6]", "matrix-fChi[1,8]", "matrix-fChi[2,3]", "matrix-fChi[2,4]",
        "matrix-fChi[2,5]", "matrix-fChi[2,7]", "matrix-fChi[2,8]", "matrix-fChi[2,9]",
        "matrix-fChi[3,4]", "matrix-fChi[3,8]", "matrix-fChi[4,3]", "matrix-fChi[4,4]",
        "matrix-fChi[5,4]", "matrix-fChi[5,6]", "matrix-fChi[5,8]", "matrix-fChi[6,6]",
        "matrix-fChi[7,3]", "matrix-fChi[8,3]", "matrix-fChi[8,4]", "matrix-fChi[8,8]",
        "matrix-fChi[9,4]", "matrix-fChi[10,8]",
    ),
    "matrix-gChi": (
        "matrix-gChi[0,4]", "matrix-gChi[0,6]", "matrix-gChi[0,9]", "matrix-gChi[0,10]",
        "matrix-gChi[1,1]", "matrix-gChi[1,4]", "matrix-gChi[1,6]", "matrix-gChi[2,3]",
        "matrix-gChi[2,5]", "matrix-gChi[2,6]", "matrix-gChi[2,7]", "matrix-gChi[2,9]",
        "matrix-gChi[2,10]", "matrix-gChi[3,3]", "matrix-gChi[3,4]", "matrix-gChi[3,6]",
        "matrix-gChi[3,7]", "matrix-gChi[3,8]", "matrix-gChi[3,9]", "matrix-gChi[4,6]",
        "matrix-gChi[4,7]", "matrix-gChi[5,1]", "matrix-gChi[5,4]", "matrix-gChi[5,6]",
        "matrix-gChi[5,8]", "matrix-gChi[5,10]", "matrix-gChi[6,1]", "matrix-gChi[6,3]",
        "matrix-gChi[6,6]", "matrix-gChi[6,8]", "matrix-gChi[6,10]", "matrix-gChi[7,6]",
        "matrix-gChi[7,8]", "matrix-gChi[7,10]", "matrix-gChi[8,1]", "matrix-gChi[8,4]",
        "matrix-gChi[8,5]", "matrix-gChi[8,7]", "matrix-gChi[8,8]", "matrix-gChi[8,9]",
        "matrix-gChi[8,10]", "matrix-gChi[9,3]", "matrix-gChi[9,8]", "matrix-gChi[9,10]",
        "matrix-gChi[10,6]", "matrix-gChi[10,7]", "matrix-gChi[10,8]",
    ),
}
