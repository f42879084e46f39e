"""Published tables for the three worked families, used for cross-checks.

Ratios are stored as ``(gained, lost)`` lists of integer-cleared factors
``(a, c)`` meaning ``a*s + c``.  A string value names another row whose
b-function is claimed to be equal.  Two printed polynomials are known to
lose a ``y`` factor; ``TYPO_FIXES`` holds the corrected text.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

Factor = Tuple[int, int]
Ratio = Union[Tuple[List[Factor], List[Factor]], str]

POLYNOMIALS: Dict[Tuple[int, int], Dict[int, str]] = {
    (4, 9): {
        10: "y^4 - 2*x^5*y^2 - 4*x^7*y - x^9 + x^10",
        11: "y^4 - 4*x^5*y^2 - x^9 + 2*x^10 - x^11",
        14: "y^4 - 2*x^7*y^2 - 4*x^8*y - x^9 + x^14",
        15: "y^4 - 4*x^6*y^2 - x^9 + 2*x^12 - x^15",
        19: "y^4 - 4*x^7*y^2 - x^9 + 2*x^14 - x^19",
        23: "y^4 - 4*x^8*y^2 - x^9 + 2*x^16 - x^23",
    },
    (5, 6): {
        7: "y^5 - 5*x^4*y^2 - 5*x^5*y - x^6 - x^7",
        8: "y^5 - 5*x^4*y^2 - 5*x^6*y - x^6 - x^8",
        9: "y^5 - 5*x^3*y^3 + 5*x^6*y - x^6 - x^9",
        13: "y^5 - 5*x^5*y^2 - 5*x^9*y - x^6 - x^13",
        14: "y^5 - 5*x^4*y^3 + 5*x^8*y - x^6 - x^14",
        19: "y^5 - 5*x^5*y^3 + 5*x^10 - x^6 - x^19",
    },
    (5, 7): {
        8: "y^5 - 5*x^3*y^3 + 5*x^6*y - x^7 - x^8",
        9: "y^5 - 5*x^5*y^2 - 5*x^6*y - x^7 - x^9",
        11: "y^5 - 5*x^5*y^2 - 5*x^8*y - x^7 - x^11",
        13: "y^5 - 5*x^4*y^3 + 5*x^8*y - x^7 - x^13",
        16: "y^5 - 5*x^6*y^2 - 5*x^11 - x^7 - x^16",
        18: "y^5 - 5*x^5*y^3 + 5*x^10*y - x^7 - x^18",
        23: "y^5 - 5*x^6*y^3 + 5*x^12*y - x^7 - x^23",
    },
}

TYPO_FIXES: Dict[Tuple[int, int], Dict[int, str]] = {
    (5, 6): {19: "y^5 - 5*x^5*y^3 + 5*x^10*y - x^6 - x^19"},
    (5, 7): {16: "y^5 - 5*x^6*y^2 - 5*x^11*y - x^7 - x^16"},
}

GAPS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (4, 9): (10, 11, 14, 15, 19, 23),
    (5, 6): (7, 8, 9, 13, 14, 19),
    (5, 7): (8, 9, 11, 13, 16, 18, 23),
}

# keyed by r, with None for the monomial curve
TJURINA: Dict[Tuple[int, int], Dict[Optional[int], int]] = {
    (4, 9): {None: 24, 10: 21, 11: 21, 14: 23, 15: 22, 19: 23, 23: 24},
    (5, 6): {None: 20, 7: 18, 8: 18, 9: 18, 13: 20, 14: 19, 19: 20},
    (5, 7): {None: 24, 8: 21, 9: 22, 11: 22, 13: 22, 16: 24, 18: 23, 23: 24},
}

B0: Dict[Tuple[int, int], List[Factor]] = {
    (4, 9): [
        (36, 13), (36, 17), (36, 25), (36, 29), (36, 31), (36, 35),
        (36, 37), (36, 41), (36, 43), (36, 47), (36, 55), (36, 59),
        (18, 11), (18, 13), (18, 17), (18, 19), (18, 23), (18, 25),
        (12, 7), (12, 11), (12, 13), (12, 17), (6, 5), (6, 7), (1, 1),
    ],
    (5, 6): [
        (30, 11), (30, 17), (30, 23), (30, 29), (30, 31), (30, 37),
        (30, 43), (30, 49), (15, 8), (15, 11), (15, 13), (15, 14),
        (15, 16), (15, 17), (15, 19), (15, 22), (10, 7), (10, 9),
        (10, 11), (10, 13), (1, 1),
    ],
    (5, 7): [
        (35, 12), (35, 17), (35, 19), (35, 22), (35, 24), (35, 26),
        (35, 27), (35, 29), (35, 31), (35, 32), (35, 33), (35, 34),
        (35, 36), (35, 37), (35, 38), (35, 39), (35, 41), (35, 43),
        (35, 44), (35, 46), (35, 48), (35, 51), (35, 53), (35, 58), (1, 1),
    ],
}

RATIOS: Dict[Tuple[int, int], Dict[int, Ratio]] = {
    (4, 9): {
        10: ([(36, 19), (36, 23), (18, 7), (12, 5)], [(36, 55), (36, 59), (18, 25), (12, 17)]),
        11: ([(36, 19), (36, 23), (12, 5)], [(36, 55), (36, 59), (12, 17)]),
        14: ([(36, 23)], [(36, 59)]),
        15: ([(36, 19), (36, 23)], [(36, 55), (36, 59)]),
        19: "b_14",
        23: "b_0",
    },
    (5, 6): {
        7: ([(30, 13), (30, 19), (15, 7)], [(30, 43), (30, 49), (15, 22)]),
        8: ([(30, 13), (30, 19)], [(30, 43), (30, 49)]),
        9: ([(30, 19), (15, 7)], [(30, 49), (15, 22)]),
        13: "b_0",
        14: ([(30, 19)], [(30, 49)]),
        19: "b_0",
    },
    (5, 7): {
        8: ([(35, 13), (35, 18), (35, 23)], [(35, 48), (35, 53), (35, 58)]),
        9: ([(35, 16), (35, 18), (35, 23)], [(35, 51), (35, 53), (35, 58)]),
        11: ([(35, 16), (35, 23)], [(35, 51), (35, 58)]),
        13: ([(35, 18), (35, 23)], [(35, 53), (35, 58)]),
        16: "b_0",
        18: ([(35, 23)], [(35, 58)]),
        23: "b_0",
    },
}

# families whose displayed ratios omit the explicit "b_0(s)" prefix
PREFIX_OMITTED = {(5, 7)}
