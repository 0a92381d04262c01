"""Frozen golden values for the (2,3) moduli space of the 3-Kronecker
quiver with stability parameter (3,-2) and twist (1,-1)."""

from fractions import Fraction as F

# Per unstable stratum: Harder-Narasimhan type, one-parameter-subgroup
# blocks per vertex, descended U1 and U2 weight rows, det U1 weight, eta.
STRATUM_TABLE = {
    ((1, 1), (1, 2)): {
        "one_ps": (((3, 1), (-2, 1)), ((3, 1), (-2, 2))),
        "u1": (5, 0), "u2": (5, 0, 0), "det_u1": 5, "eta": 15,
    },
    ((2, 2), (0, 1)): {
        "one_ps": (((1, 2),), ((1, 2), (-4, 1))),
        "u1": (5, 5), "u2": (5, 5, 0), "det_u1": 10, "eta": 20,
    },
    ((2, 1), (0, 2)): {
        "one_ps": (((4, 2),), ((4, 1), (-6, 2))),
        "u1": (20, 20), "u2": (20, 10, 10), "det_u1": 40, "eta": 100,
    },
    ((1, 0), (1, 3)): {
        "one_ps": (((12, 1), (-3, 1)), ((-3, 3),)),
        "u1": (30, 15), "u2": (15, 15, 15), "det_u1": 45, "eta": 120,
    },
    ((1, 0), (1, 2), (0, 1)): {
        "one_ps": (((9, 1), (-1, 1)), ((-1, 2), (-6, 1))),
        "u1": (25, 15), "u2": (15, 15, 10), "det_u1": 40, "eta": 100,
    },
    ((1, 0), (1, 1), (0, 2)): {
        "one_ps": (((6, 1), (1, 1)), ((1, 1), (-4, 2))),
        "u1": (20, 15), "u2": (15, 10, 10), "det_u1": 35, "eta": 90,
    },
    ((2, 0), (0, 3)): {
        "one_ps": (((3, 2),), ((-2, 3),)),
        "u1": (15, 15), "u2": (10, 10, 10), "det_u1": 30, "eta": 90,
    },
}

HN_TYPES_23 = sorted(
    list(STRATUM_TABLE) + [((2, 3),)],
    key=lambda tau: tuple(x for part in tau for x in part),
)

# Top intersection numbers against the point class c3^2.
INTERSECTION_NUMBERS = {
    "c1^6": 57, "c1^4*c2": 27, "c1^4*d2": 18, "c1^3*c3": 5,
    "c1^2*c2^2": 14, "c1^2*d2^2": 6, "c1^2*c2*d2": 9, "c1*c3*d2": 2,
    "c1*c2*c3": 3, "c2^3": 9, "c2^2*d2": 5, "c2*d2^2": 3,
    "c3^2": 1, "d2^3": 2,
}

# Chern character rows in basis order
# ([Y], c1, c1^2, c2, d2, c1*c2, c1*d2, c3, c2^2, c2*d2, d2^2, c2*c3, c3^2).
CH_ROWS = {
    "U2": (3, -1, F(1, 2), -1, 0, F(1, 2), F(-2, 3), 0,
           F(1, 8), F(-7, 24), F(1, 8), F(-1, 180), 0),
    "sl(U1*)": (3, 0, 1, 0, -4, 0, 0, 0,
                F(-1, 4), F(3, 4), F(-5, 12), 0, F(1, 360)),
    "O": (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "U2*": (3, 1, F(1, 2), -1, 0, F(-1, 2), F(2, 3), 0,
            F(1, 8), F(-7, 24), F(1, 8), F(1, 180), 0),
    "U1*": (2, 1, F(1, 2), 0, -1, 0, F(1, 6), F(-1, 2),
            F(-1, 8), F(3, 8), F(-7, 24), F(-1, 120), F(-1, 720)),
    "U2(1)": (3, 2, 1, -1, 0, F(-1, 2), F(4, 3), F(-3, 2),
              F(-1, 2), F(19, 12), F(-5, 4), F(-11, 360), F(-1, 240)),
    "O(1)": (1, 1, F(1, 2), 0, 0, 0, F(2, 3), F(-1, 2),
             F(-1, 8), F(3, 8), F(1, 8), F(19, 120), F(19, 240)),
    "U1*xU2(1)": (6, 7, F(11, 2), -2, -3, -2, F(55, 6), F(-21, 2),
                  F(-43, 8), F(391, 24), F(-83, 8), F(89, 360), F(53, 240)),
}

# chi values certified elsewhere in the development.
CHI_VALUES = {
    "O(0)": 1,
    "dual(U2)": 6,
    "dual(U1)": 8,
    "tensor(U2,dual(U1))": 3,
    "tensor(dual(U2),dual(U2))": 39,
    "tensor(dual(U2),dual(U1))": 48,
    "tensor(sl(U1),sl(U1))": 1,
    "tensor(dual(U1),tensor(U1,tensor(dual(U2),U2)))": 1,
    "tensor(dual(U1),tensor(U1,tensor(dual(U1),U2)))": 6,
}
