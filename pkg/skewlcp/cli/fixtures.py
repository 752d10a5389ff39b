"""Built-in manifests with published parameters, used by `reproduce` and `export`.

Polynomials are written the way they are usually displayed: leading term
first, exponents of the subfield generator as {"gen_pow": e}.
"""

from __future__ import annotations

from typing import Any, Callable

from ..errors import InputError
from .manifest import Manifest


def P(e: int) -> dict:
    return {"gen_pow": e}


def basis(*degrees: int) -> list[int]:
    """Coefficient list with ones at the given degrees of the generator."""
    out = [0] * (max(degrees) + 1)
    for d in degrees:
        out[d] = 1
    return out


def monic(*coeffs: Any) -> list:
    """x^d + c_{d-1} x^{d-1} + ... + c_0 from (c_{d-1}, ..., c_0)."""
    return list(reversed(coeffs)) + [1]


def sparse(degree: int, terms: dict[int, Any]) -> list:
    """Monic polynomial of the given degree with the listed lower terms."""
    out: list[Any] = [0] * degree + [1]
    for d, c in terms.items():
        out[d] = c
    return out


def _binary_bch_12() -> dict:
    eta = basis
    return {
        "name": "binary-bch-12",
        "field": {
            "top": {
                "p": 2,
                "modulus": basis(0, 1, 3, 5, 6, 7, 12),
                "theta": 1,
                "mu": 6,
                "subfield_generator": basis(1, 2, 4, 5, 9),
            }
        },
        "lambda": 1,
        "u": 1,
        "codes": {
            "C": {"bch": {"alpha": P(5), "r": 2, "delta": 4}},
            "Cperp": {"dual_of": "C"},
            "Cperp_x2": {"image_of": "Cperp", "phi_power": 2},
        },
        "task": {"kind": "search", "C": "C", "seed": "Cperp"},
        "expect": [
            {"claim": "cyclic_vector", "alpha": P(5), "value": True},
            {
                "claim": "generator",
                "code": "C",
                "coeffs": monic(eta(0, 3, 4), eta(1, 3, 4), eta(1), eta(5), eta(1, 2, 3, 4), eta(0, 2)),
            },
            {"claim": "dimension", "code": "C", "value": 6},
            {"claim": "bch_bound", "code": "C", "value": 4},
            {
                "claim": "generator",
                "code": "Cperp",
                "coeffs": monic(eta(4, 5), eta(2, 3, 4), eta(0, 5), eta(0, 3, 5), eta(0, 1, 2, 3, 5), eta(0, 2)),
            },
            {"claim": "gcrd", "C": "C", "D": "Cperp", "coeffs": monic(eta(1, 2, 4, 5), eta(0, 2, 3))},
            {"claim": "lcp", "C": "C", "D": "Cperp", "value": False},
            {
                "claim": "generator",
                "code": "Cperp_x2",
                "coeffs": monic(eta(2, 4), eta(0, 2, 3), eta(1, 2), eta(0, 1, 2, 3, 5), eta(3), eta(1, 2, 4, 5)),
            },
            *[
                {"claim": "image_lcp", "C": "C", "seed": "Cperp", "phi_power": i, "value": i in (2, 4)}
                for i in range(1, 6)
            ],
            {"claim": "group_order", "value": 378},
            {"claim": "search", "C": "C", "seed": "Cperp", "candidates": 378, "count": 144},
            {"claim": "distance", "code": "C", "value": 6},
            {"claim": "security_parameter", "C": "C", "D": "Cperp_x2", "value": 6},
        ],
    }


def _ternary_cyclic_44() -> dict:
    g = sparse(24, {
        21: 1, 20: 1, 19: P(7), 18: P(3), 17: 2, 16: P(3), 14: P(5), 13: P(5), 12: 2,
        10: P(2), 9: P(7), 6: 2, 5: P(5), 4: P(7), 3: P(3), 2: P(7), 1: P(2), 0: 2,
    })
    h = sparse(20, {
        19: P(6), 18: P(1), 17: P(1), 16: P(2), 15: 1, 14: P(2), 13: P(1), 12: P(2),
        11: P(3), 10: P(6), 9: P(1), 8: P(7), 6: P(1), 5: P(1), 4: 2, 3: 2, 0: 1,
    })
    return {
        "name": "ternary-cyclic-44",
        "field": {"p": 3, "modulus": [2, 2, 1], "sigma": 1, "s": 22, "tower": False},
        "lambda": 1,
        "codes": {
            "C": {"generator": g, "declared_distance": 17},
            "D": {"generator": h, "declared_dual_distance": 17},
            "Cperp": {"dual_of": "C"},
        },
        "task": {"kind": "check", "C": "C", "D": "D", "expect": True},
        "expect": [
            {"claim": "dimension", "code": "C", "value": 20},
            {"claim": "generator", "code": "Cperp", "coeffs": h},
            {"claim": "gcrd", "C": "C", "D": "D", "coeffs": [1]},
            {"claim": "lcp", "C": "C", "D": "D", "value": True},
            {"claim": "group_order", "value": 16},
            {"claim": "pairwise_images", "C": "C", "D": "D", "value": 256},
            {"claim": "security_parameter", "C": "C", "D": "D", "method": "declared", "value": 17},
        ],
    }


def _quinary_bch_10() -> dict:
    return {
        "name": "quinary-bch-10",
        "field": {
            "top": {
                "p": 5,
                "modulus": [2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1],
                "theta": 1,
                "mu": 5,
                "subfield_generator": P(15630),
            }
        },
        "lambda": 1,
        "u": 1,
        "codes": {
            "D": {"bch": {"alpha": [3, 1, 0, 2, 0, 3, 1, 1, 0, 1], "r": 0, "delta": 4}},
            "Dperp": {"dual_of": "D"},
            "Dperp_x": {"image_of": "Dperp", "phi_power": 1},
        },
        "task": {"kind": "search", "C": "D", "seed": "Dperp"},
        "expect": [
            {"claim": "element_equal", "field": "L", "left": [3, 1, 0, 2, 0, 3, 1, 1, 0, 1], "right": P(7861528)},
            {"claim": "cyclic_vector", "alpha": P(7861528), "value": True},
            {"claim": "generator", "code": "D", "coeffs": monic(P(27), P(2957), P(968), P(1148), P(2955), P(2038))},
            {"claim": "dimension", "code": "D", "value": 4},
            {"claim": "generator", "code": "Dperp", "coeffs": monic(P(599), P(1816), P(2309), P(720))},
            {"claim": "gcrd", "C": "Dperp", "D": "D", "coeffs": monic(P(570))},
            {"claim": "lcp", "C": "Dperp", "D": "D", "value": False},
            {"claim": "generator", "code": "Dperp_x", "coeffs": monic(P(2995), P(2832), P(2173), P(476))},
            *[
                {"claim": "image_lcp", "C": "D", "seed": "Dperp", "phi_power": i, "value": i in (1, 4)}
                for i in range(1, 5)
            ],
            {"claim": "group_order", "value": 7810},
            {"claim": "search", "C": "D", "seed": "Dperp", "candidates": 7810, "count": 4820},
            {"claim": "distance", "code": "D", "value": 7},
            {"claim": "distance", "code": "Dperp", "value": 5},
            {"claim": "security_parameter", "C": "Dperp_x", "D": "D", "value": 5},
        ],
    }


_QUARTIC_FIELD = {"p": 2, "modulus": [1, 0, 1, 1, 1, 0, 0, 0, 1], "sigma": 2, "tower": False}
_QUARTIC_LAMBDA = [0, 1, 1, 0, 1, 0, 1, 1]
_QUARTIC_LAMBDA_SQUARED = [1, 1, 1, 0, 1, 0, 1, 1]

_PARITY_TAIL_20 = [
    [58, 107, 112, 47, 178, 211, 193, 229, 157, 165, 101],
    [207, 231, 93, 161, 31, 40, 24, 221, 55, 141, 154],
    [164, 206, 241, 87, 22, 152, 3, 225, 254, 203, 173],
    [240, 41, 81, 10, 220, 90, 78, 147, 67, 247, 120],
    [28, 241, 141, 158, 201, 145, 212, 20, 20, 130, 42],
    [226, 39, 104, 162, 136, 209, 40, 165, 91, 128, 110],
    [243, 3, 208, 15, 174, 92, 212, 184, 142, 64, 183],
    [25, 69, 228, 161, 230, 123, 214, 159, 90, 161, 217],
    [161, 226, 146, 115, 187, 55, 64, 46, 48, 32, 198],
]


def _quartic_constacyclic_20() -> dict:
    g = monic(P(101), P(165), P(157), P(229), P(193), P(211), P(178), P(47), P(112), P(107), P(58))
    h_theta = monic(P(49), P(15), P(122), P(54), P(27), P(110), P(61), P(233), P(147))
    h_prime = monic(P(50), P(80), P(203), P(139), P(113), P(5), P(227), P(148), P(63))
    identity = [[1 if j == i else 0 for j in range(11)] for i in range(11)]
    return {
        "name": "quartic-constacyclic-20",
        "field": {**_QUARTIC_FIELD, "s": 5},
        "lambda": _QUARTIC_LAMBDA,
        "codes": {
            "C": {"generator": g},
            "Cperp": {"dual_of": "C"},
            "D": {"image_of": "Cperp", "beta": P(1), "phi_power": 0},
        },
        "task": {"kind": "check", "C": "C", "D": "D", "expect": True},
        "expect": [
            {"claim": "dimension", "code": "C", "value": 9},
            {
                "claim": "parity_check",
                "code": "C",
                "transpose": True,
                "rows": identity + [[P(e) for e in row] for row in _PARITY_TAIL_20],
            },
            {"claim": "generator", "code": "Cperp", "coeffs": h_theta},
            {"claim": "norm", "element": P(1), "value": _QUARTIC_LAMBDA},
            {"claim": "norm_power_fiber", "target": {"gen_pow": 0}, "value": 85},
            {"claim": "norm_power_fiber", "target": _QUARTIC_LAMBDA_SQUARED, "value": 85},
            {"claim": "generator", "code": "D", "coeffs": h_prime},
            {"claim": "gcrd", "C": "C", "D": "D", "coeffs": [1]},
            {"claim": "lcp", "C": "C", "D": "D", "value": True},
            {"claim": "group_order", "value": 340},
            {"claim": "search", "C": "C", "seed": "D", "candidates": 340, "count": 200},
            {"claim": "distance", "code": "C", "value": 10, "slow": True},
            {"claim": "security_parameter", "C": "C", "D": "D", "value": 10, "slow": True},
        ],
    }


def _binary_conjugates_16() -> dict:
    return {
        "name": "binary-conjugates-16",
        "field": {
            "top": {
                "p": 2,
                "modulus": basis(0, 1, 2, 11, 16),
                "theta": 1,
                "mu": 8,
                "subfield_generator": basis(0, 2, 3, 7, 8),
            }
        },
        "lambda": 1,
        "u": 1,
        "codes": {
            "C": {"conjugates": {"alpha": P(5), "indices": [0, 1, 3, 4]}},
            "H": {"bch": {"alpha": P(5), "r": 0, "delta": 5}},
            "D": {"dual_of": "H"},
            "D_x6": {"image_of": "D", "phi_power": 6},
        },
        "task": {"kind": "search", "C": "C", "seed": "D"},
        "expect": [
            {
                "claim": "generator",
                "code": "C",
                "coeffs": monic(P(110), P(125), P(219), P(101), P(191), P(45), P(67), P(85)),
            },
            {"claim": "bch_bound", "code": "H", "value": 5},
            {
                "claim": "generator",
                "code": "D",
                "coeffs": monic(P(235), P(222), P(178), P(17), P(111), P(71), P(194), P(198)),
            },
            {"claim": "lcp", "C": "C", "D": "D", "value": False},
            {
                "claim": "generator",
                "code": "D_x6",
                "coeffs": monic(P(250), P(183), P(172), P(68), P(219), P(209), P(176), P(177)),
            },
            *[
                {"claim": "image_lcp", "C": "C", "seed": "D", "phi_power": i, "value": i == 6}
                for i in range(1, 8)
            ],
            {"claim": "group_order", "value": 2040},
            {"claim": "search", "C": "C", "seed": "D", "candidates": 2040, "count": 672},
            {"claim": "distance", "code": "C", "value": 8},
            {"claim": "dual_distance", "code": "D", "value": 8},
            {"claim": "security_parameter", "C": "C", "D": "D_x6", "value": 8},
        ],
    }


_PARITY_TAIL_12 = [
    [218, 27, 139, 65, 184, 237],
    [61, 92, 92, 168, 240, 42],
    [46, 32, 184, 145, 155, 134],
    [159, 35, 78, 3, 133, 127],
    [131, 1, 227, 152, 182, 162],
    [16, 44, 153, 119, 196, 158],
]

_GENERATOR_ROWS_12 = [
    [P(218), P(61), P(46), P(159), P(131), P(16), 1, 0, 0, 0, 0, 0],
    [0, P(107), P(244), P(184), P(126), P(14), P(64), 1, 0, 0, 0, 0],
    [0, 0, P(173), P(211), P(226), P(249), P(56), P(1), 1, 0, 0, 0],
    [0, 0, 0, P(182), P(79), P(139), P(231), P(224), P(4), 1, 0, 0],
    [0, 0, 0, 0, P(218), P(61), P(46), P(159), P(131), P(16), 1, 0],
    [0, 0, 0, 0, 0, P(107), P(244), P(184), P(126), P(14), P(64), 1],
]


def _quartic_constacyclic_12() -> dict:
    g = monic(P(16), P(131), P(159), P(46), P(61), P(218))
    p = monic(P(24), P(183), P(164), P(82), P(70), P(89))
    identity = [[1 if j == i else 0 for j in range(6)] for i in range(6)]
    return {
        "name": "quartic-constacyclic-12",
        "field": {**_QUARTIC_FIELD, "s": 3},
        "lambda": _QUARTIC_LAMBDA,
        "codes": {
            "C": {"generator": g},
            "C_x": {"image_of": "C", "phi_power": 1},
            "P": {"generator": p},
            "P_x": {"image_of": "P", "phi_power": 1},
        },
        "task": {"kind": "search", "C": "C", "seed": "C", "exclude_identity": True},
        "expect": [
            {"claim": "dimension", "code": "C", "value": 6},
            {"claim": "generator_matrix", "code": "C", "rows": _GENERATOR_ROWS_12},
            {
                "claim": "parity_check",
                "code": "C",
                "rows": [ident + [P(e) for e in tail] for ident, tail in zip(identity, _PARITY_TAIL_12)],
            },
            {"claim": "generator", "code": "C_x", "coeffs": monic(P(64), P(14), P(126), P(184), P(244), P(107))},
            {"claim": "norm_power_fiber", "target": {"gen_pow": 0}, "value": 255},
            {"claim": "norm_power_fiber", "target": _QUARTIC_LAMBDA_SQUARED, "value": 0},
            {"claim": "lcp", "C": "C", "D": "C", "value": False},
            {"claim": "group_order", "value": 1020},
            {
                "claim": "search",
                "C": "C",
                "seed": "C",
                "exclude_identity": True,
                "candidates": 1019,
                "failures": 8,
                "successes": 1011,
                "distinct_successes": 1011,
            },
            {"claim": "lcp_pair_total", "C": "C", "seed": "C", "exclude_identity": True, "value": 1031220},
            {"claim": "distance", "code": "C", "value": 6},
            {"claim": "dual_distance", "code": "C", "value": 6},
            {"claim": "distance", "code": "P", "value": 6},
            {"claim": "dual_distance", "code": "P", "value": 4},
            {"claim": "lcp", "C": "P", "D": "P_x", "value": True},
        ],
    }


FIXTURES: dict[str, Callable[[], dict]] = {
    "binary-bch-12": _binary_bch_12,
    "ternary-cyclic-44": _ternary_cyclic_44,
    "quinary-bch-10": _quinary_bch_10,
    "quartic-constacyclic-20": _quartic_constacyclic_20,
    "binary-conjugates-16": _binary_conjugates_16,
    "quartic-constacyclic-12": _quartic_constacyclic_12,
}

# Published example numbers
ALIASES: dict[str, str] = {
    "7.1": "binary-bch-12",
    "7.2": "ternary-cyclic-44",
    "7.3": "quinary-bch-10",
    "7.4": "quartic-constacyclic-20",
    "7.5": "binary-conjugates-16",
    "7.6": "quartic-constacyclic-12",
}


def example_names() -> list[str]:
    return sorted(FIXTURES) + sorted(ALIASES)


def fixture(name: str) -> Manifest:
    try:
        build = FIXTURES[ALIASES.get(name, name)]
    except KeyError:
        raise InputError(f"unknown example: {name} (choose from {', '.join(example_names())})") from None
    return Manifest.from_dict(build())
