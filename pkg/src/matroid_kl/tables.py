"""Reference coefficient lists for uniform and braid KL polynomials.

``UNIFORM[m][d]`` and ``BRAID[n]`` list coefficients from the constant term up.
They are used as golden data by the test suite and by ``kl verify tables``.
"""

UNIFORM: dict[int, dict[int, tuple[int, ...]]] = {
    1: {
        1: (1,),
        2: (1,),
        3: (1, 2),
        4: (1, 5),
        5: (1, 9, 5),
        6: (1, 14, 21),
        7: (1, 20, 56, 14),
        8: (1, 27, 120, 84),
        9: (1, 35, 225, 300, 42),
        10: (1, 44, 385, 825, 330),
        11: (1, 54, 616, 1925, 1485, 132),
        12: (1, 65, 936, 4004, 5005, 1287),
        13: (1, 77, 1365, 7644, 14014, 7007, 429),
        14: (1, 90, 1925, 13650, 34398, 28028, 5005),
        15: (1, 104, 2640, 23100, 76440, 91728, 32032, 1430),
    },
    2: {
        3: (1, 5),
        4: (1, 14),
        5: (1, 28, 21),
        6: (1, 48, 98),
        7: (1, 75, 288, 84),
        8: (1, 110, 675, 552),
        9: (1, 154, 1375, 2145, 330),
        10: (1, 208, 2541, 6380, 2805),
        11: (1, 273, 4368, 16016, 13585, 1287),
        12: (1, 350, 7098, 35672, 49049, 13442),
        13: (1, 440, 11025, 72618, 146510, 78078, 5005),
        14: (1, 544, 16500, 137760, 382200, 331968, 62062),
        15: (1, 663, 23936, 246840, 899640, 1150968, 420784, 19448),
    },
    3: {
        3: (1, 9),
        4: (1, 28),
        5: (1, 62, 56),
        6: (1, 117, 288),
        7: (1, 200, 927, 300),
        8: (1, 319, 2365, 2145),
        9: (1, 483, 5214, 9020, 1485),
        10: (1, 702, 10374, 28886, 13585),
        11: (1, 987, 19110, 77714, 70499, 7007),
        12: (1, 1350, 33138, 184730, 271635, 78078),
        13: (1, 1804, 54720, 399840, 862680, 482118, 32032),
        14: (1, 2363, 86768, 803760, 2384760, 2171988, 420784),
    },
}

BRAID: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1,),
    3: (1,),
    4: (1, 1),
    5: (1, 5),
    6: (1, 16, 15),
    7: (1, 42, 175),
    8: (1, 99, 1225, 735),
    9: (1, 219, 6769, 16065),
    10: (1, 466, 32830, 204400, 76545),
    11: (1, 968, 147466, 2001230, 2747745),
    12: (1, 1981, 632434, 16813720, 56143395, 13835745),
    13: (1, 4017, 2637206, 128172330, 864418555, 746080335),
    14: (1, 8100, 10811801, 915590676, 11200444255, 22495833360, 3859590735),
    15: (1, 16278, 43876001, 6252966720, 129344350135, 502627875750, 293349030975),
    16: (1, 32647, 176981207, 41362602281, 1377269949055, 9305666915545, 12290930276625, 1539272109375),
    17: (1, 65399, 711347303, 267347356003, 13819966094935, 151395489770525, 376566883537845, 157277996100225),
    18: (1, 130918, 2853229952, 1698735206324, 132618161185510, 2242336712846230, 9443716601138820, 8758018896026400, 831766748637825),
    19: (1, 261972, 11430715476, 10656703437054, 1229703907984734, 30941776173508200, 205809448675350520, 352844128436870070, 110176255068905025),
    20: (1, 524097, 45762931992, 66208557177786, 11100857399288280, 404180066561961690, 4042252614171772000, 11522756204094885750, 7879824460254822075, 585243816844111425),
}


# KL-basis multiplication tables ---------------------------------------------
#
# Products are returned as {frozenset of ground-set elements: coefficient list in q},
# coefficients listed from q^0 up.  Ground sets are range(n).


def _add(out, key, coeffs):
    cur = out.get(key, [])
    width = max(len(cur), len(coeffs))
    cur = cur + [0] * (width - len(cur))
    for i, c in enumerate(coeffs):
        cur[i] += c
    out[key] = cur


def uniform_rank2_product(n: int, F: frozenset, G: frozenset) -> dict[frozenset, list[int]]:
    """``x_F x_G`` for the rank-2 uniform matroid on ``range(n)``."""
    top = frozenset(range(n))
    F, G = frozenset(F), frozenset(G)
    if len(F) > len(G) or (len(F) == len(G) and sorted(F) > sorted(G)):
        F, G = G, F
    out: dict[frozenset, list[int]] = {}
    if F == top:
        _add(out, top, [1])
    elif G == top:
        _add(out, top, [1, 1] if len(F) == 1 else [1, n, 1])
    elif len(F) == 1 and F == G:
        _add(out, F, [0, 1])
        _add(out, top, [1, 1])
    elif len(F) == 1:
        _add(out, top, [1, 2, 1])
    elif len(G) == 1:
        _add(out, G, [0, 1, 1])
        _add(out, top, [1, n, n - 1])
    else:
        _add(out, F, [0, 0, 1])
        for i in range(n):
            _add(out, frozenset([i]), [0, 1, 1])
        _add(out, top, [1, n, (n - 1) ** 2])
    return out


def uniform_rank3_product(n: int, F: frozenset, G: frozenset) -> dict[frozenset, list[int]]:
    """``x_F x_G`` for the rank-3 uniform matroid on ``range(n)`` (``n >= 3``)."""
    top = frozenset(range(n))
    F, G = frozenset(F), frozenset(G)
    # order so that len(F) >= len(G), the larger flat first
    if len(F) < len(G) or (len(F) == len(G) and sorted(F) > sorted(G)):
        F, G = G, F
    c2 = n * (n - 1) // 2
    out: dict[frozenset, list[int]] = {}
    pairs = lambda i: [frozenset([i, j]) for j in range(n) if j != i]  # noqa: E731
    if F == top:
        by_size = {3: [1], 2: [1, 1], 1: [1, n - 1, 1], 0: [1, c2, c2, 1]}
        _add(out, top, by_size[len(G)] if G != top else [1])
    elif len(F) == 2 and len(G) == 2:
        if F == G:
            _add(out, F, [0, 1])
            _add(out, top, [1, 1])
        else:
            _add(out, top, [1, 2, 1])
    elif len(F) == 2 and len(G) == 1:
        if G <= F:
            _add(out, F, [0, 1, 1])
            _add(out, top, [1, n - 1, n - 2])
        else:
            _add(out, top, [1, n, n, 1])
    elif len(F) == 2:
        _add(out, F, [0, 1, 2, 1])
        _add(out, top, [1, c2, n * n - n - 3, c2 - 2])
    elif len(F) == 1 and len(G) == 1:
        (i,) = F
        if F == G:
            _add(out, F, [0, 0, 1])
            for p in pairs(i):
                _add(out, p, [0, 1, 1])
            _add(out, top, [1, n - 1, (n - 2) ** 2])
        else:
            _add(out, F | G, [0, 1, 2, 1])
            _add(out, top, [1, 2 * n - 3, n * (n - 2), 2 * n - 5])
    elif len(F) == 1:
        (i,) = F
        _add(out, F, [0, 0, 1, 1])
        for p in pairs(i):
            _add(out, p, [0, 1, 2, 1])
        _add(
            out,
            top,
            [1, c2, (n - 1) * (n * n - 6) // 2, (n - 1) * (n * n - 8) // 2, n * (n - 3) // 2],
        )
    else:
        _add(out, F, [0, 0, 0, 1])
        for i in range(n):
            _add(out, frozenset([i]), [0, 0, 1, 1])
        for i in range(n):
            for j in range(i + 1, n):
                _add(out, frozenset([i, j]), [0, 1, 2, 1])
        _add(
            out,
            top,
            [
                1,
                c2,
                n * (n**3 - 2 * n * n - n - 2) // 4,
                (n - 1) * (n**3 - n * n - 5 * n - 2) // 2,
                n * n * (n + 1) * (n - 3) // 4,
                n * (n - 3) // 2,
            ],
        )
    return {k: v for k, v in out.items() if any(v)}


# x_bottom^2 in the braid matroid of rank 3, grouped by the number of edges in the flat
BRAID4_BOTTOM_SQUARE: dict[int, list[int]] = {
    0: [0, 0, 0, 1],
    1: [0, 0, 1, 1],
    2: [0, 1, 2, 1],
    3: [0, 1, 3, 4],
    6: [1, 7, 32, 38, 13, 1],
}
