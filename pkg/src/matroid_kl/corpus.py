"""Named matroids used by ``kl verify`` and the test suite, plus random matrix matroids."""

from __future__ import annotations

import random
from typing import Iterator

from .lattice import Boolean, Braid, Graph, Matrix, MatroidSpec, Uniform

FANO = Matrix(2, 3, 7, ((1, 0, 0, 1, 1, 0, 1), (0, 1, 0, 1, 0, 1, 1), (0, 0, 1, 0, 1, 1, 1)))

# a few small graphic matroids with non-modular lattices of flats
GRAPHS = {
    "k4-minus-edge": Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    "c5": Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    "prism": Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5))),
}


def family_cells(max_size: int = 7) -> Iterator[tuple[str, MatroidSpec]]:
    """Boolean, uniform and braid matroids small enough to build their lattices quickly."""
    for n in range(max_size + 1):
        yield f"boolean:{n}", Boolean(n)
    for size in range(1, max_size + 1):
        for d in range(1, size + 1):
            yield f"uniform:{size - d},{d}", Uniform(size - d, d)
    for n in range(1, 6):
        yield f"braid:{n}", Braid(n)


def named_corpus(max_size: int = 7) -> list[tuple[str, MatroidSpec]]:
    out = list(family_cells(max_size))
    out.append(("fano", FANO))
    out.extend(GRAPHS.items())
    return out


def random_matrix(rng: random.Random, p: int | None = None, max_cols: int = 8) -> Matrix:
    """A random loopless matroid represented over GF(2) or GF(3) on at most ``max_cols`` elements."""
    if p is None:
        p = rng.choice((2, 3))
    rows = rng.randint(1, 4)
    cols = rng.randint(1, max_cols)
    entries = [[0] * cols for _ in range(rows)]
    for c in range(cols):
        while True:
            col = [rng.randrange(p) for _ in range(rows)]
            if any(col):
                break
        for r in range(rows):
            entries[r][c] = col[r]
    return Matrix(p, rows, cols, tuple(tuple(r) for r in entries))


def random_matrices(count: int, seed: int = 0, max_cols: int = 8) -> list[Matrix]:
    rng = random.Random(seed)
    return [random_matrix(rng, max_cols=max_cols) for _ in range(count)]
