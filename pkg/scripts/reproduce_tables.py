"""Regenerate the uniform and braid KL tables and diff them against the stored reference."""

import argparse
import time
from dataclasses import dataclass

from matroid_kl import families, tables


@dataclass
class TableConfig:
    uniform_m: tuple[int, ...] = (1, 2, 3)
    braid_nmax: int = 20
    show: bool = False


def run(cfg: TableConfig) -> int:
    bad = 0
    start = time.perf_counter()
    for m in cfg.uniform_m:
        for d, ref in tables.UNIFORM[m].items():
            got = families.uniform_kl(m, d).coeffs
            if got != ref:
                print(f"uniform m={m} d={d}: got {got}, reference {ref}")
                bad += 1
            elif cfg.show:
                print(f"uniform m={m} d={d}: {families.uniform_kl(m, d)}")
    print(f"uniform tables: {time.perf_counter() - start:.2f}s")
    start = time.perf_counter()
    for n in range(1, cfg.braid_nmax + 1):
        got = families.braid_kl(n).coeffs
        ref = tables.BRAID.get(n)
        if ref is not None and got != ref:
            print(f"braid n={n}: got {got}, reference {ref}")
            bad += 1
        elif cfg.show:
            print(f"braid n={n}: {families.braid_kl(n)}")
    print(f"braid tables: {time.perf_counter() - start:.2f}s")
    print("all cells match" if not bad else f"{bad} mismatched cells")
    return bad


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--braid-nmax", type=int, default=20)
    ap.add_argument("--show", action="store_true")
    a = ap.parse_args()
    raise SystemExit(bool(run(TableConfig(braid_nmax=a.braid_nmax, show=a.show))))
