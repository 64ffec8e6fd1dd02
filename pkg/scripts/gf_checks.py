"""Check both generating-function identities at increasing truncation orders."""

import argparse
import time
from dataclasses import dataclass

from matroid_kl.families import gf_check_braid, gf_check_uniform


@dataclass
class GFConfig:
    max_order: int = 8
    uniform_m: tuple[int, ...] = (0, 1, 2, 3, 4)


def run(cfg: GFConfig) -> bool:
    ok = True
    for order in range(1, cfg.max_order + 1):
        start = time.perf_counter()
        res = [gf_check_uniform(m, order) for m in cfg.uniform_m]
        braid = gf_check_braid(order)
        ok = ok and all(res) and braid
        flags = " ".join(f"m={m}:{'ok' if r else 'FAIL'}" for m, r in zip(cfg.uniform_m, res))
        print(f"order {order}: uniform {flags}  braid:{'ok' if braid else 'FAIL'} ({time.perf_counter() - start:.2f}s)")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=8)
    raise SystemExit(not run(GFConfig(max_order=ap.parse_args().max_order)))
