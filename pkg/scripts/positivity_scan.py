"""Scan KL-basis structure constants for coefficients outside N[q]."""

import argparse
import time
from dataclasses import dataclass, field

from matroid_kl import build_lattice
from matroid_kl.algebra import positivity_scan
from matroid_kl.lattice import members

DEFAULT_TARGETS = ["boolean:4", "uniform:1,4", "uniform:2,3", "uniform:2,4", "uniform:3,4", "braid:4", "braid:5", "braid:6"]


@dataclass
class ScanConfig:
    targets: list[str] = field(default_factory=lambda: list(DEFAULT_TARGETS))
    first_only: bool = False
    limit: int = 5  # findings printed per matroid


def run(cfg: ScanConfig) -> dict[str, int]:
    counts = {}
    for spec in cfg.targets:
        start = time.perf_counter()
        lat = build_lattice(spec)
        found = positivity_scan(lat, first_only=cfg.first_only)
        counts[spec] = len(found)
        print(f"{spec:14s} flats={len(lat):4d} findings={len(found):3d} ({time.perf_counter() - start:.2f}s)")
        for f in found[: cfg.limit]:
            print(f"    C[{members(f.F)}][{members(f.G)}]^{members(f.H)} = {f.coefficient}")
    return counts


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("targets", nargs="*", default=DEFAULT_TARGETS)
    ap.add_argument("--first", action="store_true")
    a = ap.parse_args()
    run(ScanConfig(targets=a.targets, first_only=a.first))
