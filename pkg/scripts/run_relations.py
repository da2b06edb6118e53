"""Tabulate both relation catalogs per family, with and without the reversed B reading."""

import argparse
import time
from dataclasses import dataclass

from braidthom.gens import relation_suite


@dataclass
class Config:
    bound: int = 6
    show: int = 3


def run(cfg: Config) -> None:
    for name, reverse in (("vbr", False), ("fbr", False), ("fbr", True)):
        t0 = time.perf_counter()
        rep = relation_suite(name, cfg.bound, reverse_b=reverse)
        dt = time.perf_counter() - t0
        label = f"{name}{' (reverse_b)' if reverse else ''}"
        print(f"{label}: {rep.passed}/{len(rep.results)} pass in {dt:.2f}s")
        for tag, (ok, total) in rep.by_tag().items():
            mark = "" if ok == total else "  <-"
            print(f"  {tag:<6} {ok:>4}/{total:<4}{mark}")
        for r in rep.failed[: cfg.show]:
            print(f"  e.g. {r}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=Config.bound)
    ap.add_argument("--show", type=int, default=Config.show)
    run(Config(**vars(ap.parse_args())))
