"""Run the three built-in witness checks at one or more truncation bounds."""

import argparse
import time
from dataclasses import dataclass, field

from braidthom.bns import builtin_witnesses


@dataclass
class Config:
    bounds: list[int] = field(default_factory=lambda: [4, 6])


def run(cfg: Config) -> bool:
    ok = True
    for n in cfg.bounds:
        t0 = time.perf_counter()
        rep = builtin_witnesses(n)
        print(rep.summary())
        print(f"({time.perf_counter() - t0:.2f}s)\n")
        ok &= rep.ok
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bounds", type=int, nargs="*", default=[4, 6])
    raise SystemExit(0 if run(Config(ap.parse_args().bounds)) else 1)
