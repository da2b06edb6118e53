"""Probe several subgroup families of the pure braid groups for compatibility with cloning.

Samples come from braidthom.sampling, so BRAIDTHOM_SEED fixes them.
"""

import argparse
from dataclasses import dataclass

from braidthom.braids import full_twist, is_central, is_m_loose, is_trivial
from braidthom.quotient import coherence_check
from braidthom.sampling import random_pure_braid, rng


@dataclass
class Config:
    samples: int = 200
    max_strands: int = 5
    max_factors: int = 3
    seed: int | None = None


def sample(cfg: Config, min_strands: int = 1):
    r = rng(cfg.seed)
    out = []
    for _ in range(cfg.samples):
        n = r.randint(min_strands, cfg.max_strands)
        p = random_pure_braid(r, n, r.randint(0, cfg.max_factors))
        if r.random() < 0.5 and n >= 2:
            q = random_pure_braid(r, n, 2)
            p = p * q * p.inverse() * q.inverse()
        out.append(p)
    return out


def run(cfg: Config) -> None:
    families = {
        "trivial": (lambda n, p: is_trivial(p), 1),
        "2-loose": (lambda n, p: is_m_loose(p, 2), 2),
        "3-loose": (lambda n, p: is_m_loose(p, 3), 3),
        "center": (lambda n, p: is_central(p), 1),
    }
    for name, (member, lo) in families.items():
        extra = [full_twist(n) for n in range(lo, cfg.max_strands + 1)] if name == "center" else []
        rep = coherence_check(member, sample(cfg, lo) + extra, limit=3)
        print(f"{name:<8} {rep.summary()}")
        for p, k in rep.forward + rep.backward:
            print(f"           e.g. {p} cloned at {k}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("samples", "max_strands", "max_factors", "seed"):
        ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=getattr(Config, f))
    run(Config(**vars(ap.parse_args())))
