"""Cross-check GKRS multiplets against Euler restriction over a weight grid and time it.

    python scripts/gkrs_grid.py --max-coord 4 --embeddings A2>A1u1 G2>A2
"""
import argparse
import itertools
import time
from dataclasses import dataclass, field

from equalrank.embed import named_embedding
from equalrank.gkrs import euler_restriction, gkrs_multiplet

DEFAULT = ["A1>t", "A2>t", "A2>A1u1", "B2>t", "B2>A1A1", "G2>A2", "G2>A1A1"]


@dataclass
class GridConfig:
    embeddings: list = field(default_factory=lambda: list(DEFAULT))
    max_coord: int = 3


def run(cfg: GridConfig) -> bool:
    all_ok = True
    print(f"{'embedding':<10} {'weights':>7} {'members':>7} {'agree':>6} {'seconds':>8}")
    for name in cfg.embeddings:
        e = named_embedding(name)
        start = time.perf_counter()
        n = agree = 0
        members = set()
        for lam in itertools.product(range(cfg.max_coord + 1), repeat=e.ambient.dim):
            m = gkrs_multiplet(e, lam)
            members.add(len(m.members))
            agree += m.as_decomposition() == euler_restriction(e, lam)
            n += 1
        all_ok &= agree == n
        print(f"{name:<10} {n:>7} {','.join(map(str, sorted(members))):>7} {agree:>6} {time.perf_counter() - start:>8.2f}")
    return all_ok


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--max-coord", type=int, default=3)
    p.add_argument("--embeddings", nargs="+", default=DEFAULT)
    a = p.parse_args()
    raise SystemExit(0 if run(GridConfig(a.embeddings, a.max_coord)) else 1)
