"""Tabulate Dirac induction U_mu -> +-V_lambda next to the truncated pushforward."""
import argparse
from dataclasses import dataclass

from equalrank.embed import named_embedding
from equalrank.gkrs import dirac_induce, induce_truncated, mu_grid
from equalrank.rootdata import weight_str


@dataclass
class TableConfig:
    embedding: str = "A2>A1u1"
    max_coord: int = 3
    bound: int = 12


def main(cfg: TableConfig) -> None:
    e = named_embedding(cfg.embedding)
    print(f"{'mu':<14} {'dirac':<14} pushforward (coordinate sum <= {cfg.bound})")
    for mu in mu_grid(e, cfg.max_coord):
        res = dirac_induce(e, mu)
        d = "0" if res is None else f"{res[0]:+d} V{weight_str(res[1])}"
        push = induce_truncated(e, mu, cfg.bound)
        p = " ".join(f"{c:+d} V{weight_str(w)}" for w, c in push.terms.sorted_items()) or "0"
        print(f"{weight_str(mu):<14} {d:<14} {p}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--embedding", default="A2>A1u1")
    ap.add_argument("--max-coord", type=int, default=3)
    ap.add_argument("--bound", type=int, default=12)
    a = ap.parse_args()
    main(TableConfig(a.embedding, a.max_coord, a.bound))
