"""Orders of the V, W and prime-order constructions for k = 1..kmax."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from clifford_nogo.constructions import construct_prime_order, construct_V, construct_W, primitive_prime_divisor
from clifford_nogo.symplectic import element_order


@dataclass
class SweepConfig:
    kmax: int = 8


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for k in range(1, cfg.kmax + 1):
        t0 = time.perf_counter()
        v, w, u = construct_V(k), construct_W(k), construct_prime_order(k)
        rows.append(
            {
                "k": k,
                "ord_V": element_order(v.matrix),
                "ord_W": element_order(w.matrix),
                "p": primitive_prime_divisor(k),
                "ord_U": element_order(u.matrix),
                "theta": w.theta_exponent,
                "seconds": time.perf_counter() - t0,
            }
        )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=SweepConfig.kmax)
    cfg = SweepConfig(**vars(ap.parse_args()))
    print(f"{'k':>2} {'ord V':>6} {'ord W':>6} {'p':>5} {'ord U':>6} {'theta':>6} {'sec':>7}")
    for r in run(cfg):
        ok = r["ord_V"] == 2 ** r["k"] - 1 and r["ord_W"] == 2 ** r["k"] + 1 and r["ord_U"] == r["p"]
        print(
            f"{r['k']:>2} {r['ord_V']:>6} {r['ord_W']:>6} {r['p']:>5} {r['ord_U']:>6} "
            f"{'a^' + str(r['theta']):>6} {r['seconds']:7.3f}{'' if ok else '  MISMATCH'}"
        )


if __name__ == "__main__":
    main()
