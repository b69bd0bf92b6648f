"""Element-order histogram of Sp(2k, 2) for k = 1, 2 by exhaustive scan."""

from __future__ import annotations

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from clifford_nogo.constructions import primitive_prime_divisor
from clifford_nogo.symplectic import SymplecticMatrix, element_order, group_order


@dataclass
class ScanConfig:
    k: int = 2


def scan(k: int) -> Counter:
    d = 2 * k
    J = np.zeros((d, d), dtype=np.int64)
    J[:k, k:] = J[k:, :k] = np.eye(k, dtype=np.int64)
    mats = np.array(list(itertools.product((0, 1), repeat=d * d)), dtype=np.int64).reshape(-1, d, d)
    ok = np.all(np.einsum("kji,jl,klm->kim", mats, J, mats) % 2 == J, axis=(1, 2))
    return Counter(element_order(SymplecticMatrix.from_rows(A.tolist())) for A in mats[ok])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=ScanConfig.k, choices=[1, 2])
    cfg = ScanConfig(**vars(ap.parse_args()))
    hist = scan(cfg.k)
    total = sum(hist.values())
    print(f"Sp({2 * cfg.k}, 2): {total} elements (formula {group_order(cfg.k)})")
    for order, count in sorted(hist.items()):
        print(f"  order {order:>2}: {count}")
    nxt = primitive_prime_divisor(cfg.k + 1)
    print(f"order {nxt} (needed for k={cfg.k + 1}) present: {nxt in hist}")


if __name__ == "__main__":
    main()
