"""Run the no-go checks on every bundled code with k >= 2."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

import clifford_nogo
from clifford_nogo.codes import load_code
from clifford_nogo.search import MAX_FULL_AUTOMORPHISM_N, no_go_witness

DATA = Path(clifford_nogo.__file__).parent / "data"


@dataclass
class CorpusConfig:
    paths: list[Path] = field(default_factory=lambda: sorted(DATA.glob("*.txt")))
    modes: tuple[str, ...] = ("transversal", "automorphism")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("codes", nargs="*", type=Path, help="code files (default: bundled corpus)")
    args = ap.parse_args()
    cfg = CorpusConfig(paths=args.codes) if args.codes else CorpusConfig()
    failures = 0
    for path in cfg.paths:
        code = load_code(path)
        if code.k < 2:
            continue
        for mode in cfg.modes:
            if mode == "automorphism" and code.n > MAX_FULL_AUTOMORPHISM_N:
                print(f"{code!s:<22} {mode:<13} skipped (n > {MAX_FULL_AUTOMORPHISM_N})")
                continue
            t0 = time.perf_counter()
            rep = no_go_witness(code, mode)
            dt = time.perf_counter() - t0
            failures += not rep.passed
            print(
                f"{code!s:<22} {mode:<13} |G|={rep.group_size:<5} of {rep.clifford_order:<8} "
                f"p={rep.prime:<3} orders={rep.order_histogram} "
                f"{'ok' if rep.passed else 'MISMATCH'} ({dt:.2f} s)"
            )
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
