"""Successive quotient chain |G(I^(k+1) : I^k)| next to the closure formula.

    python scripts/oracle_chain.py "x^41, y^41, z^41, x^40*y^5*z^5, x^5*y^40*z^5, x^5*y^5*z^40" --kmax 14
"""

import argparse
import time
from dataclasses import dataclass

from ratliffrush.closure import oracle_closure, rr_closure
from ratliffrush.goodness import classify
from ratliffrush.parsing import parse_ideal

DEFAULT = "x^41, y^41, z^41, x^40*y^5*z^5, x^5*y^40*z^5, x^5*y^5*z^40"


@dataclass(frozen=True)
class ChainConfig:
    ideal: str = DEFAULT
    kmax: int = 14
    window: int = 2
    threads: int = 1


def parse_args() -> ChainConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("ideal", nargs="?", default=ChainConfig.ideal)
    p.add_argument("--kmax", type=int, default=ChainConfig.kmax)
    p.add_argument("--window", type=int, default=ChainConfig.window)
    p.add_argument("--threads", type=int, default=ChainConfig.threads)
    return ChainConfig(**vars(p.parse_args()))


def main(cfg: ChainConfig) -> None:
    I = parse_ideal(cfg.ideal).to_ideal()
    t0 = time.perf_counter()
    rep = oracle_closure(I, cfg.kmax, cfg.window, threads=cfg.threads)
    t_oracle = time.perf_counter() - t0
    for s in rep.steps:
        print(f"k={s.k:2d}  |G(I^{s.k + 1}:I^{s.k})| = {s.size}")
    print(f"oracle: {t_oracle:.2f}s, stabilized={rep.stabilized}")
    if classify(I).good:
        t0 = time.perf_counter()
        R = rr_closure(I, check=False)
        print(f"formula: {time.perf_counter() - t0:.4f}s, agrees with oracle union: {R == rep.union}")
        first = next((s.k for s in rep.steps if s.quotient == R), None)
        print(f"first k with quotient equal to the closure: {first}")
    else:
        print("ideal is bad; formula not applicable")


if __name__ == "__main__":
    main(parse_args())
