"""Random-corpus statistics: goodness rates, decision rules, oracle agreement
and whether the closure of a good ideal is again good and closed.

Writes one JSON summary to stdout.
"""

import argparse
import collections
import json
import random
import time
from dataclasses import asdict, dataclass

from ratliffrush import MonomialIdeal
from ratliffrush.closure import oracle_closure, rr_closure
from ratliffrush.goodness import classify
from ratliffrush.monomial import pure_power


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 300
    seed: int = 0
    n_values: tuple = (2, 3)
    max_d: int = 8
    max_extra: int = 3
    kmax: int = 10
    oracle_sample: int = 60


def random_ideal(rng: random.Random, n: int, max_d: int, max_extra: int) -> MonomialIdeal:
    """Pure powers plus extra generators strictly inside the first box; resampled
    until every pure power is still a minimal generator."""
    while True:
        d = [rng.randint(2, max_d) for _ in range(n)]
        extra = [tuple(rng.randint(0, di - 1) for di in d) for _ in range(rng.randint(1, max_extra))]
        corners = [pure_power(n, i, d[i]) for i in range(n)]
        I = MonomialIdeal(corners + extra, n=n)
        if set(corners) <= set(I.gens) and len(I) > n:
            return I


def run(cfg: CorpusConfig) -> dict:
    rng = random.Random(cfg.seed)
    verdicts = collections.Counter()
    rules = collections.Counter()
    closure = collections.Counter()
    oracle = collections.Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.size):
        n = rng.choice(cfg.n_values)
        I = random_ideal(rng, n, cfg.max_d, cfg.max_extra)
        r = classify(I)
        verdicts[f"n={n} {r.verdict.value}"] += 1
        rules[r.rule.value] += 1
        if not r.good:
            continue
        R = rr_closure(I, check=False)
        closure["changed" if R != I else "unchanged"] += 1
        if classify(R).good:
            closure["closure good"] += 1
            closure["closure closed" if rr_closure(R, check=False) == R else "closure not closed"] += 1
        else:
            closure["closure bad"] += 1
        if oracle["checked"] < cfg.oracle_sample:
            rep = oracle_closure(I, cfg.kmax)
            oracle["checked"] += 1
            oracle["stabilized"] += rep.stabilized
            oracle["agree"] += rep.union == R
    return {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - t0, 2),
        "verdicts": dict(sorted(verdicts.items())),
        "rules": dict(sorted(rules.items())),
        "closure": dict(sorted(closure.items())),
        "oracle": dict(oracle),
    }


def parse_args() -> CorpusConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, default in asdict(CorpusConfig()).items():
        if isinstance(default, tuple):
            p.add_argument(f"--{f.replace('_', '-')}", type=int, nargs="+", default=list(default))
        else:
            p.add_argument(f"--{f.replace('_', '-')}", type=int, default=default)
    a = vars(p.parse_args())
    a["n_values"] = tuple(a["n_values"])
    return CorpusConfig(**a)


if __name__ == "__main__":
    print(json.dumps(run(parse_args()), indent=2))
