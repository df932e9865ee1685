"""Compare the 2x2 congruence classifier with exhaustive search over a parameter grid."""

import argparse
import itertools
import time
from dataclasses import dataclass

from seifert_obstruct.sequiv import brute_force_congruence, congruence_classifier_2x2, metabolizer_matrix


@dataclass
class Config:
    a_max: int = 8
    b_max: int = 4
    # box half-width is scale * (1 + |a| + |b| + |c|)
    scale: int = 2


def run(cfg: Config) -> int:
    rng_a = range(-cfg.a_max, cfg.a_max + 1)
    rng_b = range(-cfg.b_max, cfg.b_max + 1)
    agree = congruent = 0
    mismatches = []
    start = time.perf_counter()
    for a, b, c in itertools.product(rng_a, rng_b, rng_a):
        bound = cfg.scale * (1 + abs(a) + abs(b) + abs(c))
        n = congruence_classifier_2x2(a, b, c)
        w = brute_force_congruence(metabolizer_matrix(a, b), metabolizer_matrix(c, b), bound)
        if (n is None) == (w is None):
            agree += 1
            congruent += n is not None
        else:
            mismatches.append((a, b, c))
    total = agree + len(mismatches)
    print(f"{agree}/{total} cases agree ({congruent} congruent) in {time.perf_counter() - start:.1f}s")
    for case in mismatches:
        print("mismatch:", case)
    return len(mismatches)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-max", type=int, default=Config.a_max)
    ap.add_argument("--b-max", type=int, default=Config.b_max)
    ap.add_argument("--scale", type=int, default=Config.scale)
    raise SystemExit(1 if run(Config(**vars(ap.parse_args()))) else 0)
