"""Tabulate S-equivalent but non-congruent pairs ((a,b),(b+1,0)) ~ ((a+1,b),(b+1,0))."""

import argparse
from dataclasses import dataclass

from seifert_obstruct.sequiv import (
    brute_force_congruence,
    congruence_classifier_2x2,
    construct_sequiv_pair,
    metabolizer_matrix,
    verify_certificate,
)


@dataclass
class Config:
    b_max: int = 30
    # brute-force cross-check only for b up to this value (it gets slow)
    brute_b_max: int = 6
    brute_bound: int = 8


def run(cfg: Config) -> None:
    print(f"{'b':>3} {'a':>4} {'k':>8}  certificate  congruent  brute-force")
    for b in range(5, cfg.b_max + 1):
        if b % 3 == 1:
            continue
        pair = construct_sequiv_pair(b)
        ok = verify_certificate(pair.certificate)
        congruent = congruence_classifier_2x2(pair.a, b, pair.a + 1) is not None
        brute = "-"
        if b <= cfg.brute_b_max:
            w = brute_force_congruence(metabolizer_matrix(pair.a, b), metabolizer_matrix(pair.a + 1, b),
                                       cfg.brute_bound)
            brute = "none found" if w is None else str(w)
        print(f"{b:>3} {pair.a:>4} {pair.k:>8}  {'ok' if ok else 'BAD':<11}  {str(congruent):<9}  {brute}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b-max", type=int, default=Config.b_max)
    ap.add_argument("--brute-b-max", type=int, default=Config.brute_b_max)
    ap.add_argument("--brute-bound", type=int, default=Config.brute_bound)
    run(Config(**vars(ap.parse_args())))
