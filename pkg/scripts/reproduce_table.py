"""Screen the genus-one catalog and print full reports for the survivors."""

import argparse
import json
from dataclasses import dataclass

from seifert_obstruct.families import Catalog
from seifert_obstruct.pipeline import analyze, run_table_screen


@dataclass
class Config:
    verbose: bool = False
    fmt: str = "text"


def run(cfg: Config) -> None:
    screen = run_table_screen()
    if cfg.fmt == "json":
        print(json.dumps(screen.to_dict(), indent=2, ensure_ascii=False))
        return
    print(screen.to_text())
    if cfg.verbose:
        for name in screen.survivors:
            print()
            print(analyze(Catalog(name)).to_text())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--verbose", action="store_true", help="also print reports for the survivors")
    ap.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    run(Config(**vars(ap.parse_args())))
