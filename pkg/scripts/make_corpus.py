#!/usr/bin/env python3
"""Generate a synthetic corpus for scale or determinism experiments.

Writes n documents plus a manifest under the output directory and
prints the manifest path, ready for `citecode code --manifest ...`.
"""

import argparse

from citecode.synth import write_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="corpus root directory")
    parser.add_argument("--docs", type=int, default=100, help="number of documents")
    parser.add_argument("--seed", type=int, default=7, help="generator seed")
    parser.add_argument("--sentences", type=int, default=50, help="sentences per document")
    parser.add_argument("--refs", type=int, default=20, help="reference entries per document")
    args = parser.parse_args()

    manifest = write_corpus(
        args.out, args.docs, seed=args.seed,
        sentences=args.sentences, refs=args.refs,
    )
    print(manifest)


if __name__ == "__main__":
    main()
