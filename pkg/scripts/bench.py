#!/usr/bin/env python3
"""Throughput benchmark over a synthetic corpus.

Generates the corpus in a temp directory, runs the full pipeline, and
reports wall time plus documents and citations per second. Use --jobs
to compare parallel against single-threaded runs.
"""

import argparse
import tempfile
import time

from citecode.config import PipelineConfig
from citecode.pipeline import load_resources, read_manifest, run_pipeline
from citecode.synth import write_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=1000, help="corpus size")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--sentences", type=int, default=50, help="sentences per document")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers")
    parser.add_argument("--repeat", type=int, default=1, help="pipeline runs to time")
    args = parser.parse_args()

    config = PipelineConfig()
    config.validate()
    resources = load_resources(config)

    with tempfile.TemporaryDirectory() as tmp:
        manifest = write_corpus(
            tmp, args.docs, seed=args.seed, sentences=args.sentences
        )
        entries = read_manifest(manifest)

        best = None
        for _ in range(args.repeat):
            started = time.perf_counter()
            result = run_pipeline(entries, config, resources, jobs=args.jobs)
            elapsed = time.perf_counter() - started
            if best is None or elapsed < best:
                best = elapsed

        n_docs = len(result.documents)
        n_citations = result.summary["citations"]["total"]
        print(f"documents:      {n_docs}")
        print(f"citations:      {n_citations}")
        print(f"jobs:           {args.jobs}")
        print(f"best wall time: {best:.3f}s over {args.repeat} run(s)")
        print(f"throughput:     {n_docs / best:.1f} docs/s, {n_citations / best:.1f} citations/s")


if __name__ == "__main__":
    main()
