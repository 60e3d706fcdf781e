"""Benchmark the numba and numpy kernel variants head to head.

Times the two hot kernels of the graphical extractor (pairwise edge
weights, damped power iteration) on synthetic candidate sets of rising
size, plus the end-to-end labeling pipeline under each path. The numba
variants are used directly, so no env flag juggling is needed; run with
INFLO_NUMBA=0 to check what the package itself would select.

Usage: python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import statistics
import sys
import time
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from inflo import _kernels  # noqa: E402


def synthetic_graph(n_candidates: int, seed: int):
    rng = np.random.default_rng(seed)
    counts = rng.integers(1, 6, size=n_candidates).astype(np.int64)
    total = int(counts.sum())
    flat = rng.permutation(np.arange(total, dtype=np.int64) * 2 + 1)
    starts = np.zeros(n_candidates, dtype=np.int64)
    np.cumsum(counts[:-1], out=starts[1:])
    topics = rng.integers(0, max(2, n_candidates // 3), size=n_candidates).astype(np.int64)
    return starts, counts, flat, topics


def time_fn(fn, *args, repeats: int) -> float:
    fn(*args)  # warm-up (includes JIT compilation for the numba path)
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples) * 1000.0


def bench_kernels(repeats: int) -> None:
    if not _kernels.USING_NUMBA:
        print("note: numba unavailable or disabled; both columns run numpy\n")
    jit_pw = _kernels.pair_weights
    jit_pi = _kernels.power_iteration
    print(f"{'n':>5} {'pair_w numba':>14} {'pair_w numpy':>14} "
          f"{'rank numba':>12} {'rank numpy':>12}")
    for n in (10, 30, 100, 300):
        starts, counts, flat, topics = synthetic_graph(n, seed=n)
        t_pw_jit = time_fn(jit_pw, starts, counts, flat, topics, repeats=repeats)
        t_pw_np = time_fn(_kernels.pair_weights_numpy, starts, counts, flat, topics,
                          repeats=repeats)
        weights = _kernels.pair_weights_numpy(starts, counts, flat, topics)
        t_pi_jit = time_fn(jit_pi, weights, 0.85, 1e-8, 200, repeats=repeats)
        t_pi_np = time_fn(_kernels.power_iteration_numpy, weights, 0.85, 1e-8, 200,
                          repeats=repeats)
        print(f"{n:>5} {t_pw_jit:>12.3f}ms {t_pw_np:>12.3f}ms "
              f"{t_pi_jit:>10.3f}ms {t_pi_np:>10.3f}ms")


def bench_pipeline(repeats: int) -> None:
    import json

    from inflo import classify, corpus, service

    fixtures = ROOT / "tests" / "fixtures"
    training = [corpus.ingest(r) for r in
                json.loads((fixtures / "training_feed.json").read_text())["articles"]]
    by_cat = {}
    for doc in training:
        by_cat.setdefault(doc.category, []).append(doc)
    models = corpus.build_model_set(by_cat)
    clf = classify.train(training, classify.build_vocab(training))
    body = " ".join(r["content"] for r in
                    json.loads((fixtures / "training_feed.json").read_text())["articles"])
    doc = corpus.build_document(title="probe", body=" ".join(body.split()[:1000]))
    t = time_fn(lambda: service.label_pipeline(doc, models, clf), repeats=repeats)
    path = "numba" if _kernels.USING_NUMBA else "numpy"
    print(f"\nlabel_pipeline (1000-word doc, {path} path): {t:.1f} ms median")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    bench_kernels(args.repeats)
    bench_pipeline(args.repeats)


if __name__ == "__main__":
    main()
