"""Sampling experiments on isolated words and class composition.

Sample ``i`` of an experiment draws from its own Philox stream keyed by
``(seed, i)``, so results do not depend on batching or worker count.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import batch
from .identity import is_locally_isolated, trial_generator
from .minmax import ClassInterval, equivalent_swaps
from .signature import SupportCloud
from .words import Word, swap_at

CSV_COLUMNS = ("experiment", "param", "estimate", "ci_low", "ci_high", "samples", "seed")
Z95 = 1.959963984540054


@dataclass(frozen=True)
class StatRow:
    experiment: str
    param: str
    estimate: float
    half_width: float
    samples: int
    seed: int | None = None

    @property
    def ci_low(self):
        return max(0.0, self.estimate - self.half_width)

    @property
    def ci_high(self):
        return min(1.0, self.estimate + self.half_width)

    def csv_row(self) -> list:
        return [
            self.experiment,
            self.param,
            f"{self.estimate:.6f}",
            f"{self.ci_low:.6f}",
            f"{self.ci_high:.6f}",
            self.samples,
            "" if self.seed is None else self.seed,
        ]


def proportion_row(experiment, param, hits, samples, seed=None) -> StatRow:
    """Normal-approximation 95% interval for a binomial proportion."""
    p = hits / samples
    return StatRow(experiment, param, p, Z95 * math.sqrt(p * (1 - p) / samples), samples, seed)


def write_csv(rows, fh) -> None:
    wr = csv.writer(fh, lineterminator="\n")
    wr.writerow(CSV_COLUMNS)
    for r in rows:
        wr.writerow(r.csv_row())


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def metadata(config: dict) -> dict:
    from . import __version__

    return {
        "schema": "tropid.stats.meta/1",
        "version": __version__,
        "rng": "numpy Philox, stream (seed, sample index)",
        "ci": "normal approximation, 95%",
        "config": config,
    }


# --- sampling ------------------------------------------------------------------


def sample_word(c, seed: int, stream: int) -> Word:
    """Uniform word of content ``c`` from stream ``stream`` of ``seed``."""
    c = tuple(int(x) for x in c)
    if sum(c) == 0:
        raise ValueError("content must be nonzero")
    letters = np.repeat(np.arange(len(c)), c)
    return Word(tuple(trial_generator(seed, stream).permutation(letters)), len(c))


def _isolated_chunk(args):
    c, n, seed, start, stop = args
    hits = 0
    for i in range(start, stop):
        hits += is_locally_isolated(sample_word(c, seed, i), n)
    return hits


def _chunks(samples, threads):
    size = max(1, math.ceil(samples / max(1, threads * 4)))
    return [(s, min(samples, s + size)) for s in range(0, samples, size)]


def isolated_fraction(c, n: int, samples: int, seed: int = 0, threads: int = 1) -> StatRow:
    """Estimated fraction of locally isolated words of content ``c`` in UT_n."""
    if samples < 1:
        raise ValueError("samples must be positive")
    c = tuple(c)
    jobs = [(c, n, seed, a, b) for a, b in _chunks(samples, threads)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(_isolated_chunk, jobs))
    else:
        hits = sum(map(_isolated_chunk, jobs))
    return proportion_row("isolated", f"n={n};content={','.join(map(str, c))}", hits, samples, seed)


def exact_isoterm_fraction(la: int, lb: int) -> Fraction:
    """Exact fraction of UT_2 isoterms in W(la, lb), by exhaustive enumeration."""
    total = comb(la + lb, la)
    in_classes = 0
    chunk_rows = 1 << 18
    W = batch.words_array(la, lb)
    keys = np.concatenate(
        [batch.degree_one_keys(W[s:s + chunk_rows]) for s in range(0, len(W), chunk_rows)]
    )
    _, counts = np.unique(keys, axis=0, return_counts=True)
    in_classes = int(counts[counts > 1].sum())
    return Fraction(total - in_classes, total)


# --- UT_3 / UT_2 neighbour ratios ------------------------------------------------


@dataclass
class RatioResult:
    length: int
    ratios: list
    skipped: int
    seed: int

    def median(self):
        return float(np.median(self.ratios)) if self.ratios else float("nan")


def neighbor_ratio(w: Word, n: int = 3):
    """|{UT_n-equivalent neighbours}| / |{UT_2-equivalent neighbours}|, or None."""
    cands = equivalent_swaps(w)
    if not cands:
        return None
    clouds = {d: SupportCloud(w, d) for d in range(2, n)}
    good = 0
    for k in cands:
        u = swap_at(w, k)
        if all(clouds[d].same_as(SupportCloud(u, d)) for d in range(2, n)):
            good += 1
    return Fraction(good, len(cands))


def neighbor_ratio_ut3(length: int, samples: int, seed: int = 0) -> RatioResult:
    if length % 2:
        raise ValueError("length must be even")
    if samples < 1:
        raise ValueError("samples must be positive")
    ratios, skipped = [], 0
    for i in range(samples):
        r = neighbor_ratio(sample_word((length // 2, length // 2), seed, i), 3)
        if r is None:
            skipped += 1
        else:
            ratios.append(r)
    return RatioResult(length, ratios, skipped, seed)


# --- class composition ----------------------------------------------------------


@dataclass(frozen=True)
class CompositionRow:
    la: int
    lb: int
    words: int
    classes: int
    isoterms: int
    twins: int
    larger: int

    @property
    def class_ratio(self):
        return self.classes / self.words


def class_composition(length: int) -> list:
    """Per l_a, counts of UT_2 classes of size 1, 2 and more."""
    if length < 2:
        raise ValueError("length must be at least 2")
    rows = []
    for la in range(length + 1):
        lb = length - la
        W = batch.words_array(la, lb)
        _, counts = np.unique(batch.degree_one_keys(W), axis=0, return_counts=True)
        rows.append(
            CompositionRow(
                la,
                lb,
                len(W),
                len(counts),
                int((counts == 1).sum()),
                int((counts == 2).sum()),
                int((counts > 2).sum()),
            )
        )
    return rows


def largest_class(la: int, lb: int) -> ClassInterval:
    """A largest UT_2 class of W(la, lb); ties go to the least minimum word."""
    from .minmax import class_interval

    W = batch.words_array(la, lb)
    _, first, counts = np.unique(batch.degree_one_keys(W), axis=0, return_index=True, return_counts=True)
    best = counts.max()
    # rows are lexicographic, so the smallest first index among maximal
    # classes has the least word; map to its class interval
    cands = [class_interval(batch.to_word(W[i])) for i in first[counts == best]]
    return min(cands, key=lambda ci: str(ci.min_word))
