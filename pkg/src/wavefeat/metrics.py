"""Classification and clustering quality scores.

Clustering scores are pair-counting / information-theoretic measures over a
shared contingency table; the chance-corrected variants (adjusted Rand,
adjusted mutual information) follow the usual permutation-model expectations,
with the exact hypergeometric sum for E[MI] and natural-log entropies.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, lgamma, log, sqrt, exp

from .errors import InvalidInputError


@dataclass(frozen=True)
class ContingencyTable:
    """Joint label counts with row/column marginals."""

    counts: dict          # (true_label, pred_label) -> count
    row_sums: dict        # true_label -> count
    col_sums: dict        # pred_label -> count
    total: int

    @classmethod
    def from_labels(cls, labels_true, labels_pred) -> "ContingencyTable":
        if len(labels_true) != len(labels_pred):
            raise InvalidInputError("label sequences differ in length")
        if len(labels_true) == 0:
            raise InvalidInputError("empty label sequences")
        counts: dict = {}
        rows: dict = {}
        cols: dict = {}
        for t, p in zip(labels_true, labels_pred):
            counts[(t, p)] = counts.get((t, p), 0) + 1
            rows[t] = rows.get(t, 0) + 1
            cols[p] = cols.get(p, 0) + 1
        return cls(counts, rows, cols, len(labels_true))


def accuracy(labels_true, labels_pred) -> float:
    """Fraction of positions where the two sequences agree."""
    if len(labels_true) != len(labels_pred):
        raise InvalidInputError("label sequences differ in length")
    if len(labels_true) == 0:
        raise InvalidInputError("empty label sequences")
    hits = sum(1 for t, p in zip(labels_true, labels_pred) if t == p)
    return hits / len(labels_true)


def f1_weighted(labels_true, labels_pred) -> float:
    """Per-class F1 averaged with true-class support weights.

    A class with zero precision+recall contributes F1 = 0.
    """
    table = ContingencyTable.from_labels(labels_true, labels_pred)
    total = table.total
    score = 0.0
    for cls, support in table.row_sums.items():
        tp = table.counts.get((cls, cls), 0)
        pred_cnt = table.col_sums.get(cls, 0)
        precision = tp / pred_cnt if pred_cnt else 0.0
        recall = tp / support
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        score += f1 * (support / total)
    return score


def _pair_sums(table: ContingencyTable) -> tuple[int, int, int]:
    together_both = sum(comb(v, 2) for v in table.counts.values())
    together_true = sum(comb(v, 2) for v in table.row_sums.values())
    together_pred = sum(comb(v, 2) for v in table.col_sums.values())
    return together_both, together_true, together_pred


def adjusted_rand(labels_true, labels_pred) -> float:
    """Rand index corrected for chance under fixed marginals.

    Defined as 1 when both partitions are all singletons or both are a
    single cluster (the chance correction degenerates there).
    """
    table = ContingencyTable.from_labels(labels_true, labels_pred)
    if table.total < 2:
        raise InvalidInputError("need at least 2 samples")
    tb, tt, tp = _pair_sums(table)
    pairs = comb(table.total, 2)
    expected = tt * tp / pairs
    max_index = 0.5 * (tt + tp)
    if max_index == expected:
        return 1.0
    return (tb - expected) / (max_index - expected)


def fowlkes_mallows(labels_true, labels_pred) -> float:
    """Geometric mean of pair-precision and pair-recall; 0 if either
    denominator factor is 0."""
    table = ContingencyTable.from_labels(labels_true, labels_pred)
    if table.total < 2:
        raise InvalidInputError("need at least 2 samples")
    tb, tt, tp = _pair_sums(table)
    if tt == 0 or tp == 0:
        return 0.0
    return tb / sqrt(tt * tp)


def _entropy(sums: dict, n: int) -> float:
    h = 0.0
    for v in sums.values():
        if v > 0:
            p = v / n
            h -= p * log(p)
    return h


def mutual_info(labels_true, labels_pred) -> float:
    """Natural-log mutual information of the two labelings."""
    table = ContingencyTable.from_labels(labels_true, labels_pred)
    n = table.total
    mi = 0.0
    for (t, p), nij in table.counts.items():
        if nij > 0:
            mi += (nij / n) * log(n * nij / (table.row_sums[t] * table.col_sums[p]))
    return mi


def expected_mutual_info(table: ContingencyTable) -> float:
    """Exact permutation-model expectation of MI for fixed marginals.

    Sums nij/n * log(n*nij/(ai*bj)) against the hypergeometric probability
    of each feasible cell value, evaluated with log-gamma arithmetic.
    """
    n = table.total
    lg = lgamma
    log_n_fact = lg(n + 1)
    emi = 0.0
    for ai in table.row_sums.values():
        for bj in table.col_sums.values():
            lo = max(1, ai + bj - n)
            hi = min(ai, bj)
            if lo > hi:
                continue
            base = (lg(ai + 1) + lg(bj + 1) + lg(n - ai + 1) + lg(n - bj + 1)
                    - log_n_fact)
            for nij in range(lo, hi + 1):
                log_p = base - (lg(nij + 1) + lg(ai - nij + 1) + lg(bj - nij + 1)
                                + lg(n - ai - bj + nij + 1))
                emi += (nij / n) * log(n * nij / (ai * bj)) * exp(log_p)
    return emi


def adjusted_mutual_info(labels_true, labels_pred) -> float:
    """Mutual information corrected for chance, normalized by the mean
    entropy.  Degenerate denominator: 1 for identical partitions, else 0."""
    table = ContingencyTable.from_labels(labels_true, labels_pred)
    n = table.total
    if n < 2:
        raise InvalidInputError("need at least 2 samples")
    mi = mutual_info(labels_true, labels_pred)
    emi = expected_mutual_info(table)
    mean_h = 0.5 * (_entropy(table.row_sums, n) + _entropy(table.col_sums, n))
    denom = mean_h - emi
    if abs(denom) < 1e-15:
        return 1.0 if _same_partition(table) else 0.0
    return (mi - emi) / denom


def _same_partition(table: ContingencyTable) -> bool:
    # identical as partitions: every row and column hits exactly one cell
    return (len(table.counts) == len(table.row_sums) == len(table.col_sums))
