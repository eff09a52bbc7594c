"""Learners: linear discriminant analysis, one-vs-rest logistic regression,
and hierarchical agglomerative clustering.

LDA pools the within-class covariance and inverts it through a rank-revealing
pseudo-inverse so it stays usable when features outnumber samples.  Logistic
regression minimizes mean logistic loss plus a ridge (solved by L-BFGS) or a
lasso penalty (solved by proximal gradient with acceleration, which yields
exact zeros).  Clustering is classic Lance-Williams agglomeration with a
variance-increase criterion for ward linkage.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .errors import InvalidConfigError, InvalidInputError

AFFINITIES = ("euclidean", "manhattan", "cosine")
LINKAGES = ("single", "complete", "average", "ward")
PENALTIES = ("l1", "l2")


# ----------------------------------------------------------------------
# linear discriminant analysis
# ----------------------------------------------------------------------

@dataclass
class LdaModel:
    classes: list
    means: np.ndarray          # (n_classes, n_features)
    log_priors: np.ndarray     # (n_classes,)
    cov_basis: np.ndarray      # (n_features, r) orthonormal
    cov_inv_eigs: np.ndarray   # (r,) inverse eigenvalues of the pooled covariance

    def pooled_covariance_pinv(self) -> np.ndarray:
        """Materialized pseudo-inverse (kept factored internally)."""
        return (self.cov_basis * self.cov_inv_eigs) @ self.cov_basis.T

    def scores(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if x.shape[1] != self.means.shape[1]:
            raise InvalidInputError(
                f"feature dimension {x.shape[1]} does not match model "
                f"({self.means.shape[1]})")
        # (pinv x, mu_s) - 0.5 (pinv mu_s, mu_s) + log prior
        proj_means = (self.means @ self.cov_basis) * self.cov_inv_eigs  # (S, r)
        lin = (x @ self.cov_basis) @ proj_means.T                       # (m, S)
        quad = 0.5 * np.sum(proj_means * (self.means @ self.cov_basis), axis=1)
        return lin - quad + self.log_priors


def lda_fit(x: np.ndarray, labels, rel_tol: float = 1e-10) -> LdaModel:
    """Fit class means, priors, and the pooled-covariance pseudo-inverse.

    The pooled scatter is factored as C^T C / (m - S) with C the within-class
    centered data, so the pseudo-inverse costs an SVD of C instead of an SVD
    of the full feature-by-feature covariance.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise InvalidInputError("expected (n_samples, n_features)")
    labels = list(labels)
    if len(labels) != x.shape[0]:
        raise InvalidInputError("one label per sample required")
    classes = sorted(set(labels))
    if len(classes) < 2:
        raise InvalidInputError("need at least 2 classes")
    m, n = x.shape
    s_cnt = len(classes)
    means = np.empty((s_cnt, n))
    priors = np.empty(s_cnt)
    centered = np.empty_like(x)
    arr_labels = np.asarray(labels, dtype=object)
    for i, cls in enumerate(classes):
        mask = arr_labels == cls
        cnt = int(mask.sum())
        if cnt == 0:
            raise InvalidInputError(f"class {cls!r} has no samples")
        means[i] = x[mask].mean(axis=0)
        priors[i] = cnt / m
        centered[mask] = x[mask] - means[i]
    dof = max(m - s_cnt, 1)
    # economy SVD of C: pooled covariance = V diag(sv^2/dof) V^T
    _, sv, vt = np.linalg.svd(centered, full_matrices=False)
    eigs = sv * sv / dof
    if eigs.size and eigs[0] > 0:
        keep = eigs >= rel_tol * eigs[0]
    else:
        keep = np.zeros(eigs.shape, dtype=bool)
    basis = vt[keep].T
    inv_eigs = 1.0 / eigs[keep] if keep.any() else np.zeros(0)
    return LdaModel(
        classes=classes,
        means=means,
        log_priors=np.log(priors),
        cov_basis=basis,
        cov_inv_eigs=inv_eigs,
    )


def lda_predict(model: LdaModel, x: np.ndarray) -> list:
    """Argmax of the discriminant scores; ties go to the lowest class index."""
    scores = model.scores(x)
    idx = np.argmax(scores, axis=1)  # first maximum wins ties
    return [model.classes[i] for i in idx]


# ----------------------------------------------------------------------
# one-vs-rest logistic regression
# ----------------------------------------------------------------------

@dataclass
class LrModel:
    classes: list
    weights: np.ndarray      # (n_classes, n_features)
    intercepts: np.ndarray   # (n_classes,)
    penalty: str
    inverse_reg: float       # C = 1/lambda
    converged: bool
    n_iter: int


def _logistic_loss_grad(wb: np.ndarray, x: np.ndarray, y: np.ndarray,
                        lam: float, penalty: str):
    """Mean logistic loss with optional ridge term (intercept unpenalized)."""
    w, b = wb[:-1], wb[-1]
    z = y * (x @ w + b)
    loss = float(np.mean(np.logaddexp(0.0, -z)))
    sig = 1.0 / (1.0 + np.exp(np.clip(z, -500, 500)))  # sigma(-z)
    coef = -y * sig / x.shape[0]
    grad_w = x.T @ coef
    grad_b = float(np.sum(coef))
    if penalty == "l2":
        loss += lam * float(w @ w)
        grad_w = grad_w + 2.0 * lam * w
    return loss, np.concatenate([grad_w, [grad_b]])


def _soft_threshold(v: np.ndarray, t: float) -> np.ndarray:
    return np.sign(v) * np.maximum(np.abs(v) - t, 0.0)


def _fit_binary_l2(x, y, lam, grad_tol, max_iter, x0):
    res = minimize(
        _logistic_loss_grad, x0, args=(x, y, lam, "l2"),
        method="L-BFGS-B", jac=True,
        options={"maxiter": max_iter, "gtol": grad_tol, "ftol": 1e-16,
                 "maxfun": 10 * max_iter},
    )
    _, grad = _logistic_loss_grad(res.x, x, y, lam, "l2")
    converged = bool(np.max(np.abs(grad)) <= grad_tol)
    return res.x, converged, int(res.nit)


def _fit_binary_l1(x, y, lam, grad_tol, max_iter, x0):
    """FISTA with adaptive restart on smooth logistic loss + lam * ||w||_1
    (intercept unpenalized).  The proximal step yields exact zeros."""
    m, n = x.shape
    # Lipschitz bound of the smooth part: sigma_max([x, 1])^2 / (4 m)
    aug_norm = np.linalg.norm(np.column_stack([x, np.ones(m)]), 2)
    lip = aug_norm * aug_norm / (4.0 * m)
    step = 1.0 / max(lip, 1e-12)
    wb = x0.copy()
    zb = wb.copy()
    t_acc = 1.0
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        _, grad = _logistic_loss_grad(zb, x, y, 0.0, "none")
        cand = zb - step * grad
        new = np.empty_like(cand)
        new[:-1] = _soft_threshold(cand[:-1], step * lam)
        new[-1] = cand[-1]
        residual = np.max(np.abs(new - zb)) / step
        if residual <= grad_tol:
            wb = new
            converged = True
            break
        # restart the momentum when it points against the step direction
        if np.dot(zb - new, new - wb) > 0:
            t_acc = 1.0
        t_next = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t_acc * t_acc))
        zb = new + ((t_acc - 1.0) / t_next) * (new - wb)
        wb = new
        t_acc = t_next
    return wb, converged, it


def lr_fit(x: np.ndarray, labels, penalty: str = "l2", inverse_reg: float = 1.0,
           grad_tol: float = 1e-6, max_iter: int = 5000,
           x0: np.ndarray | None = None) -> LrModel:
    """One-vs-rest regularized logistic regression.

    The objective per class is mean log(1 + exp(-y (w.x + b))) plus
    lambda ||w||_2^2 or lambda ||w||_1 with lambda = 1/inverse_reg.  A class
    that fails to converge produces a warning; the model is still returned.
    """
    if penalty not in PENALTIES:
        raise InvalidConfigError(f"penalty must be one of {PENALTIES}")
    if inverse_reg <= 0:
        raise InvalidConfigError("inverse_reg must be positive")
    x = np.asarray(x, dtype=float)
    labels = list(labels)
    classes = sorted(set(labels))
    if len(classes) < 2:
        raise InvalidInputError("need at least 2 classes")
    lam = 1.0 / inverse_reg
    n = x.shape[1]
    weights = np.empty((len(classes), n))
    intercepts = np.empty(len(classes))
    all_converged = True
    worst_iter = 0
    for i, cls in enumerate(classes):
        y = np.where(np.asarray(labels, dtype=object) == cls, 1.0, -1.0)
        start = np.zeros(n + 1) if x0 is None else np.asarray(x0, dtype=float)
        if penalty == "l2":
            wb, conv, n_it = _fit_binary_l2(x, y, lam, grad_tol, max_iter, start)
        else:
            wb, conv, n_it = _fit_binary_l1(x, y, lam, grad_tol, max_iter, start)
        weights[i] = wb[:-1]
        intercepts[i] = wb[-1]
        all_converged &= conv
        worst_iter = max(worst_iter, n_it)
        if not conv:
            warnings.warn(
                f"logistic regression for class {cls!r} did not reach "
                f"tolerance {grad_tol} in {max_iter} iterations",
                RuntimeWarning, stacklevel=2)
    return LrModel(classes, weights, intercepts, penalty, inverse_reg,
                   all_converged, worst_iter)


def lr_scores(model: LrModel, x: np.ndarray) -> np.ndarray:
    """Per-class sigmoid scores, shape (n_samples, n_classes)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.shape[1] != model.weights.shape[1]:
        raise InvalidInputError(
            f"feature dimension {x.shape[1]} does not match model "
            f"({model.weights.shape[1]})")
    z = x @ model.weights.T + model.intercepts
    return 1.0 / (1.0 + np.exp(-z))


def lr_predict(model: LrModel, x: np.ndarray) -> list:
    scores = lr_scores(model, x)
    idx = np.argmax(scores, axis=1)
    return [model.classes[i] for i in idx]


# ----------------------------------------------------------------------
# hierarchical agglomerative clustering
# ----------------------------------------------------------------------

def pairwise_distances(x: np.ndarray, affinity: str) -> np.ndarray:
    """Symmetric distance matrix with zero diagonal."""
    if affinity not in AFFINITIES:
        raise InvalidConfigError(f"affinity must be one of {AFFINITIES}")
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise InvalidInputError("expected (n_samples, n_features)")
    if affinity == "euclidean":
        sq = np.sum(x * x, axis=1)
        d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
        d = np.sqrt(np.maximum(d2, 0.0))
    elif affinity == "manhattan":
        d = np.sum(np.abs(x[:, None, :] - x[None, :, :]), axis=-1)
    else:
        norms = np.linalg.norm(x, axis=1)
        if np.any(norms == 0):
            raise InvalidInputError("cosine affinity undefined for zero vectors")
        sim = (x @ x.T) / np.outer(norms, norms)
        d = 1.0 - np.clip(sim, -1.0, 1.0)
    np.fill_diagonal(d, 0.0)
    return (d + d.T) / 2.0


@dataclass
class LinkageTree:
    """Merge history: (node_a, node_b, height, new_size) rows, length m-1.

    Leaves are 0..m-1; merge i creates node m+i.  node_a < node_b.
    """

    merges: list = field(default_factory=list)
    n_leaves: int = 0
    affinity: str = "euclidean"
    linkage: str = "average"


def hac_fit(x: np.ndarray, linkage: str, affinity: str = "euclidean",
            distances: np.ndarray | None = None) -> LinkageTree:
    """Agglomerate with the requested linkage; deterministic tie-breaking.

    Ties on the merge distance pick the pair with the lexicographically
    smallest (min cluster id, max cluster id).
    """
    if linkage not in LINKAGES:
        raise InvalidConfigError(f"linkage must be one of {LINKAGES}")
    if linkage == "ward" and affinity != "euclidean":
        raise InvalidConfigError("ward linkage requires euclidean affinity")
    if distances is None:
        d = pairwise_distances(x, affinity)
    else:
        d = np.asarray(distances, dtype=float)
    m = d.shape[0]
    if m < 2:
        raise InvalidInputError("need at least 2 samples")
    # ward recurrence runs on squared distances; heights take the square root
    w = d * d if linkage == "ward" else d.copy()
    size = {i: 1 for i in range(m)}
    # rows indexed by slot; ids maps slot -> current cluster id
    ids = list(range(m))
    merges = []
    next_id = m
    masked = w.copy()
    np.fill_diagonal(masked, np.inf)
    for _ in range(m - 1):
        dist = float(masked.min())
        cand = np.argwhere(masked == dist)
        ai = bi = None
        best_key = None
        for ci, cj in cand:
            if ci >= cj:
                continue
            key = (min(ids[ci], ids[cj]), max(ids[ci], ids[cj]))
            if best_key is None or key < best_key:
                best_key = key
                ai, bi = int(ci), int(cj)
        ia, ib = ids[ai], ids[bi]
        na, nb = size[ia], size[ib]
        height = float(np.sqrt(max(dist, 0.0))) if linkage == "ward" else float(dist)
        merges.append((min(ia, ib), max(ia, ib), height, na + nb))
        # Lance-Williams update into slot ai, retire slot bi
        others = np.isfinite(masked[ai]) | np.isfinite(masked[bi])
        others[ai] = others[bi] = False
        dac = masked[ai, others]
        dbc = masked[bi, others]
        if linkage == "single":
            new = np.minimum(dac, dbc)
        elif linkage == "complete":
            new = np.maximum(dac, dbc)
        elif linkage == "average":
            new = (na * dac + nb * dbc) / (na + nb)
        else:  # ward on squared distances
            nc = np.array([size[ids[ci]] for ci in np.flatnonzero(others)], dtype=float)
            new = ((na + nc) * dac + (nb + nc) * dbc - nc * dist) / (na + nb + nc)
        masked[ai, others] = new
        masked[others, ai] = new
        masked[bi, :] = np.inf
        masked[:, bi] = np.inf
        masked[ai, ai] = np.inf
        ids[ai] = next_id
        size[next_id] = na + nb
        next_id += 1
    return LinkageTree(merges=merges, n_leaves=m, affinity=affinity, linkage=linkage)


def cut_tree(tree: LinkageTree, k: int) -> list[int]:
    """Labels after undoing the last k-1 merges; label ids follow the order
    of first appearance when scanning samples by index."""
    m = tree.n_leaves
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must lie in 1..{m}")
    parent = list(range(m + len(tree.merges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for step, (a, b, _, _) in enumerate(tree.merges[:m - k]):
        new = m + step
        parent[find(a)] = new
        parent[find(b)] = new
    labels = []
    seen: dict = {}
    for i in range(m):
        root = find(i)
        if root not in seen:
            seen[root] = len(seen)
        labels.append(seen[root])
    return labels


def dendrogram_export(tree: LinkageTree, leaf_names: list) -> dict:
    """Nested merge record consumable by external plotters."""
    if len(leaf_names) != tree.n_leaves:
        raise InvalidInputError(
            f"{len(leaf_names)} names for {tree.n_leaves} leaves")
    nodes: dict = {
        i: {"name": str(leaf_names[i]), "height": 0.0}
        for i in range(tree.n_leaves)
    }
    for step, (a, b, height, count) in enumerate(tree.merges):
        nodes[tree.n_leaves + step] = {
            "height": float(height),
            "count": int(count),
            "children": [nodes.pop(a), nodes.pop(b)],
        }
    roots = list(nodes.values())
    root = roots[0] if len(roots) == 1 else {"height": None, "children": roots}
    return {
        "affinity": tree.affinity,
        "linkage": tree.linkage,
        "n_leaves": tree.n_leaves,
        "root": root,
    }


def save_model(path: str, model) -> None:
    """Serialize an LDA or LR model to .npz at full precision."""
    if isinstance(model, LdaModel):
        header = {"kind": "lda", "classes": model.classes}
        arrays = {
            "means": model.means,
            "log_priors": model.log_priors,
            "cov_basis": model.cov_basis,
            "cov_inv_eigs": model.cov_inv_eigs,
        }
    elif isinstance(model, LrModel):
        header = {
            "kind": "lr", "classes": model.classes, "penalty": model.penalty,
            "inverse_reg": model.inverse_reg, "converged": model.converged,
            "n_iter": model.n_iter,
        }
        arrays = {"weights": model.weights, "intercepts": model.intercepts}
    else:
        raise InvalidInputError(f"cannot serialize {type(model).__name__}")
    np.savez(path, header=np.array(json.dumps(header)), **arrays)


def load_model(path: str):
    with np.load(path, allow_pickle=False) as data:
        header = json.loads(str(data["header"]))
        if header["kind"] == "lda":
            return LdaModel(
                classes=header["classes"],
                means=data["means"],
                log_priors=data["log_priors"],
                cov_basis=data["cov_basis"],
                cov_inv_eigs=data["cov_inv_eigs"],
            )
        if header["kind"] == "lr":
            return LrModel(
                classes=header["classes"],
                weights=data["weights"],
                intercepts=data["intercepts"],
                penalty=header["penalty"],
                inverse_reg=header["inverse_reg"],
                converged=header["converged"],
                n_iter=header["n_iter"],
            )
    raise InvalidInputError(f"unknown model kind in {path}")
