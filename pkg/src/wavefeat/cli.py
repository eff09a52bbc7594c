"""Command-line entry points.

Commands: synth (write a synthetic dataset), gridsearch (two-stage
cross-validated search + repeated CV of the winners), train (fit one
pipeline on the full dataset and serialize it), cluster (clustering search +
full-dataset clustering with dendrogram export), report (render a run
manifest; optionally dump the wavelet filter registry).

Exit codes: 0 ok, 2 usage/config error, 3 data error, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import __version__, dataio, dwt, models, synth, wtt
from .errors import (DataFormatError, InvalidConfigError, InvalidInputError,
                     NumericalError)
from .grids import grid_for_task, load_grid_document
from .harness import (DwtSpec, PipelineConfig, WttSpec, final_clustering,
                      fit_pipeline, grid_search, repeated_cv)

DERIV_NAMES = {0: "f", 1: "f'", 2: "f''"}


# ----------------------------------------------------------------------
# small helpers
# ----------------------------------------------------------------------

def _digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_manifest(out_dir: str, payload: dict) -> None:
    payload = {"tool": "wavefeat", "version": __version__, **payload}
    with open(os.path.join(out_dir, "manifest.json"), "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _self_describing_header(kind: str) -> str:
    return f"# wavefeat v{__version__} {kind}\n"


def _write_leaderboard(path: str, result) -> None:
    with open(path, "w") as fh:
        fh.write(_self_describing_header("leaderboard"))
        fh.write("rank\tscore\tmetric\tlabel\tconfig\n")
        for rank, report in enumerate(result.leaderboard, start=1):
            score = report.means[result.selection_metric]
            fh.write(f"{rank}\t{score:.6f}\t{result.selection_metric}\t"
                     f"{report.config.label()}\t"
                     f"{json.dumps(report.config.to_dict(), sort_keys=True)}\n")


def _feature_space(config: PipelineConfig, split_sign: bool) -> str:
    if config.decomposition is None:
        return "original"
    base = "DWT" if isinstance(config.decomposition, DwtSpec) else "WTT"
    if split_sign:
        return base + (" (sign)" if config.transform.kind == "sign" else " (thr)")
    return base


def _load_data(args) -> "dataio.LabeledDataset":
    if not args.data:
        raise InvalidConfigError("--data is required for this command")
    return dataio.load_dataset(args.data, args.format)


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def cmd_synth(args) -> int:
    if args.config:
        with open(args.config) as fh:
            doc = json.load(fh)
        doc.pop("comment", None)
        if args.seed is not None:
            doc["seed"] = args.seed
        for key in ("samples_per_class", "common_peaks", "class_peaks"):
            if key in doc:
                doc[key] = tuple(tuple(v) if isinstance(v, list) else v
                                 for v in doc[key])
        spec = synth.SyntheticSpec(**doc)
    else:
        spec = synth.SyntheticSpec(seed=7 if args.seed is None else args.seed)
    data = synth.synth_dataset(spec)
    out = args.out or os.path.join(args.out_dir or ".", "dataset.csv")
    os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
    dataio.save_dataset(out, data, args.format)
    print(f"wrote {data.n_samples} samples x {len(data.wavenumbers)} points "
          f"({len(set(data.labels))} classes) to {out}")
    return 0


def _classification_table(cells: dict, model_kind: str, spaces: list[str]) -> str:
    """Tab-separated train/test accuracy and weighted F1 per feature space
    and derivative order."""
    lines = [_self_describing_header(f"classification table model={model_kind}").rstrip("\n")]
    header = ["feature_space", "part"]
    for metric in ("accuracy", "f1_weighted"):
        for d in (0, 1, 2):
            header.append(f"{metric}:{DERIV_NAMES[d]}")
    lines.append("\t".join(header))
    for space in spaces:
        for part in ("train", "test"):
            row = [space, part]
            for metric in ("accuracy", "f1"):
                for d in (0, 1, 2):
                    rep = cells.get((space, d))
                    if rep is None:
                        row.append("-")
                    else:
                        row.append(f"{rep.means[f'{part}_{metric}']:.3f}")
            lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def cmd_gridsearch(args) -> int:
    t_start = time.perf_counter()
    data = _load_data(args)
    doc = load_grid_document(args.config)
    grid = grid_for_task(doc, "classification")
    seed = 0 if args.seed is None else args.seed
    os.makedirs(args.out_dir, exist_ok=True)

    result = grid_search(grid, data, seed=seed, k=args.folds,
                         stratify=args.stratify, jobs=args.jobs)
    _write_leaderboard(
        os.path.join(args.out_dir, "leaderboard_classification.tsv"), result)

    # winners per (model kind, feature space, derivative), then repeated CV
    winners: dict = {}
    for report in result.leaderboard:
        cfg = report.config
        split_sign = cfg.model.kind == "lda"
        key = (cfg.model.kind, _feature_space(cfg, split_sign),
               cfg.preprocess.derivative_order)
        winners.setdefault(key, report)  # leaderboard is already sorted

    final: dict = {}
    for key, report in winners.items():
        final[key] = repeated_cv(report.config, data, seed=seed + 1,
                                 repeats=args.repeats, k=args.folds,
                                 stratify=args.stratify)

    model_kinds = sorted({k[0] for k in final})
    table_paths = []
    for mk in model_kinds:
        spaces = (["original", "DWT (thr)", "DWT (sign)", "WTT (thr)", "WTT (sign)"]
                  if mk == "lda" else ["original", "DWT", "WTT"])
        cells = {(space, d): rep for (kind, space, d), rep in final.items()
                 if kind == mk}
        path = os.path.join(args.out_dir, f"table_{mk}.tsv")
        with open(path, "w") as fh:
            fh.write(_classification_table(cells, mk, spaces))
        table_paths.append(path)

    _write_manifest(args.out_dir, {
        "command": "gridsearch",
        "seed": seed,
        "folds": args.folds,
        "repeats": args.repeats,
        "stratify": args.stratify,
        "data": {"path": os.path.abspath(args.data), "sha256": _digest(args.data)},
        "grid_size": len(grid),
        "selection_metric": result.selection_metric,
        "best": result.best.to_dict(),
        "winners": {f"{k[0]}|{k[1]}|d{k[2]}": rep.to_dict()
                    for k, rep in final.items()},
        "wall_time_seconds": time.perf_counter() - t_start,
    })
    best = result.best
    print(f"evaluated {len(grid)} configs; best {result.selection_metric}="
          f"{best.means[result.selection_metric]:.4f} for {best.config.label()}")
    for path in table_paths:
        print(f"wrote {path}")
    return 0


def cmd_cluster(args) -> int:
    t_start = time.perf_counter()
    data = _load_data(args)
    doc = load_grid_document(args.config)
    grid = grid_for_task(doc, "clustering")
    seed = 0 if args.seed is None else args.seed
    os.makedirs(args.out_dir, exist_ok=True)

    result = grid_search(grid, data, seed=seed, k=args.folds,
                         stratify=args.stratify, jobs=args.jobs)
    _write_leaderboard(
        os.path.join(args.out_dir, "leaderboard_clustering.tsv"), result)

    winners: dict = {}
    for report in result.leaderboard:
        cfg = report.config
        key = (_feature_space(cfg, False), cfg.preprocess.derivative_order)
        winners.setdefault(key, report)

    finals: dict = {}
    for (space, d), report in winners.items():
        labels, tree, scores, _ = final_clustering(report.config, data)
        dendro = models.dendrogram_export(tree, list(data.labels))
        fname = f"dendrogram_{space.replace(' ', '')}_d{d}.json"
        with open(os.path.join(args.out_dir, fname), "w") as fh:
            json.dump(dendro, fh)
            fh.write("\n")
        finals[(space, d)] = {
            "config": report.config.to_dict(),
            "label": report.config.label(),
            "cv_ari": report.means["ari"],
            "scores": scores,
            "dendrogram": fname,
        }

    spaces = ["original", "DWT", "WTT"]
    table_path = os.path.join(args.out_dir, "table_clustering.tsv")
    with open(table_path, "w") as fh:
        fh.write(_self_describing_header("clustering table"))
        fh.write("score\t" + "\t".join(
            f"{s}:{DERIV_NAMES[d]}" for s in spaces for d in (0, 1, 2)) + "\n")
        for metric, name in (("ari", "adjusted_rand"),
                             ("ami", "adjusted_mutual_info"),
                             ("fm", "fowlkes_mallows")):
            row = [name]
            for s in spaces:
                for d in (0, 1, 2):
                    cell = finals.get((s, d))
                    row.append("-" if cell is None else f"{cell['scores'][metric]:.3f}")
            fh.write("\t".join(row) + "\n")

    # qualitative ordering on the underived column: WTT >= DWT >= original
    def _ari(space):
        cell = finals.get((space, 0))
        return None if cell is None else cell["scores"]["ari"]

    ari_w, ari_d, ari_o = _ari("WTT"), _ari("DWT"), _ari("original")
    if None in (ari_w, ari_d, ari_o):
        ordering_flag = "unavailable"
    else:
        ordering_flag = "pass" if ari_w >= ari_d >= ari_o else "warn"

    _write_manifest(args.out_dir, {
        "command": "cluster",
        "seed": seed,
        "folds": args.folds,
        "stratify": args.stratify,
        "data": {"path": os.path.abspath(args.data), "sha256": _digest(args.data)},
        "grid_size": len(grid),
        "selection_metric": result.selection_metric,
        "winners": {f"{s}|d{d}": cell for (s, d), cell in finals.items()},
        "ari_ordering_wtt_dwt_original": ordering_flag,
        "wall_time_seconds": time.perf_counter() - t_start,
    })
    print(f"evaluated {len(grid)} configs; ARI ordering WTT>=DWT>=original: "
          f"{ordering_flag}")
    print(f"wrote {table_path}")
    return 0


def cmd_train(args) -> int:
    t_start = time.perf_counter()
    data = _load_data(args)
    if not args.config:
        raise InvalidConfigError("train requires --config with one pipeline config")
    with open(args.config) as fh:
        config = PipelineConfig.from_dict(json.load(fh))
    os.makedirs(args.out_dir, exist_ok=True)
    fitted = fit_pipeline(config, data, np.arange(data.n_samples))
    saved = {"pipeline": "pipeline.json"}
    with open(os.path.join(args.out_dir, "pipeline.json"), "w") as fh:
        json.dump({
            "config": config.to_dict(),
            "tau": fitted.tau,
            "scaler": None if fitted.scaler is None else {
                "mean": fitted.scaler.mean.tolist(),
                "std": fitted.scaler.std.tolist(),
            },
        }, fh)
        fh.write("\n")
    if fitted.model is not None:
        models.save_model(os.path.join(args.out_dir, "model.npz"), fitted.model)
        saved["model"] = "model.npz"
    if isinstance(config.decomposition, WttSpec):
        wtt.save_bank(os.path.join(args.out_dir, "bank.npz"),
                      fitted.feature_map.transform.bank)
        saved["bank"] = "bank.npz"
    _write_manifest(args.out_dir, {
        "command": "train",
        "seed": args.seed,
        "data": {"path": os.path.abspath(args.data), "sha256": _digest(args.data)},
        "config": config.to_dict(),
        "outputs": saved,
        "warnings": fitted.warnings,
        "wall_time_seconds": time.perf_counter() - t_start,
    })
    print(f"fitted {config.label()} on {data.n_samples} samples; outputs: "
          f"{', '.join(sorted(saved.values()))}")
    return 0


def cmd_report(args) -> int:
    if args.registry:
        with open(args.registry, "w") as fh:
            fh.write(dwt.dump_registry())
        print(f"wrote filter registry to {args.registry}")
        if not args.run_dir:
            return 0
    if not args.run_dir:
        raise InvalidConfigError("report requires --run-dir (or --registry)")
    manifest_path = os.path.join(args.run_dir, "manifest.json")
    if not os.path.exists(manifest_path):
        raise DataFormatError(f"no manifest.json in {args.run_dir}")
    with open(manifest_path) as fh:
        manifest = json.load(fh)
    print(f"wavefeat run: command={manifest.get('command')} "
          f"version={manifest.get('version')} seed={manifest.get('seed')}")
    data_info = manifest.get("data", {})
    print(f"data: {data_info.get('path')} sha256={data_info.get('sha256', '')[:12]}...")
    winners = manifest.get("winners", {})
    series_rows = []
    for key, entry in sorted(winners.items()):
        if "means" in entry:
            means = entry["means"]
            main = ("test_accuracy" if "test_accuracy" in means else "ari")
            print(f"  {key}: {main}={means[main]:.4f} ({entry.get('label')})")
            series_rows.append((key, means[main]))
        elif "scores" in entry:
            s = entry["scores"]
            print(f"  {key}: ARI={s['ari']:.4f} AMI={s['ami']:.4f} "
                  f"FM={s['fm']:.4f} ({entry.get('label')})")
            series_rows.append((key, s["ari"]))
    if "ari_ordering_wtt_dwt_original" in manifest:
        print(f"ARI ordering WTT>=DWT>=original: "
              f"{manifest['ari_ordering_wtt_dwt_original']}")
    if series_rows:
        out = os.path.join(args.run_dir, "report_series.tsv")
        with open(out, "w") as fh:
            fh.write(_self_describing_header("report series"))
            fh.write("group\tscore\n")
            for key, val in series_rows:
                fh.write(f"{key}\t{val:.6f}\n")
        print(f"wrote {out}")
    print(f"wall time: {manifest.get('wall_time_seconds', float('nan')):.1f}s")
    return 0


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavefeat",
        description="Wavelet / adaptive-filter-bank feature extraction and "
                    "model evaluation for 1-D spectra.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_data=True):
        if needs_data:
            p.add_argument("--data", help="dataset file (.csv or .json)")
        p.add_argument("--format", choices=dataio.FORMATS, default=None,
                       help="dataset format (default: sniff by extension)")
        p.add_argument("--config", default=None,
                       help="grid / pipeline / generator config file (JSON)")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out-dir", default="wavefeat_out")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel evaluations during grid search")
        p.add_argument("--stratify", action="store_true",
                       help="stratify CV folds by class")

    p_synth = sub.add_parser("synth", help="generate a synthetic dataset")
    common(p_synth, needs_data=False)
    p_synth.add_argument("--out", default=None, help="output dataset path")
    p_synth.set_defaults(func=cmd_synth)

    p_grid = sub.add_parser("gridsearch",
                            help="classification grid search + repeated CV")
    common(p_grid)
    p_grid.add_argument("--folds", type=int, default=4)
    p_grid.add_argument("--repeats", type=int, default=25)
    p_grid.set_defaults(func=cmd_gridsearch)

    p_cluster = sub.add_parser("cluster",
                               help="clustering grid search + full-data clustering")
    common(p_cluster)
    p_cluster.add_argument("--folds", type=int, default=4)
    p_cluster.set_defaults(func=cmd_cluster)

    p_train = sub.add_parser("train", help="fit one pipeline, serialize it")
    common(p_train)
    p_train.set_defaults(func=cmd_train)

    p_report = sub.add_parser("report", help="render a run manifest")
    p_report.add_argument("--run-dir", default=None)
    p_report.add_argument("--registry", default=None,
                          help="write the wavelet filter registry to this path")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataFormatError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except (InvalidConfigError, InvalidInputError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
