"""Config-lattice expansion from a structured grid document.

A grid document has one section per pipeline stage; list-valued fields are
crossed in declared order, and the stages combine as
preprocess x decomposition x transform x model (preprocess slowest).
Cross-stage combinations that violate pipeline rules (a transform without a
decomposition, sign quantization with clustering, contrasting with a
classifier, ward with a non-euclidean affinity) are skipped; anything else
invalid (an unknown wavelet, say) raises.
"""
from __future__ import annotations

import itertools
import json
from importlib import resources

from .errors import InvalidConfigError
from .harness import PipelineConfig

GRID_SCHEMA = "wavefeat-grid"


def default_tau_quantiles(count: int = 8, lo: float = 0.50, hi: float = 0.99) -> list[float]:
    """Geometric grid of quantile levels for the threshold search."""
    if count < 2:
        return [hi]
    ratio = (hi / lo) ** (1.0 / (count - 1))
    return [round(lo * ratio ** i, 6) for i in range(count)]


def _expand_mapping(entry: dict) -> list[dict]:
    keys = list(entry.keys())
    value_lists = [v if isinstance(v, list) else [v] for v in entry.values()]
    return [dict(zip(keys, combo)) for combo in itertools.product(*value_lists)]


def _expand_section(section) -> list[dict]:
    if isinstance(section, dict):
        section = [section]
    out = []
    for entry in section:
        out.extend(_expand_mapping(entry))
    return out


def expand_grid(doc: dict) -> list[PipelineConfig]:
    """Expand one task section ({preprocess, decomposition, transform, model})."""
    preps = _expand_section(doc["preprocess"])
    decs = _expand_section(doc.get("decomposition", {"kind": "none"}))
    transforms = _expand_section(doc.get("transform", {"kind": "none"}))
    mdls = _expand_section(doc["model"])
    configs = []
    for prep, dec, tr, mdl in itertools.product(preps, decs, transforms, mdls):
        try:
            configs.append(PipelineConfig.from_dict({
                "preprocess": prep,
                "decomposition": dec,
                "transform": tr,
                "model": mdl,
            }))
        except InvalidConfigError:
            continue
    if not configs:
        raise InvalidConfigError("grid expands to no valid configurations")
    return configs


def load_grid_document(path: str | None = None) -> dict:
    """Read a grid file, or the packaged default when path is None."""
    if path is None:
        text = resources.files("wavefeat").joinpath("default_grid.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    doc = json.loads(text)
    if doc.get("schema") != GRID_SCHEMA:
        raise InvalidConfigError(f"grid document must declare schema {GRID_SCHEMA!r}")
    return doc


def grid_for_task(doc: dict, task: str) -> list[PipelineConfig]:
    if task not in doc:
        raise InvalidConfigError(f"grid document has no {task!r} section")
    return expand_grid(doc[task])
