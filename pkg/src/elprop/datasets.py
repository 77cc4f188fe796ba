"""Bundled benchmark networks with recorded checksums.

Five classic graphs ship inside the package: karate, dolphins, football,
polbooks (each with a ground-truth labeling) and lesmis (no authoritative
community labels exist for it; see surrogate_labels). Files are verified
against their recorded sha256 on every read.
"""

from __future__ import annotations

import hashlib
import json
import os
from importlib import resources
from pathlib import Path

from .graph import Graph, load_edge_list, load_labels

DATA_ENV = "ELPROP_DATA"


class IntegrityError(Exception):
    """A bundled or fetched data file does not match its recorded hash."""


def _data_root():
    return resources.files("elprop").joinpath("data")


def registry() -> dict:
    """Dataset name -> recorded metadata (sizes, source, file hashes)."""
    with _data_root().joinpath("checksums.json").open() as fh:
        return json.load(fh)


def _verified_text(name: str, filename: str, expected: str) -> str:
    raw = _data_root().joinpath(filename).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != expected:
        raise IntegrityError(
            f"{filename}: sha256 {digest} does not match recorded {expected}")
    return raw.decode()


def load_dataset(name: str):
    """Return (Graph, truth mapping or None) for a bundled dataset."""
    reg = registry()
    if name not in reg:
        raise KeyError(f"unknown dataset {name!r}; bundled: {sorted(reg)}")
    entry = reg[name]
    graph = None
    truth = None
    for filename, expected in entry["files"].items():
        text = _verified_text(name, filename, expected)
        if filename.endswith(".edges"):
            graph = load_edge_list(text.splitlines())
        elif filename.endswith(".labels"):
            truth = load_labels(text.splitlines())
    if graph is None:
        raise IntegrityError(f"dataset {name!r} has no edge file recorded")
    return graph, truth


def data_dir(dest=None) -> Path:
    """Where fetch_datasets materializes files: explicit argument, the
    ELPROP_DATA environment variable, or ./elprop-data."""
    return Path(dest or os.environ.get(DATA_ENV) or "elprop-data")


def fetch_datasets(dest=None) -> Path:
    """Copy every bundled dataset into a plain directory, verifying
    hashes, and drop the checksum manifest alongside."""
    out = data_dir(dest)
    out.mkdir(parents=True, exist_ok=True)
    reg = registry()
    for name, entry in reg.items():
        for filename, expected in entry["files"].items():
            text = _verified_text(name, filename, expected)
            (out / filename).write_text(text)
    (out / "checksums.json").write_text(
        json.dumps(reg, indent=2, sort_keys=True) + "\n")
    return out


def surrogate_labels(g: Graph, seed: int = 0) -> dict:
    """Deterministic stand-in labeling for graphs without ground truth.

    Runs the evidential algorithm once with the fixed beta order and
    returns its hard labels. This is a reproducible reference point for
    demos and regression baselines, not ground truth; scores against it
    measure agreement with one run of our own method and nothing more.
    """
    from .propagation import ElpConfig, elp_run

    res = elp_run(g, ElpConfig(order="beta", seed=seed))
    return {node: str(lab) for node, lab in zip(res.node_ids, res.domain)}
