"""Serialization of detection results and benchmark statistics.

Result files are byte-reproducible: given the same result object the
emitted JSON and CSV are identical down to float representation (repr
round-trips doubles exactly). Anything time-dependent lives in the
manifest sidecar, never in the result file itself.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass
from datetime import datetime, timezone

from . import __version__
from .belief import MassFunction, betp
from .evaluation import Partition, RunStats
from .propagation import ElpResult, classify


def partition_result(g, partition: Partition, iterations=None,
                     converged=None) -> ElpResult:
    """Wrap a hard partition in the evidential result shape.

    Each node gets a categorical bba on its community, so the one schema
    covers the baseline algorithm as well.
    """
    survivors = sorted(set(partition.labels))
    dense = {old: k + 1 for k, old in enumerate(survivors)}
    frame = tuple(dense[old] for old in survivors)
    masses = []
    domain = []
    for lab in partition.labels:
        singles = [0.0] * len(frame)
        singles[dense[lab] - 1] = 1.0
        masses.append(MassFunction(frame, tuple(singles), 0.0))
        domain.append(dense[lab])
    return ElpResult(
        node_ids=g.labels,
        frame=frame,
        masses=tuple(masses),
        domain=tuple(domain),
        classes=classify(masses),
        iterations=iterations,
        converged=converged,
        order=(),
    )


def result_document(result: ElpResult, algorithm: str, seed: int) -> dict:
    """JSON-ready dict: one record per node plus run metadata."""
    nodes = []
    for node, m, dom, cls in zip(result.node_ids, result.masses,
                                 result.domain, result.classes):
        mass = {str(k): m.mass(k) for k in result.frame}
        mass["ignorance"] = m.ignorance
        pignistic = {str(k): p for k, p in zip(result.frame, betp(m))}
        rec = {"id": node, "label": dom, "class": cls.kind,
               "mass": mass, "betp": pignistic}
        if cls.kind == "overlap":
            rec["overlap"] = list(cls.labels)
        nodes.append(rec)
    return {
        "algorithm": algorithm,
        "metadata": {
            "seed": seed,
            "iterations": result.iterations,
            "converged": result.converged,
            "communities": len(result.frame),
        },
        "nodes": nodes,
    }


def result_json(result: ElpResult, algorithm: str, seed: int) -> str:
    return json.dumps(result_document(result, algorithm, seed), indent=2) + "\n"


def result_csv(result: ElpResult) -> str:
    """node,label,class,m_omega,m_1..m_c with full-precision floats."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", "label", "class", "m_omega"]
                    + [f"m_{k}" for k in result.frame])
    for node, m, dom, cls in zip(result.node_ids, result.masses,
                                 result.domain, result.classes):
        writer.writerow([node, dom, cls.kind, repr(m.ignorance)]
                        + [repr(m.mass(k)) for k in result.frame])
    return buf.getvalue()


def parse_result_json(text: str) -> dict:
    return json.loads(text)


def stats_text(stats: RunStats) -> str:
    """The four-row Max/Min/Average/Deviation table."""
    rows = [("Max", stats.max), ("Min", stats.min), ("Average", stats.mean),
            ("Deviation", stats.deviation)]
    return "".join(f"{name:<10}{value:.4f}\n" for name, value in rows)


def stats_document(stats: RunStats, algorithm: str) -> dict:
    return {
        "algorithm": algorithm,
        "runs": len(stats.values),
        "max": stats.max,
        "min": stats.min,
        "mean": stats.mean,
        "deviation": stats.deviation,
        "deviation_kind": "sample" if stats.sample else "population",
        "seeds": list(stats.seeds),
        "nmi": list(stats.values),
    }


def stats_json(stats: RunStats, algorithm: str) -> str:
    return json.dumps(stats_document(stats, algorithm), indent=2) + "\n"


def runs_csv(stats: RunStats) -> str:
    """Per-run seed,nmi,communities,iterations records for plotting."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["seed", "nmi", "communities", "iterations"])
    for seed, score, comms, iters in stats.details:
        writer.writerow([seed, repr(score), comms,
                         "" if iters is None else iters])
    return buf.getvalue()


def order_csv(g, table, sigma) -> str:
    """rank,node,beta,variance,rho in update order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "node", "beta", "variance", "rho"])
    for rank, i in enumerate(sigma, start=1):
        writer.writerow([rank, g.label_of(i), repr(float(table.beta[i])),
                         repr(float(table.variance[i])),
                         repr(float(table.rho[i]))])
    return buf.getvalue()


def run_manifest(input_path, algorithm, config, seeds, output, fmt) -> dict:
    """Everything needed to reproduce an output file byte-for-byte,
    plus provenance timestamps (which is why it lives in a sidecar)."""
    if is_dataclass(config):
        config = asdict(config)
    return {
        "input": str(input_path),
        "algorithm": algorithm,
        "config": config,
        "seeds": list(seeds),
        "output": str(output),
        "format": fmt,
        "version": __version__,
        "created": datetime.now(timezone.utc).isoformat(),
    }


def write_manifest(output_path, doc) -> str:
    path = f"{output_path}.manifest.json"
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path
