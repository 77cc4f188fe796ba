#!/usr/bin/env python3
"""Minimal GML -> edge-list converter.

Understands just enough GML to extract an undirected graph: ``node``
blocks with ``id``, an optional ``label`` and an optional ground-truth
attribute, and ``edge`` blocks with ``source``/``target``. Node tokens in
the output are the GML labels when present (whitespace replaced by ``_``
so the two-column format stays parseable), else the numeric ids.

Usage:
    python gml_to_edgelist.py graph.gml -o graph.edges
    python gml_to_edgelist.py graph.gml -o graph.edges --truth-attr gt --labels-out graph.labels
"""

import argparse
import re
import sys

_TOKEN = re.compile(r'"[^"]*"|\[|\]|[^\s\[\]]+')


def tokenize(text):
    return _TOKEN.findall(text)


def parse_gml(text):
    """Return (nodes, edges): nodes is {id: {attr: value}}, edges a list of (source, target)."""
    tokens = tokenize(text)
    pos = 0

    def parse_block():
        nonlocal pos
        block = {}
        assert tokens[pos] == "[", f"expected '[' at token {pos}"
        pos += 1
        while tokens[pos] != "]":
            key = tokens[pos]
            pos += 1
            if tokens[pos] == "[":
                value = parse_block()
            else:
                value = tokens[pos].strip('"')
                pos += 1
            block.setdefault(key, []).append(value)
        pos += 1
        return block

    nodes, edges = {}, []
    while pos < len(tokens):
        key = tokens[pos]
        pos += 1
        if pos < len(tokens) and tokens[pos] == "[":
            block = parse_block()
            if key == "graph":
                for nb in block.get("node", []):
                    nodes[nb["id"][0]] = {k: v[0] for k, v in nb.items()}
                for eb in block.get("edge", []):
                    edges.append((eb["source"][0], eb["target"][0]))
    return nodes, edges


def node_token(attrs, use_label=True):
    if use_label and "label" in attrs:
        return re.sub(r"\s+", "_", attrs["label"])
    return attrs["id"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("gml", help="input GML file")
    ap.add_argument("-o", "--output", required=True, help="edge-list output path")
    ap.add_argument("--truth-attr", default=None,
                    help="node attribute holding a ground-truth community id")
    ap.add_argument("--labels-out", default=None,
                    help="write 'node_token label_token' lines for --truth-attr here")
    ap.add_argument("--ids", action="store_true",
                    help="use numeric GML ids as node tokens even when labels exist")
    args = ap.parse_args(argv)

    with open(args.gml) as fh:
        nodes, edges = parse_gml(fh.read())

    tok = {nid: node_token(attrs, use_label=not args.ids) for nid, attrs in nodes.items()}
    if len(set(tok.values())) != len(tok):
        print("error: node tokens are not unique; retry with --ids", file=sys.stderr)
        return 1

    with open(args.output, "w") as fh:
        for s, t in edges:
            fh.write(f"{tok[s]} {tok[t]}\n")
    print(f"wrote {len(edges)} edges for {len(nodes)} nodes to {args.output}")

    if args.truth_attr:
        if args.labels_out is None:
            print("error: --truth-attr requires --labels-out", file=sys.stderr)
            return 1
        missing = [nid for nid, attrs in nodes.items() if args.truth_attr not in attrs]
        if missing:
            print(f"error: {len(missing)} nodes lack attribute {args.truth_attr!r}", file=sys.stderr)
            return 1
        with open(args.labels_out, "w") as fh:
            for nid in nodes:
                fh.write(f"{tok[nid]} {nodes[nid][args.truth_attr]}\n")
        print(f"wrote ground-truth labels to {args.labels_out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
