import json

import pytest

from elprop.datasets import (
    IntegrityError,
    _verified_text,
    data_dir,
    fetch_datasets,
    load_dataset,
    registry,
    surrogate_labels,
)


def test_registry_contents():
    reg = registry()
    assert sorted(reg) == ["dolphins", "football", "karate", "lesmis", "polbooks"]
    assert reg["karate"]["nodes"] == 34 and reg["karate"]["edges"] == 78
    assert reg["football"]["nodes"] == 115 and reg["football"]["edges"] == 613
    assert reg["dolphins"]["nodes"] == 62
    assert reg["polbooks"]["truth_communities"] == 3
    assert not reg["lesmis"].get("truth_communities")


def test_load_all_datasets_match_recorded_sizes():
    for name, entry in registry().items():
        g, truth = load_dataset(name)
        assert g.node_count == entry["nodes"]
        assert g.edge_count == entry["edges"]
        if name == "lesmis":
            assert truth is None
        else:
            assert set(truth) >= set(g.labels)
            assert len(set(truth.values())) == entry["truth_communities"]


def test_karate_truth_split():
    g, truth = load_dataset("karate")
    sizes = sorted(
        sum(1 for v in truth.values() if v == c) for c in set(truth.values()))
    assert sizes == [16, 18]


def test_unknown_and_tampered():
    with pytest.raises(KeyError):
        load_dataset("enron")
    with pytest.raises(IntegrityError):
        _verified_text("karate", "karate.edges", "0" * 64)


def test_fetch_datasets(tmp_path):
    dest = fetch_datasets(tmp_path / "data")
    files = sorted(p.name for p in dest.iterdir())
    assert "checksums.json" in files
    assert "karate.edges" in files and "karate.labels" in files
    assert "lesmis.edges" in files and "lesmis.labels" not in files
    assert len(files) == 10
    copied = json.loads((dest / "checksums.json").read_text())
    assert copied == registry()


def test_data_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("ELPROP_DATA", str(tmp_path / "elsewhere"))
    assert data_dir() == tmp_path / "elsewhere"
    assert data_dir("explicit") .name == "explicit"
    monkeypatch.delenv("ELPROP_DATA")
    assert data_dir().name == "elprop-data"


def test_surrogate_labels_deterministic():
    g, _ = load_dataset("lesmis")
    a = surrogate_labels(g)
    b = surrogate_labels(g)
    assert a == b
    assert set(a) == set(g.labels)
    assert len(set(a.values())) >= 2
