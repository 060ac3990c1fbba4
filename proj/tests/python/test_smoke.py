"""Smoke tests for the python bindings against the bundled corpus."""

import os

import pytest

import whk

CORPUS = os.environ.get("WHK_CORPUS_DIR", "")


def corpus_path(name):
    path = os.path.join(CORPUS, name)
    if not os.path.exists(path):
        pytest.skip(f"corpus file {name} not available")
    return path


def test_corpus_listing():
    files = whk.corpus_files()
    assert any(f.endswith("two_object_swap.json") for f in files)


def test_check_groupoid_passes():
    code, report = whk.run(corpus_path("two_object_swap.json"), "check-groupoid")
    assert code == 0
    assert report["status"] == "pass"
    assert report["schema"] == 1


def test_gamma_round_trip():
    code, report = whk.run(corpus_path("two_object_swap.json"), "gamma")
    assert code == 0
    names = {c["name"] for c in report["checks"]}
    assert "round_trip_reproduces_source_groupoid" in names


def test_module_algebra_counterexample_fails():
    code, report = whk.run(corpus_path("sign_twist_module.json"), "check-module-algebra")
    assert code == 1
    failing = [c for c in report["checks"] if c["status"] == "fail"]
    assert failing
    assert any("unitality" in c["name"] for c in failing)


def test_smash_report():
    code, report = whk.run(corpus_path("block_swap_smash.json"), "smash")
    assert code == 0
    assert report["notes"]["dim"] == "8"


def test_workspace_helpers():
    ws = whk.Workspace(corpus_path("two_object_swap.json"))
    assert not ws.is_hopf("kB")
    assert ws.is_cocommutative("kB")
    assert ws.grouplike_count("kB") == 4
    assert ws.inner_faithful("swap")


def test_inner_faithfulness_dichotomy():
    ws = whk.Workspace(corpus_path("domain_two_loops.json"))
    assert not ws.inner_faithful("two_loops_on_domain")
    assert ws.inner_faithful("one_loop_on_domain")


def test_serialize_round_trip():
    ws = whk.Workspace(corpus_path("local_units.json"))
    text = ws.serialize()
    ws2 = whk.Workspace.from_text(text)
    assert ws2.serialize() == text


def test_parse_error():
    with pytest.raises(whk.WhkParseError):
        whk.Workspace.from_text("{\"blocks\": []}")
