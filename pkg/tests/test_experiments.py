"""Step-code experiments and figure rendering."""

import json

import pytest

from splythoff.experiments import (
    DEFAULT_CANDIDATES,
    consistent_prefix,
    parse_candidate,
    run_experiment,
)
from splythoff.plots import render_alphabet_growth, render_grid_heatmap
from splythoff.games import SPLYTHOFF, sprague_grundy_grid
from splythoff.words import Substitution, fixed_point_prefix


def test_parse_candidate():
    sub = parse_candidate("0:01,1:2,2:01")
    assert sub.images == (b"\x00\x01", b"\x02", b"\x00\x01")
    with pytest.raises(ValueError):
        parse_candidate("0:01,2:0")  # letter 1 undefined
    with pytest.raises(ValueError):
        parse_candidate("0:0x")
    with pytest.raises(ValueError):
        parse_candidate("0:02")  # image letter 2 lacks a rule


def test_consistent_prefix():
    sub = Substitution((b"\x00\x01", b"\x00\x02", b"\x00"))
    word = fixed_point_prefix(sub, 0, 60)
    assert consistent_prefix(word, sub) == 60
    broken = word[:30] + bytes([(word[30] + 1) % 3]) + word[31:]
    assert consistent_prefix(broken, sub) == 30
    assert consistent_prefix(b"", sub) == 0
    assert consistent_prefix(b"\x01\x00", sub) == 0


def test_run_experiment_splythoff_is_tribonacci_coded():
    record = run_experiment(1, 120)
    assert record.a == 1
    assert record.n == 120
    assert len(record.code_prefix) == 119
    assert record.step_alphabet == [(2, 3), (1, 3), (1, 2)]
    (spec,) = DEFAULT_CANDIDATES[1]
    assert record.candidates[spec] == 119


def test_run_experiment_json_round_trip():
    record = run_experiment(2, 60, candidates=["0:01,1:02,2:0"])
    data = json.loads(record.to_json())
    assert data["a"] == 2
    assert data["alphabet_size"] == 3
    assert data["step_alphabet"] == [[1, 5], [2, 4], [1, 3]]
    assert data["candidates"]["0:01,1:02,2:0"] == 59
    assert len(data["code_prefix"]) == 59


def test_prefix_cap_truncates_code():
    record = run_experiment(1, 50, prefix_cap=10)
    assert len(record.code_prefix) == 10


def test_render_figures(tmp_path):
    grid = sprague_grundy_grid(SPLYTHOFF, 12)
    heatmap = tmp_path / "grid.png"
    render_grid_heatmap(grid, heatmap)
    assert heatmap.stat().st_size > 0
    growth = tmp_path / "growth.png"
    records = [run_experiment(1, n) for n in (10, 20, 40)]
    render_alphabet_growth(records, growth)
    assert growth.stat().st_size > 0
