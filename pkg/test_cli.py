#!/usr/bin/env python3
"""
Tests for the tropgon command line
"""

import json
import os
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest

from src.cli import build_parser, main
from src.verify import Verifier

FOUR_SIGMA = '{"vertices": [[0, 0], [4, 0], [0, 4]]}'


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_analyze_text(capsys):
    code, out = _run(capsys, ["analyze", "--polygon", FOUR_SIGMA])
    assert code == 0
    assert "conv{(0,0), (4,0), (0,4)}" in out
    assert "genus:" in out


def test_analyze_json_is_deterministic(capsys):
    first = _run(capsys, ["analyze", "--polygon", FOUR_SIGMA, "--format", "json"])
    second = _run(capsys, ["analyze", "--polygon", FOUR_SIGMA, "--format", "json"])
    assert first == second
    data = json.loads(first[1])
    assert data["invariants"]["genus"] == 3
    assert data["invariants"]["expected_gonality"] == 3
    assert data["polygon"] == {"vertices": [[0, 0], [4, 0], [0, 4]]}


def test_polygon_from_file(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(FOUR_SIGMA, encoding="utf-8")
    code, out = _run(capsys, ["dim", "--polygon", str(path), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 6
    assert data["upper_bound"] == {"num": 9, "den": 1}


def test_relax(capsys):
    code, out = _run(capsys, ["relax", "--polygon", '{"vertices": [[1, 1], [2, 1], [1, 2]]}'])
    assert code == 0
    assert out.strip() == "conv{(0,0), (4,0), (0,4)}"
    code, out = _run(capsys, ["relax", "--polygon", '{"vertices": [[0, 0], [3, 0], [0, 1]]}', "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"relaxed": None}


def test_table(capsys):
    code, out = _run(capsys, ["table", "--genus", "5", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"2": 9, "3": 11, "4": 10}


def test_beehive_and_skeleton(capsys):
    code, out = _run(capsys, ["beehive", "--polygon", FOUR_SIGMA])
    assert code == 0
    assert out.strip() == "16 triangles on 15 points, beehive: True, regular: True"
    code, out = _run(capsys, ["skeleton", "--polygon", FOUR_SIGMA, "--format", "dot"])
    assert code == 0
    assert out.startswith("graph skeleton {")


def test_gonality_with_scramble(capsys):
    graph = json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]})
    scramble = json.dumps({"eggs": [[0], [2]]})
    code, out = _run(capsys, ["gonality", "--graph", graph, "--scramble", scramble, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["gonality"] == 2
    assert data["scramble_order"] == 2


def test_certify(capsys):
    code, out = _run(capsys, ["certify", "--polygon", FOUR_SIGMA, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["lower"] == data["upper"] == 3
    assert data["conclusion"] == 3


@pytest.mark.parametrize("argv", [
    ["analyze", "--polygon", '{"vertices": [[0, 0], [1]]}'],
    ["analyze", "--polygon", "{not json"],
    ["analyze", "--polygon", "/no/such/file.json"],
    ["analyze"],
    ["dim", "--polygon", '{"vertices": [[0, 0], [4, 0], [0, 2]]}'],
    ["table"],
    ["gonality", "--graph", json.dumps({"n": 20, "edges": [[i, i + 1] for i in range(19)]}),
     "--gonality-cap", "5"],
    ["gonality", "--graph", '{"n": 2, "edges": [[0, 1]], "lengths": ["x"]}'],
    ["gonality", "--graph", '{"n": 2, "edges": [[0, 1]], "lengths": [0]}'],
    ["gonality", "--graph", '{"n": 2, "edges": [[0, 1]], "lengths": 3}'],
    ["gonality", "--graph", '{"n": 2, "edges": 5}'],
    ["gonality", "--graph", '{"n": "two", "edges": []}'],
    ["skeleton", "--polygon", FOUR_SIGMA, "--triangulation", '{"points": [[0, 0]], "cells": 5}'],
    ["skeleton", "--polygon", FOUR_SIGMA, "--triangulation",
     '{"points": [[0, 0], [1, 0], [0, 1]], "cells": [[0, 0, 1]]}'],
    ["skeleton", "--polygon", FOUR_SIGMA, "--triangulation",
     '{"points": [[0, 0], [1, 0], [2, 0]], "cells": [[0, 1, 2]]}'],
    ["skeleton", "--polygon", FOUR_SIGMA, "--triangulation", '{"points": [[0, 0]], "cells": [5]}'],
    ["analyze", "--polygon", os.path.dirname(os.path.abspath(__file__))],
])
def test_bad_input_exits_with_two(capsys, argv):
    assert main(argv) == 2


def test_unknown_verb_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["frobnicate"])
    assert info.value.code == 2


def test_verify_subset(capsys):
    code, out = _run(capsys, ["verify", "--criterion", "cut-penalty", "--criterion", "gonality"])
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verifier_report():
    report = Verifier(max_genus=4).run(["counts", "table", "properties"])
    assert report.passed, [c for c in report.failures]


if __name__ == "__main__":
    print("=" * 50)
    print("CLI tests")
    print("=" * 50)
    sys.exit(pytest.main([__file__, "-v"]))
