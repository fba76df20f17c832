# tests/framekit/io/test_frame_file.py
from __future__ import annotations

import json

import numpy as np
import pytest

from framekit.core.errors import FrameFileError
from framekit.core.frame import doubled_frame, random_frame
from framekit.core.hilbert import mercedes_frame
from framekit.io.frame_file import (
    load_blocks,
    load_coefficients,
    load_frame,
    load_hilbert_frame,
    parse_coefficients,
    read_frame_file,
    write_frame,
)
from framekit.io.serialize import dumps, format_real


def test_write_then_load_is_lossless(tmp_path):
    fr = random_frame(3, 7, seed=1)
    path = write_frame(fr, tmp_path / "sub" / "random.json")
    back = load_frame(path)
    assert np.array_equal(back.vectors, fr.vectors)
    assert np.array_equal(back.functionals, fr.functionals)
    assert back.norm == fr.norm


def test_sup_norm_survives_round_trip(tmp_path):
    fr = doubled_frame(np.eye(2), norm="inf")
    back = load_frame(write_frame(fr, tmp_path / "inf.json"))
    assert back.norm.is_inf


def test_hilbert_file_omits_functionals(tmp_path):
    path = write_frame(mercedes_frame(), tmp_path / "mercedes.json")
    doc = json.loads(path.read_text())
    assert "functionals" not in doc
    hf = load_hilbert_frame(path)
    assert hf.N == 3
    with pytest.raises(FrameFileError):
        load_frame(path)


def test_file_layout_is_rows_per_vector(tmp_path):
    path = write_frame(doubled_frame(np.eye(2)), tmp_path / "d2.json")
    doc = read_frame_file(path)
    assert doc.d == 2 and doc.N == 4
    assert doc.vectors[1] == [1.0, 0.0]
    assert doc.functionals[3] == [0.0, 0.5]


@pytest.mark.parametrize(
    "content",
    [
        "{not json",
        json.dumps({"d": 2, "N": 1, "vectors": [[1.0]], "functionals": [[1.0]]}),
        json.dumps({"d": 1, "N": 2, "vectors": [[1.0]], "functionals": [[1.0]]}),
        json.dumps({"d": 1, "N": 1, "vectors": [[1.0]], "functionals": [[1.0]], "colour": "red"}),
        json.dumps({"d": 1, "N": 1, "norm": {"p": 0.5}, "vectors": [[1.0]], "functionals": [[1.0]]}),
    ],
)
def test_malformed_files_raise_frame_file_error(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(FrameFileError):
        load_frame(path)


def test_missing_file(tmp_path):
    with pytest.raises(FrameFileError):
        load_frame(tmp_path / "nope.json")


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1,2,3", [1.0, 2.0, 3.0]),
        ("-1, 1  0\n0", [-1.0, 1.0, 0.0, 0.0]),
        ("[0.5, -2]", [0.5, -2.0]),
    ],
)
def test_parse_coefficients(text, expected):
    assert parse_coefficients(text).tolist() == expected


@pytest.mark.parametrize("text", ["1,x", "[[1, 2]]", "1,nan"])
def test_parse_coefficients_rejects_garbage(text):
    with pytest.raises(FrameFileError):
        parse_coefficients(text)


def test_load_coefficients_from_file(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("1 2\n3\n")
    assert load_coefficients(path).tolist() == [1.0, 2.0, 3.0]


def test_load_blocks(tmp_path):
    path = tmp_path / "blocks.json"
    path.write_text(json.dumps([[-1, 1, 0, 0], [0, 0, -1, 1]]))
    assert load_blocks(path, 4).K == 2
    with pytest.raises(FrameFileError):
        load_blocks(path, 5)
    path.write_text(json.dumps([[0, 0, -1, 1], [-1, 1, 0, 0]]))
    with pytest.raises(FrameFileError):
        load_blocks(path, 4)


@pytest.mark.parametrize(
    "x,expected",
    [
        (1.0, "1.0"),
        (0.1, "0.10000000000000001"),
        (1e-20, "9.9999999999999995e-21"),
        (float("inf"), '"inf"'),
    ],
)
def test_format_real(x, expected):
    assert format_real(x) == expected


def test_dumps_is_sorted_and_stable():
    payload = {"b": np.array([1.0, 2.0]), "a": {"z": True, "y": None}, "c": (1, 2)}
    text = dumps(payload, indent=2)
    assert text == dumps(payload, indent=2)
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    assert '"b": [1.0, 2.0]' in text
    assert text.endswith("}\n")
    assert json.loads(text)["a"] == {"y": None, "z": True}
