import io
import json

import numpy as np
import pytest

from dwwt.errors import DimensionMismatchError, FileFormatError
from dwwt.io import (
    check_matrix_dim,
    format_float,
    matrix_payload,
    read_matrix,
    read_record,
    write_csv,
    write_matrix,
    write_record,
)
from dwwt.linalg import random_density_matrix
from dwwt.mub import all_basis_labels
from dwwt.tomography import sample_probs, simulate_probs


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_matrix_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    mat = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    buf = io.StringIO()
    write_matrix(buf, mat)
    path = tmp_path / "m.json"
    path.write_text(buf.getvalue())
    back = read_matrix(str(path))
    assert np.array_equal(back, mat)


def test_matrix_payload_fields():
    payload = matrix_payload(np.eye(2))
    assert payload["dim"] == 2
    assert payload["re"] == [[1.0, 0.0], [0.0, 1.0]]
    assert payload["im"] == [[0.0, 0.0], [0.0, 0.0]]


def test_read_matrix_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    with pytest.raises(FileFormatError):
        read_matrix(str(bad))

    with pytest.raises(FileFormatError):
        read_matrix(write_json(tmp_path, "a.json", [1, 2, 3]))
    with pytest.raises(FileFormatError):
        read_matrix(write_json(tmp_path, "b.json", {"dim": "x", "re": [], "im": []}))
    with pytest.raises(FileFormatError):
        read_matrix(write_json(tmp_path, "c.json", {"dim": 2, "re": [[1, 0], [0, 1]]}))
    with pytest.raises(FileFormatError):
        read_matrix(
            write_json(
                tmp_path,
                "d.json",
                {"dim": 3, "re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]},
            )
        )
    with pytest.raises(FileFormatError):
        read_matrix(
            write_json(
                tmp_path,
                "e.json",
                {"dim": 2, "re": [["a", 0], [0, 1]], "im": [[0, 0], [0, 0]]},
            )
        )


def test_record_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    rho = random_density_matrix(5, rng)
    rec = sample_probs(rho, shots=500, seed=7)
    buf = io.StringIO()
    write_record(buf, rec)
    path = tmp_path / "rec.json"
    path.write_text(buf.getvalue())
    back = read_record(str(path))
    assert back.dim == 5
    for basis in all_basis_labels(5):
        assert np.array_equal(back.probs[basis], rec.probs[basis])
    payload = json.loads(buf.getvalue())
    assert payload["sample_count"] == 500
    assert payload["entries"][0]["basis"] == "ddot0"
    assert [e["basis"] for e in payload["entries"][1:]] == [0, 1, 2, 3, 4]


def test_record_errors(tmp_path):
    rec = simulate_probs(np.eye(3) / 3)
    buf = io.StringIO()
    write_record(buf, rec)
    good = json.loads(buf.getvalue())

    missing = {"dim": 3, "entries": good["entries"][:-1]}
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "m.json", missing))

    dup = {"dim": 3, "entries": good["entries"][:-1] + [good["entries"][1]]}
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "dup.json", dup))

    unnorm = json.loads(json.dumps(good))
    unnorm["entries"][0]["probs"] = [0.5, 0.2, 0.2]
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "u.json", unnorm))

    negative = json.loads(json.dumps(good))
    negative["entries"][0]["probs"] = [1.2, -0.2, 0.0]
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "n.json", negative))

    wrong_len = json.loads(json.dumps(good))
    wrong_len["entries"][0]["probs"] = [0.5, 0.5]
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "w.json", wrong_len))

    bad_basis = json.loads(json.dumps(good))
    bad_basis["entries"][0]["basis"] = "nope"
    with pytest.raises(FileFormatError):
        read_record(write_json(tmp_path, "bb.json", bad_basis))


def test_format_float_round_trips():
    for x in (0.1, 1 / 3, 2e-17, -5.5, 1.0):
        assert float(format_float(x)) == x


def test_write_csv():
    buf = io.StringIO()
    write_csv(buf, ("a", "b"), [(1, 0.5), ("x", 0.1)])
    assert buf.getvalue() == "a,b\n1,0.5\nx,0.1\n"


def test_check_matrix_dim():
    assert check_matrix_dim(np.eye(3), 3).shape == (3, 3)
    with pytest.raises(DimensionMismatchError):
        check_matrix_dim(np.eye(3), 5)
