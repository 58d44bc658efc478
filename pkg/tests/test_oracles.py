"""Tests for the oracle table loader."""
import json

import pytest

from braidpy.core.repmat import build_V
from braidpy.core.scalar import S2
from braidpy.core.suq2 import Suq2Element
from braidpy.utils.oracles import (
    COPRODUCTS_FILE,
    ORACLE_DIR_ENV,
    PACKAGE_DATA_DIR,
    PRODUCTS_FILE,
    load_coproducts,
    load_products,
    oracle_dir,
)


def test_packaged_products():
    """Test the shipped product table."""
    oracles = load_products()
    assert len(oracles) == 81
    assert len({o.tag for o in oracles}) == 81
    assert {(o.row, o.col) for o in oracles} == {
        ((k, l), (r, p)) for k in (-1, 0, 1) for l in (-1, 0, 1) for r in (-1, 0, 1) for p in (-1, 0, 1)  # noqa: E741
    }
    by_position = {(o.row, o.col): o for o in oracles}
    assert by_position[((-1, -1), (0, 1))].value == Suq2Element.basis(1, 0, 3, S2)
    assert by_position[((1, 1), (1, 1))].value == Suq2Element.basis(-4, 0, 0)


def test_printed_discrepancies():
    """Test that the two sign typos keep the printed text."""
    flagged = [o for o in load_products() if o.printed is not None]
    assert [(o.row, o.col) for o in flagged] == [((0, -1), (1, 0)), ((0, 1), (-1, 0))]
    for oracle in flagged:
        assert oracle.printed != oracle.value
        assert oracle.note


def test_packaged_coproducts():
    """Test the shipped coproduct table against the entries of V."""
    v = build_V()
    oracles = load_coproducts()
    assert len(oracles) == 9
    for oracle in oracles:
        assert oracle.element == v.entry(*oracle.entry)
        assert len(oracle.expansion) == 3


def test_oracle_dir_resolution(monkeypatch, tmp_path):
    """Test explicit, environment and packaged oracle directories."""
    monkeypatch.delenv(ORACLE_DIR_ENV, raising=False)
    assert oracle_dir() == PACKAGE_DATA_DIR
    monkeypatch.setenv(ORACLE_DIR_ENV, str(tmp_path))
    assert oracle_dir() == tmp_path
    assert oracle_dir(tmp_path / "other") == tmp_path / "other"


def test_missing_file(tmp_path):
    """Test that a missing table raises ValueError."""
    with pytest.raises(ValueError, match="not found"):
        load_products(tmp_path)


def test_invalid_tables(tmp_path):
    """Test malformed JSON, non-list tables and malformed records."""
    (tmp_path / PRODUCTS_FILE).write_text("{not json")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_products(tmp_path)
    (tmp_path / PRODUCTS_FILE).write_text(json.dumps({"tag": "x"}))
    with pytest.raises(ValueError, match="list"):
        load_products(tmp_path)
    (tmp_path / PRODUCTS_FILE).write_text(json.dumps([{"tag": "x", "row": [0, 0]}]))
    with pytest.raises(ValueError, match="Malformed"):
        load_products(tmp_path)
    (tmp_path / COPRODUCTS_FILE).write_text(json.dumps([{"tag": "y", "entry": [0, 0], "element": "{1}*a[0,0]"}]))
    with pytest.raises(ValueError, match="Malformed"):
        load_coproducts(tmp_path)


def test_unparsable_product_value(tmp_path):
    """Test that a product record with an unreadable value is reported as malformed."""
    record = {"tag": "v[0,0]v[0,0]", "row": [0, 0], "col": [0, 0], "value": "{1}*a[1,0]"}
    (tmp_path / PRODUCTS_FILE).write_text(json.dumps([record]))
    with pytest.raises(ValueError, match="Malformed product record"):
        load_products(tmp_path)
    record["value"] = "{q}*a[1,0,0]"
    record["printed"] = "{1}*a[1,0,0] +"
    (tmp_path / PRODUCTS_FILE).write_text(json.dumps([record]))
    with pytest.raises(ValueError, match="Malformed product record"):
        load_products(tmp_path)
