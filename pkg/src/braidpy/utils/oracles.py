"""Loading of the shipped product and coproduct tables."""
import json
import logging
import os
from pathlib import Path
from typing import List, NamedTuple, Optional, Tuple, Union

from braidpy.core.suq2 import Suq2Element

logger = logging.getLogger(__name__)

ORACLE_DIR_ENV = "BRAIDPY_ORACLE_DIR"
PACKAGE_DATA_DIR = Path(__file__).resolve().parent.parent / "data"

PRODUCTS_FILE = "products.json"
COPRODUCTS_FILE = "coproducts.json"


class ProductOracle(NamedTuple):
    """Expected normal form of the 9x9 matrix entry at row (k, l), column (r, p)."""

    tag: str
    row: Tuple[int, int]
    col: Tuple[int, int]
    value: Suq2Element
    printed: Optional[Suq2Element] = None
    note: str = ""


class CoproductOracle(NamedTuple):
    """Delta(v_ij) written as a sum of three pure two-leg products."""

    tag: str
    entry: Tuple[int, int]
    element: Suq2Element
    expansion: List[Tuple[Suq2Element, Suq2Element]]


def oracle_dir(override: Optional[Union[str, Path]] = None) -> Path:
    """The explicit directory, else $BRAIDPY_ORACLE_DIR, else the packaged data."""
    if override:
        return Path(override)
    env = os.environ.get(ORACLE_DIR_ENV)
    return Path(env) if env else PACKAGE_DATA_DIR


def _read(name: str, directory: Optional[Union[str, Path]]) -> list:
    path = oracle_dir(directory) / name
    try:
        with open(path, "r", encoding="utf-8") as f:
            records = json.load(f)
    except FileNotFoundError:
        raise ValueError(f"Oracle file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ValueError(f"Oracle file {path} is not valid JSON: {e}") from None
    if not isinstance(records, list):
        raise ValueError(f"Oracle file {path} must hold a list of records")
    logger.info("Loaded %d records from %s", len(records), path)
    return records


def load_products(directory: Optional[Union[str, Path]] = None) -> List[ProductOracle]:
    """
    Load the product table.

    Args:
        directory: Directory holding products.json (default: see oracle_dir)

    Returns:
        One ProductOracle per record

    Raises:
        ValueError: If the file is missing or a record is malformed
    """
    oracles = []
    for record in _read(PRODUCTS_FILE, directory):
        try:
            printed = record.get("printed")
            oracles.append(
                ProductOracle(
                    tag=record["tag"],
                    row=tuple(record["row"]),
                    col=tuple(record["col"]),
                    value=Suq2Element.parse(record["value"]),
                    printed=Suq2Element.parse(printed) if printed else None,
                    note=record.get("note", ""),
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"Malformed product record {record!r}: {e}") from None
    return oracles


def load_coproducts(directory: Optional[Union[str, Path]] = None) -> List[CoproductOracle]:
    """Load the coproduct table; see load_products."""
    oracles = []
    for record in _read(COPRODUCTS_FILE, directory):
        try:
            oracles.append(
                CoproductOracle(
                    tag=record["tag"],
                    entry=tuple(record["entry"]),
                    element=Suq2Element.parse(record["element"]),
                    expansion=[(Suq2Element.parse(a), Suq2Element.parse(b)) for a, b in record["expansion"]],
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"Malformed coproduct record {record.get('tag', record)!r}: {e}") from None
    return oracles
