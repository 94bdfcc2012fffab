"""
Structure and perturbation file parsing.

Structure files list the summands of a direct sum::

    {"blocks": [{"kind": "H", "n": 2, "lambda": "1/2"}, {"kind": "K", "n": 1}]}

as JSON, or with the same schema as YAML (``.yaml``/``.yml``). Perturbation
files are JSON objects ``{"a": [[...]], "b": [[...]]}`` whose entries are
scalar strings.
"""

import json
from pathlib import Path
from typing import Any, Dict

import yaml

from symdeform.core import CanonicalStructure
from symdeform.errors import InputError, ParseError
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import SymPair

YAML_SUFFIXES = {".yaml", ".yml"}


def _load_data(path: Path) -> Any:
    """Read JSON or YAML, turning decoder errors into ParseError."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            if path.suffix.lower() in YAML_SUFFIXES:
                return yaml.safe_load(f)
            return json.load(f)
    except FileNotFoundError:
        raise FileNotFoundError(f"File not found: {path}")
    except json.JSONDecodeError as e:
        raise ParseError(
            f"Invalid JSON in {path}: {e.msg}", position=f"line {e.lineno} column {e.colno}"
        ) from e
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        position = f"line {mark.line + 1} column {mark.column + 1}" if mark else None
        raise ParseError(f"Invalid YAML in {path}: {e}", position=position) from e


class StructureParser:
    """Parser for structure files."""

    @staticmethod
    def parse(path: Path) -> CanonicalStructure:
        """
        Parse a structure file.

        Args:
            path: JSON or YAML file

        Returns:
            CanonicalStructure in file order
        """
        data = _load_data(Path(path))
        try:
            return CanonicalStructure.from_dict(data)
        except ParseError:
            raise
        except InputError as e:
            raise ParseError(f"Invalid structure in {path}: {e}") from e

    @staticmethod
    def dump(structure: CanonicalStructure, path: Path):
        path = Path(path)
        with open(path, "w", encoding="utf-8") as f:
            if path.suffix.lower() in YAML_SUFFIXES:
                yaml.safe_dump(structure.to_dict(), f, sort_keys=False)
            else:
                json.dump(structure.to_dict(), f, indent=2)


def load_structure(input_path: Path | None = None, inline: str | None = None) -> CanonicalStructure:
    """Structure from a file or from the inline notation; exactly one must be given."""
    if (input_path is None) == (inline is None):
        raise InputError("Give exactly one of --input or --structure")
    if input_path is not None:
        return StructureParser.parse(Path(input_path))
    return CanonicalStructure.from_text(inline or "")


def load_perturbation(path: Path) -> SymPair:
    """
    Parse a perturbation file.

    Raises:
        ParseError: on malformed JSON, missing keys or bad scalars
        InvariantError: if a matrix is not symmetric
    """
    data = _load_data(Path(path))
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise ParseError(f"Perturbation file {path} must be an object with 'a' and 'b'")
    try:
        return SymPair(ExactMatrix.from_rows(data["a"]), ExactMatrix.from_rows(data["b"]))
    except TypeError as e:
        raise ParseError(f"Invalid matrix rows in {path}: {e}") from e


def write_report(data: Dict[str, Any], path: Path):
    """Write a JSON report."""
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
