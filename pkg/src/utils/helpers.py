"""
Helper functions for reading and writing tropgon data files
"""
import os
import json
from fractions import Fraction

from ..config import JSON_INDENT
from ..errors import InputFormatError


def _parse_json(text, where):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{where}: line {e.lineno} column {e.colno}: {e.msg}") from e


def load_json_file(file_path):
    """
    Load JSON data from a file.

    Raises:
        InputFormatError: the file is missing, unreadable or not valid JSON
    """
    if not os.path.isfile(file_path):
        raise InputFormatError(f"{file_path}: no such file")
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputFormatError(f"{file_path}: cannot read ({e})") from e
    return _parse_json(text, file_path)


def save_json_file(file_path, data):
    """Save JSON data to a file; False when it cannot be written."""
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(dump_json(data))
            f.write("\n")
        return True
    except OSError:
        return False


def dump_json(data):
    """Serialize data deterministically (sorted keys, fixed indent)."""
    return json.dumps(to_jsonable(data), ensure_ascii=False, indent=JSON_INDENT, sort_keys=True)


def read_json_input(source):
    """Read JSON from an inline JSON string or, failing that, a file path."""
    if source.lstrip().startswith(("{", "[")):
        return _parse_json(source, "inline JSON")
    return load_json_file(source)


def rational_to_dict(value):
    """Encode an exact rational as {"num": n, "den": d}."""
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def rational_from_dict(data):
    """Decode {"num": n, "den": d} into a Fraction."""
    try:
        return Fraction(int(data["num"]), int(data["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputFormatError(f"bad rational {data!r}") from e


def to_jsonable(value):
    """Recursively convert tuples, Fractions and objects with to_dict() into JSON types."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return rational_to_dict(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    return value


def int_pair(value, where):
    """Validate a JSON [x, y] pair of integers."""
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(is_int(c) for c in value)):
        raise InputFormatError(f"{where}: expected [x, y] integer pair, got {value!r}")
    return int(value[0]), int(value[1])


def is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def json_int(value, where, minimum=None):
    """Validate a JSON integer, optionally bounded below."""
    if not is_int(value) or (minimum is not None and value < minimum):
        bound = f" >= {minimum}" if minimum is not None else ""
        raise InputFormatError(f"{where}: expected an integer{bound}, got {value!r}")
    return value


def json_list(value, where):
    if not isinstance(value, list):
        raise InputFormatError(f"{where}: expected a list, got {type(value).__name__}")
    return value
