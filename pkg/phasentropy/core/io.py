# phasentropy/core/io.py

import json
import sys

import fsspec
import pandas as pd


# -------------------------------------------------------------------
# I/O FUNCTIONS
# -------------------------------------------------------------------
def write_text(url: str, text: str):
    """Write UTF-8 text to any fsspec URL; ``-`` writes to stdout."""
    if url == "-":
        sys.stdout.write(text)
        return

    with fsspec.open(url, "w", encoding="utf-8") as f:
        f.write(text)


def read_text(url: str) -> str:
    """Read UTF-8 text from any fsspec URL; ``-`` reads stdin."""
    if url == "-":
        return sys.stdin.read()

    with fsspec.open(url, "r", encoding="utf-8") as f:
        return f.read()


def write_json(url: str, obj: dict):
    write_text(url, json.dumps(obj, indent=2) + "\n")


def read_json(url: str) -> dict:
    return json.loads(read_text(url))


def exists(url: str) -> bool:
    fs, path = fsspec.core.url_to_fs(url)
    return fs.exists(path)


def makedirs(url: str) -> None:
    """Create a directory (and parents) on any fsspec filesystem."""
    fs, path = fsspec.core.url_to_fs(url)
    fs.makedirs(path, exist_ok=True)


def join(url: str, name: str) -> str:
    return url.rstrip("/") + "/" + name


def write_csv(url: str, df: pd.DataFrame):
    """Comma-separated table with a header row and 17 significant digits."""
    write_text(url, df.to_csv(index=False, float_format="%.17g", lineterminator="\n"))
