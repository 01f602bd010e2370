"""Append-only JSON-lines store for expensive results.

Each line is ``{"key": ..., "result": ...}``. Keys are canonical JSON of
``(command, input, caps)`` so a sweep interrupted halfway picks up where it
stopped. A torn last line (from a kill mid-write) is ignored on read.
"""

from __future__ import annotations

import dataclasses
import json
import os
from pathlib import Path
from typing import Any

from .enumeration import Caps

ENV_VAR = "ORIENT_CACHE_DIR"
FILENAME = "results.jsonl"


def default_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "orientfree"


def make_key(command: str, payload: dict[str, Any], caps: Caps) -> str:
    return json.dumps(
        {"command": command, "input": payload, "caps": dataclasses.asdict(caps)},
        sort_keys=True,
        separators=(",", ":"),
    )


class ResultCache:
    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory is not None else default_dir()
        self.path = self.directory / FILENAME
        self._entries: dict[str, Any] | None = None

    def _load(self) -> dict[str, Any]:
        if self._entries is None:
            entries: dict[str, Any] = {}
            if self.path.exists():
                with self.path.open(encoding="utf-8") as fh:
                    for line in fh:
                        try:
                            rec = json.loads(line)
                        except json.JSONDecodeError:
                            continue
                        if isinstance(rec, dict) and "key" in rec:
                            entries[rec["key"]] = rec.get("result")
            self._entries = entries
        return self._entries

    def get(self, key: str) -> Any | None:
        return self._load().get(key)

    def put(self, key: str, result: Any) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        line = json.dumps({"key": key, "result": result}, sort_keys=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self._load()[key] = result
