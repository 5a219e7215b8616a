"""Shared helpers for the test suite."""

from __future__ import annotations

import subprocess
import sys


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "wordmorph", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


# Frozen JSON report schema shared by the CLI tests and the acceptance gate.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "verdict", "stats"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["check-word", "check-morphism", "certify"]},
        "verdict": {"enum": ["pass", "fail", "none", "found"]},
        "witness": {
            "type": "object",
            "oneOf": [
                {
                    "required": ["word", "occurrence"],
                    "additionalProperties": False,
                    "properties": {
                        "word": {"type": "string"},
                        "image": {"type": "string"},
                        "occurrence": {
                            "type": "object",
                            "required": ["kind", "start", "period"],
                            "additionalProperties": False,
                            "properties": {
                                "kind": {"enum": ["square", "overlap", "cube"]},
                                "start": {"type": "integer", "minimum": 0},
                                "period": {"type": "integer", "minimum": 1},
                            },
                        },
                    },
                },
                {
                    "required": ["a", "b"],
                    "additionalProperties": False,
                    "properties": {
                        "a": {"type": "string"},
                        "b": {"type": "string"},
                        "V": {"type": "string"},
                        "S": {"type": "string"},
                        "U": {"type": "string"},
                    },
                },
            ],
        },
        "stats": {
            "type": "object",
            "required": ["words_checked", "max_len", "elapsed_ms"],
            "additionalProperties": False,
            "properties": {
                "words_checked": {"type": "integer", "minimum": 0},
                "max_len": {"type": "integer", "minimum": 0},
                "elapsed_ms": {"type": "integer", "minimum": 0},
            },
        },
    },
}
