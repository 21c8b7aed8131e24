"""
Command-line front end.

Responsibilities:
- Parse subcommands (series, genfunc, growth, predecessors, oracle, verify).
- Render results as text, a single JSON document, or CSV.
- Map domain errors to exit codes: 1 mismatch, 2 usage, 3 resource limit.
- Record verification checks and summarise them.
"""
from __future__ import annotations

from .main import build_parser, run

__all__ = ["build_parser", "run"]
