"""Deterministic HUNL skill scaffold: evaluator, context engine and harness."""

from ._core import (
    board_texture,
    context,
    evaluate,
    lint_library,
    manifest_hash,
    prompt,
    run_match,
)

__all__ = [
    "board_texture",
    "context",
    "evaluate",
    "lint_library",
    "manifest_hash",
    "prompt",
    "run_match",
]
