"""Run configuration shared by the CLI and scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass

THREADS_ENV = "SINGPOLY_THREADS"


def _env_threads():
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class RunConfig:
    threads: int = 1
    json: bool = False
    seed: int = 0

    @classmethod
    def resolve(cls, threads=None, json=False, seed=0):
        """Explicit ``threads`` wins over the environment variable."""
        t = threads if threads is not None else _env_threads()
        if t < 1:
            raise ValueError("--threads must be at least 1")
        return cls(threads=t, json=json, seed=seed)
