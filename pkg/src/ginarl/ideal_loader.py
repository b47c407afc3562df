from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .ideal_file import IdealFile, parse_ideal_file, parse_polynomial
from .monomial_ideal import MonomialIdeal, minimalize

SUFFIX = ".ideal"


@dataclass(frozen=True)
class IdealRef:
    """A bundled ideal, by stem ("two_squares") or file name ("two_squares.ideal")."""
    name: str

    @property
    def filename(self) -> str:
        return self.name if self.name.endswith(SUFFIX) else self.name + SUFFIX


def _repo_root() -> Path:
    # src/ginarl/ideal_loader.py -> repo root
    return Path(__file__).resolve().parents[2]


def ideals_dir() -> Path:
    return _repo_root() / "ideals"


def available_ideals() -> list[str]:
    return sorted(p.name for p in ideals_dir().glob(f"*{SUFFIX}"))


def _ref(ideal: IdealRef | str) -> IdealRef:
    return ideal if isinstance(ideal, IdealRef) else IdealRef(str(ideal))


@lru_cache(maxsize=64)
def _read(filename: str) -> str:
    path = ideals_dir() / filename
    if not path.is_file():
        raise FileNotFoundError(f"Ideal file not found: {path}")
    return path.read_text(encoding="utf-8")


def load_ideal_text(ideal: IdealRef | str) -> str:
    return _read(_ref(ideal).filename)


def load_ideal(ideal: IdealRef | str) -> IdealFile:
    """
    Parse a bundled ideal file.

    Both `load_ideal("two_squares")` and `load_ideal("two_squares.ideal")`
    resolve to ideals/two_squares.ideal.
    """
    return parse_ideal_file(load_ideal_text(ideal))


def expected_gin(parsed: IdealFile) -> Optional[MonomialIdeal]:
    """The `# @expect-gin:` metadata as a monomial ideal, or None when absent."""
    raw = parsed.metadata.get("expect-gin")
    if raw is None:
        return None
    monomials = [parse_polynomial(parsed.ctx, part).leading_monomial() for part in raw.split(",")]
    return minimalize(parsed.ctx, monomials)
