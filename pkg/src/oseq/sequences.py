"""Periodic k-ary sequences and their on-disk interchange format.

A sequence file is a header line

    k=<int> n=<int> period=<int> method=<string>

followed by one line holding a single period of symbols: contiguous digits
when k <= 10, comma-separated decimal integers otherwise.  Files end with a
newline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import DomainError

if TYPE_CHECKING:
    from .constructions import ConstructionRecipe

_HEADER_RE = re.compile(
    r"^k=(\d+) n=(\d+) period=(\d+) method=(\S+)\s*$")


@dataclass(frozen=True, eq=False)
class OrientableSequence:
    """One period of a sequence whose n-windows are unique in either
    reading direction.

    Instances are produced by paths that have already verified that
    property; the constructor only checks shape and symbol range.
    """

    k: int
    n: int
    period: int
    symbols: np.ndarray
    recipe: "ConstructionRecipe | None" = None

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"alphabet size must be at least 2, got {self.k}")
        if self.n < 2:
            raise DomainError(f"window length must be at least 2, got {self.n}")
        symbols = np.asarray(self.symbols)
        if symbols.ndim != 1 or symbols.size == 0:
            raise DomainError("symbols must be a nonempty 1-d array")
        if int(symbols.min()) < 0 or int(symbols.max()) >= self.k:
            raise DomainError(f"symbol out of range for alphabet size {self.k}")
        symbols = symbols.astype(np.min_scalar_type(self.k - 1), copy=True)
        symbols.flags.writeable = False
        object.__setattr__(self, "symbols", symbols)
        if self.period != symbols.size:
            raise DomainError(
                f"period {self.period} does not match {symbols.size} symbols")

    def __len__(self) -> int:
        return self.period

    def symbol_list(self) -> list[int]:
        return [int(s) for s in self.symbols]


def format_symbols(symbols: Sequence[int] | np.ndarray, k: int) -> str:
    """Render one period as the file body for alphabet size k."""
    items = [str(int(s)) for s in symbols]
    return "".join(items) if k <= 10 else ",".join(items)


def serialize_sequence(seq: OrientableSequence, method: str | None = None) -> str:
    """Render a sequence as the full file text, trailing newline included."""
    if method is None:
        method = seq.recipe.method.value if seq.recipe is not None else "unknown"
    header = f"k={seq.k} n={seq.n} period={seq.period} method={method}"
    return f"{header}\n{format_symbols(seq.symbols, seq.k)}\n"


@dataclass(frozen=True)
class ParsedSequenceFile:
    k: int
    n: int
    period: int
    method: str
    symbols: tuple[int, ...]


def parse_sequence_file(text: str) -> ParsedSequenceFile:
    """Parse file text, validating header consistency and symbol range."""
    lines = text.splitlines()
    if not lines:
        raise DomainError("empty sequence file")
    m = _HEADER_RE.match(lines[0])
    if m is None:
        raise DomainError(f"malformed header line: {lines[0]!r}")
    k, n, period = int(m.group(1)), int(m.group(2)), int(m.group(3))
    method = m.group(4)
    body = [line for line in lines[1:] if line.strip()]
    if len(body) != 1:
        raise DomainError(f"expected exactly one symbol line, got {len(body)}")
    raw = body[0].strip()
    if k <= 10:
        symbols = tuple(int(c) for c in raw) if raw.isdigit() else None
        if symbols is None:
            raise DomainError("symbol line must be contiguous digits for k <= 10")
    else:
        try:
            symbols = tuple(int(part) for part in raw.split(","))
        except ValueError as exc:
            raise DomainError("symbol line must be comma-separated integers") from exc
    if len(symbols) != period:
        raise DomainError(
            f"header says period={period} but found {len(symbols)} symbols")
    if any(s < 0 or s >= k for s in symbols):
        raise DomainError(f"symbol out of range for alphabet size {k}")
    return ParsedSequenceFile(k=k, n=n, period=period, method=method,
                              symbols=symbols)


def write_sequence_file(path, seq: OrientableSequence,
                        method: str | None = None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_sequence(seq, method))


def read_sequence_file(path) -> ParsedSequenceFile:
    with open(path, "r", encoding="ascii") as fh:
        return parse_sequence_file(fh.read())
