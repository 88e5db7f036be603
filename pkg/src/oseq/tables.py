"""Recompute the bundled reference tables and diff against them.

Four tables ship with the package: the period upper bounds (with the
previous published bounds kept for display), the end-difference
construction periods, the lifted low-pseudoweight construction periods,
and the largest known periods.  Cells of the last table that no bundled
construction attains are display-only and tagged external.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources

from .bounds import period_upper_bound
from .constructions import ConstructionRecipe, Method, expected_period, generate
from .errors import DomainError

TABLE_NAMES = ("bounds", "a-periods", "lempel-periods", "known")
DEFAULT_CELL_CAP = 1_000_000

STATUS_OK = "ok"
STATUS_MISMATCH = "mismatch"
STATUS_SKIPPED = "skipped (cap)"
STATUS_UNCHECKED = "unchecked"


@dataclass(frozen=True)
class TableCell:
    which: str
    n: int
    k: int
    value: int | None
    bound: int | None
    source: str
    status: str


@dataclass(frozen=True)
class TableResult:
    which: str
    cells: tuple[TableCell, ...]

    def mismatches(self) -> tuple[TableCell, ...]:
        return tuple(c for c in self.cells if c.status == STATUS_MISMATCH)

    def skipped(self) -> tuple[TableCell, ...]:
        return tuple(c for c in self.cells if c.status == STATUS_SKIPPED)

    def records(self) -> list[dict]:
        return [asdict(c) for c in self.cells]

    def to_json(self) -> str:
        return json.dumps(self.records(), indent=1)

    def text(self) -> str:
        ns = sorted({c.n for c in self.cells})
        ks = sorted({c.k for c in self.cells})
        by_pos = {(c.n, c.k): c for c in self.cells}

        def render(c: TableCell | None) -> str:
            if c is None:
                return ""
            if c.status == STATUS_SKIPPED:
                return "skipped (cap)"
            body = str(c.value)
            if c.bound is not None:
                body += f" ({c.bound})"
            if c.source == "external":
                body += " ext"
            if c.status == STATUS_MISMATCH:
                body += " MISMATCH"
            return body

        header = ["n\\k"] + [str(k) for k in ks]
        rows = [[str(n)] + [render(by_pos.get((n, k))) for k in ks] for n in ns]
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        lines = []
        for r in [header] + rows:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def reference_tables() -> dict:
    """The bundled golden tables, parsed once."""
    path = resources.files("oseq.data").joinpath("reference_tables.json")
    return json.loads(path.read_text(encoding="ascii"))


def _golden(table: str, n: int, k: int):
    return reference_tables().get(table, {}).get(str(n), {}).get(str(k))


def _estimated_edges(recipe: ConstructionRecipe) -> int:
    return expected_period(recipe)


def _period_cell(which: str, golden_table: str, method: Method,
                 n: int, k: int, cell_cap: int) -> TableCell:
    recipe = ConstructionRecipe(method, k, n)
    golden = _golden(golden_table, n, k)
    if _estimated_edges(recipe) > cell_cap:
        return TableCell(which, n, k, None, None, "computed", STATUS_SKIPPED)
    seq = generate(recipe)
    bound = period_upper_bound(k, n)
    if golden is None:
        status = STATUS_UNCHECKED
    else:
        status = STATUS_OK if seq.period == golden else STATUS_MISMATCH
    return TableCell(which, n, k, seq.period, bound, "computed", status)


def _known_cell(n: int, k: int, cell_cap: int) -> TableCell | None:
    golden = _golden("largest_known", n, k)
    if golden is None:
        return None
    bound = period_upper_bound(k, n)
    if golden["method"] == "external":
        return TableCell("known", n, k, golden["value"], bound,
                         "external", STATUS_OK)
    recipe = ConstructionRecipe(Method(golden["method"]), k, n)
    if _estimated_edges(recipe) > cell_cap:
        return TableCell("known", n, k, None, None, "computed", STATUS_SKIPPED)
    seq = generate(recipe)
    status = STATUS_OK if seq.period == golden["value"] else STATUS_MISMATCH
    return TableCell("known", n, k, seq.period, bound, "computed", status)


def _compute_cell(which: str, n: int, k: int, cell_cap: int) -> TableCell | None:
    if which == "bounds":
        value = period_upper_bound(k, n)
        golden = _golden("bounds", n, k)
        previous = _golden("bounds_previous", n, k)
        if golden is None:
            status = STATUS_UNCHECKED
        else:
            status = STATUS_OK if value == golden else STATUS_MISMATCH
        return TableCell(which, n, k, value, previous, "computed", status)
    if which == "a-periods":
        return _period_cell(which, "end_difference_periods",
                            Method.END_DIFFERENCE, n, k, cell_cap)
    if which == "lempel-periods":
        return _period_cell(which, "lifted_periods",
                            Method.LEMPEL_LIFT, n, k, cell_cap)
    if which == "known":
        return _known_cell(n, k, cell_cap)
    raise DomainError(f"unknown table {which!r}")


def _cell_grid(which: str, max_k: int, max_n: int) -> list[tuple[int, int]]:
    if which == "bounds":
        ks, ns = range(2, max_k + 1), range(2, max_n + 1)
    elif which == "a-periods":
        ks, ns = range(5, max_k + 1), range(2, max_n + 1)
    elif which == "lempel-periods":
        ks, ns = range(3, max_k + 1), range(3, max_n + 1)
    elif which == "known":
        ks, ns = range(3, max_k + 1), range(2, max_n + 1)
    else:
        raise DomainError(f"unknown table {which!r}")
    return [(n, k) for n in ns for k in ks]


def compute_table(which: str, max_k: int, max_n: int,
                  cell_cap: int = DEFAULT_CELL_CAP,
                  workers: int = 1) -> TableResult:
    """Fill one table over n rows and k columns up to the given maxima.

    Cells whose construction would exceed cell_cap edges are marked
    skipped.  With workers > 1 the independent cells run in a process
    pool; assembly order is fixed either way, so output is identical.
    """
    if which not in TABLE_NAMES:
        raise DomainError(f"table must be one of {TABLE_NAMES}, got {which!r}")
    if max_k < 2 or max_n < 2:
        raise DomainError("need max_k >= 2 and max_n >= 2")
    grid = _cell_grid(which, max_k, max_n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                (n, k): pool.submit(_compute_cell, which, n, k, cell_cap)
                for n, k in grid
            }
            cells = [futures[pos].result() for pos in grid]
    else:
        cells = [_compute_cell(which, n, k, cell_cap) for n, k in grid]
    return TableResult(which, tuple(c for c in cells if c is not None))
