"""Lower and upper bounds on the best distance d of [[n,k,d]] codes.

Upper bounds take the smallest of the linear programming bound, the bound
n >= 4e + k (e = floor((d-1)/2)), the self-dual bound for k = 0, and any
external bound recorded in the catalog.  Lower bounds start from verified
seed codes and are closed under four parameter rules:

    k > 0:                 [[n,k,d]]       -> [[n+1,k,d]]
    k > 1, or k = 1 pure:  [[n,k,d]]       -> [[n,k-1,d]]  (purity kept)
    pure, n >= 2:          [[n,k,d]]       -> [[n-1,k+1,d-1]]  pure
    n >= 2:                [[n,k,d]]       -> [[n-1,k,d-1]]
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .addcode import AdditiveCode, quantum_params
from .bounds import lp_max_distance, selfdual_distance_bound, singleton_ok
from .catalog import EXTERNAL_UPPER_BOUNDS, _table_lines, entries
from .constructions import (
    ConstructionError,
    css,
    gottesman_833,
    gottesman_code,
    gottesman_matrix,
    hamming_513,
    shorten_by_support,
)
from .cyclic import hamming_code, search_additive_cyclic


@dataclass(frozen=True)
class StoredCell:
    n: int
    k: int
    lower: int
    upper: int
    lower_source: str
    upper_mark: str


def stored_table() -> dict[tuple[int, int], StoredCell]:
    """The published table of best known distances (n <= 30, k <= 23)."""
    out = {}
    for n, k, lo, hi, src, mark in _table_lines("distance_table.txt"):
        cell = StoredCell(int(n), int(k), int(lo), int(hi), src, mark)
        out[(cell.n, cell.k)] = cell
    return out


# ---------------------------------------------------------------------------
# upper bounds


@dataclass(frozen=True)
class UpperCell:
    value: int
    source: str  # lp, singleton, selfdual, beta, gamma


def _singleton_max(n: int, k: int) -> int:
    d = 1
    while d < n and singleton_ok(n, k, d + 1):
        d += 1
    return d


def _lp_cell(cell: tuple[int, int]) -> int:
    return lp_max_distance(*cell)


def upper_bounds(max_n: int, jobs: int = 1, min_n: int = 1) -> dict[tuple[int, int], UpperCell]:
    cells = [(n, k) for n in range(min_n, max_n + 1) for k in range(n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            lp = dict(zip(cells, ex.map(_lp_cell, cells, chunksize=4)))
    else:
        lp = {c: _lp_cell(c) for c in cells}
    out = {}
    for n, k in cells:
        best = UpperCell(lp[(n, k)], "lp")
        cands = [UpperCell(_singleton_max(n, k), "singleton")]
        if k == 0:
            cands.append(UpperCell(selfdual_distance_bound(n), "selfdual"))
        if (n, k) in EXTERNAL_UPPER_BOUNDS:
            v, mark = EXTERNAL_UPPER_BOUNDS[(n, k)]
            cands.append(UpperCell(v, mark))
        for c in cands:
            if c.value < best.value:
                best = c
        out[(n, k)] = best
    return out


# ---------------------------------------------------------------------------
# lower bounds


@dataclass(frozen=True)
class Seed:
    label: str
    params: tuple[int, int, int, bool]


def _extended_hamming_8() -> AdditiveCode:
    rows = ["11010001", "01101001", "00110101", "00011011"]
    return css(rows, rows)


def _cyclic_9_0_4() -> AdditiveCode:
    return search_additive_cyclic(9, 4, rank_range=(9, 9), limit=1)[0].code


def seed_builders(max_n: int) -> list[tuple[str, Callable[[], AdditiveCode]]]:
    """Codes built here (rather than read from the catalog) that feed the
    lower bounds; they are verified by quantum_params before use."""
    out: list[tuple[str, Callable[[], AdditiveCode]]] = [
        ("hamming [[5,1,3]]", hamming_513),
        ("gottesman m=3", gottesman_833),
        ("css of the extended [8,4,4] Hamming code", _extended_hamming_8),
        ("cyclic search n=9", _cyclic_9_0_4),
    ]
    h21 = hamming_code(3)
    for m in (9, 11):
        out.append((f"[[21,15,3]] minus a weight-{m} support",
                    lambda m=m: shorten_by_support(h21, m)))
    if max_n > 10:
        out.append(("gottesman m=4", lambda: gottesman_code(4, gottesman_matrix(4))))
        out.append(("hamming [[21,15,3]]", lambda: h21))
        for m in range(2, 16):
            if m not in (9, 11):
                out.append((f"[[21,15,3]] minus a weight-{m} support",
                            lambda m=m: shorten_by_support(h21, m)))
    return out


def verified_seeds(max_n: int) -> list[Seed]:
    seeds = []
    for label, build in seed_builders(max_n):
        try:
            C = build()
        except ConstructionError:
            continue
        seeds.append(Seed(label, quantum_params(C).as_tuple()))
    for e in entries():
        if e.claimed is None:
            continue
        qp = e.verify()
        if e.verified:
            seeds.append(Seed(f"catalog {e.name}", qp.as_tuple()))
    return seeds


@dataclass
class LowerCell:
    d: int
    pure_d: int  # 0 when no pure code is known
    source: str


def propagate(seeds: Iterable[Seed], max_n: int) -> dict[tuple[int, int], LowerCell]:
    """Close the seed parameters under the four rules, over 1 <= n <= max_n."""
    best: dict[tuple[int, int], LowerCell] = {}
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            # [[n,n,1]] is the zero code; everything has d >= 1
            best[(n, k)] = LowerCell(1, 1, "trivial")
        if n >= 2 and n % 2 == 0:
            # <1^n, w^n> is a pure [[n,n-2,2]]
            best[(n, n - 2)] = LowerCell(2, 2, "trivial")

    def offer(n: int, k: int, d: int, pure: bool, source: str) -> bool:
        if not (1 <= n <= max_n and 0 <= k <= n):
            return False
        cell = best[(n, k)]
        pure = pure or k == 0
        changed = False
        if d > cell.d:
            cell.d, cell.source = d, source
            changed = True
        if pure and d > cell.pure_d:
            cell.pure_d = d
            changed = True
        return changed

    for s in seeds:
        n, k, d, pure = s.params
        offer(n, k, d, pure, s.label)
    changed = True
    while changed:
        changed = False
        for (n, k), cell in list(best.items()):
            D, P = cell.d, cell.pure_d
            if k > 0:
                changed |= offer(n + 1, k, D, False, "extend")
            if k > 1:
                changed |= offer(n, k - 1, D, False, "reduce k")
                if P:
                    changed |= offer(n, k - 1, P, True, "reduce k")
            elif k == 1 and P:
                changed |= offer(n, 0, P, True, "reduce k")
            if P >= 2 and n >= 2:
                changed |= offer(n - 1, k + 1, P - 1, True, "shorten")
            if D >= 2 and n >= 2:
                changed |= offer(n - 1, k, D - 1, False, "puncture")
    return best


def lower_bounds(max_n: int, seeds: list[Seed] | None = None) -> dict[tuple[int, int], LowerCell]:
    if seeds is None:
        seeds = verified_seeds(max_n)
    top = max([max_n] + [s.params[0] for s in seeds])
    full = propagate(seeds, top)
    return {c: v for c, v in full.items() if c[0] <= max_n}


# ---------------------------------------------------------------------------
# comparison


@dataclass(frozen=True)
class TableCell:
    n: int
    k: int
    lower: int
    upper: int
    lower_source: str
    upper_source: str
    stored: StoredCell | None

    @property
    def external(self) -> bool:
        return self.upper_source in ("beta", "gamma")

    @property
    def matches(self) -> bool | None:
        if self.stored is None:
            return None
        return (self.lower, self.upper) == (self.stored.lower, self.stored.upper)


def build_table(max_n: int, min_n: int = 3, jobs: int = 1) -> list[TableCell]:
    ub = upper_bounds(max_n, jobs)
    lb = lower_bounds(max_n)
    stored = stored_table()
    out = []
    for n in range(min_n, max_n + 1):
        for k in range(n + 1):
            u, lo = ub[(n, k)], lb[(n, k)]
            out.append(TableCell(n, k, lo.d, u.value, lo.source, u.source, stored.get((n, k))))
    return out


def _fmt(lo: int, hi: int) -> str:
    return str(lo) if lo == hi else f"{lo}-{hi}"


def render_text(cells: list[TableCell]) -> str:
    """Grid with one line per n; each cell is computed[/stored].  A '*'
    marks a mismatch and a '^' an upper bound taken from an external
    argument."""
    lines = []
    rows: dict[int, list[TableCell]] = {}
    for c in cells:
        rows.setdefault(c.n, []).append(c)
    width = 9
    kmax = max(c.k for c in cells)
    lines.append("n\\k " + "".join(f"{k:>{width}}" for k in range(kmax + 1)))
    for n in sorted(rows):
        parts = []
        for c in rows[n]:
            s = _fmt(c.lower, c.upper)
            if c.external:
                s += "^"
            if c.matches is False:
                s += "*" + _fmt(c.stored.lower, c.stored.upper)
            parts.append(f"{s:>{width}}")
        lines.append(f"{n:<4}" + "".join(parts))
    total = sum(1 for c in cells if c.matches is not None)
    bad = sum(1 for c in cells if c.matches is False)
    lines.append(f"cells compared: {total}  mismatches: {bad}")
    return "\n".join(lines) + "\n"


def render_records(cells: list[TableCell]) -> str:
    out = []
    for c in cells:
        fields = [
            "cell", f"n={c.n}", f"k={c.k}", f"lower={c.lower}", f"upper={c.upper}",
            f"lower_source={c.lower_source.replace(' ', '_')}", f"upper_source={c.upper_source}",
        ]
        if c.stored is not None:
            fields += [f"stored_lower={c.stored.lower}", f"stored_upper={c.stored.upper}",
                       f"match={'yes' if c.matches else 'no'}"]
        out.append(" ".join(fields))
    return "\n".join(out) + "\n"
