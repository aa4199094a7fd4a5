"""Named codes with their claimed parameters, and the plain-text code file format.

File format: `#` starts a comment line, blank lines are ignored, the first
other line is `n r`, followed by r rows of n symbols from 0 1 w W.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .addcode import AdditiveCode, QuantumParams, dual, quantum_params
from .constructions import dn_plus, gottesman_833, hamming_513, puncture
from .cyclic import cyclic_orbit_code, quasicyclic_code
from .gf4core import SYMBOLS, SymplecticVector, scale_symplectic


class CodeFileError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None, source: str = "<text>"):
        where = f"{source}:{line}" + (f":{column}" if column is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class RankDeficiencyWarning(UserWarning):
    pass


def parse_code(text: str, source: str = "<text>") -> AdditiveCode:
    """Parse the code file format.  Dependent rows are dropped; the count is
    left in ``code.dropped`` and reported as a RankDeficiencyWarning."""
    header = None
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise CodeFileError(f"expected header 'n r', got {line!r}", lineno, source=source)
            header = (int(parts[0]), int(parts[1]))
            if header[0] < 1:
                raise CodeFileError("length n must be positive", lineno, source=source)
            continue
        n = header[0]
        for col, ch in enumerate(line, 1):
            if ch not in SYMBOLS:
                raise CodeFileError(f"invalid symbol {ch!r}; expected one of 0 1 w W", lineno, col, source)
        if len(line) != n:
            raise CodeFileError(f"row has {len(line)} symbols, expected {n}", lineno, source=source)
        rows.append((lineno, line))
    if header is None:
        raise CodeFileError("missing header 'n r'", 1, source=source)
    n, r = header
    if len(rows) != r:
        last = rows[-1][0] if rows else 1
        raise CodeFileError(f"header promises {r} rows, found {len(rows)}", last, source=source)
    code = AdditiveCode(n, [SymplecticVector.from_string(s) for _, s in rows])
    if code.dropped:
        warnings.warn(
            f"{source}: {code.dropped} dependent row(s) dropped, rank {code.r} < {r}",
            RankDeficiencyWarning,
            stacklevel=2,
        )
    return code


def format_code(C: AdditiveCode, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"{C.n} {C.r}")
    lines += C.rows()
    return "\n".join(lines) + "\n"


def read_code(path: str | Path) -> AdditiveCode:
    p = Path(path)
    return parse_code(p.read_text(), source=str(p))


def write_code(C: AdditiveCode, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_code(C, comments))


def data_text(filename: str) -> str:
    return resources.files("qgf4").joinpath("data", filename).read_text()


def load_data_code(filename: str) -> AdditiveCode:
    return parse_code(data_text(filename), source=filename)


def _table_lines(filename: str) -> list[list[str]]:
    out = []
    for line in data_text(filename).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    return out


# ---------------------------------------------------------------------------
# entries


@dataclass
class CatalogEntry:
    """A named code.  ``claimed`` is (n, k, d, pure) as stated by its source,
    or None for entries that are not stabilizer codes themselves (such as
    the dual side of a pair).  ``metadata`` holds claims that are not
    checked, such as automorphism group orders."""

    name: str
    claimed: tuple[int, int, int, bool] | None
    source: str
    builder: Callable[[], AdditiveCode] = field(repr=False)
    metadata: dict = field(default_factory=dict)
    aliases: tuple[str, ...] = ()
    verified: bool = False
    _code: AdditiveCode | None = field(default=None, repr=False)

    @property
    def code(self) -> AdditiveCode:
        if self._code is None:
            self._code = self.builder()
            self._code.name = self.name
        return self._code

    def verify(self, budget: int | None = None) -> QuantumParams:
        """Recompute [[n,k,d]] and set ``verified`` when it matches the claim."""
        if self.claimed is None:
            raise ValueError(f"{self.name} carries no stabilizer parameters")
        qp = quantum_params(self.code, budget)
        self.verified = (qp.n, qp.k, qp.d, qp.pure) == self.claimed
        return qp


def _linear(rows: list[str]) -> Callable[[], AdditiveCode]:
    return lambda: AdditiveCode.from_rows(rows, linear=True)


def _rows(rows: list[str]) -> Callable[[], AdditiveCode]:
    return lambda: AdditiveCode.from_rows(rows)


def _file(filename: str) -> Callable[[], AdditiveCode]:
    return lambda: load_data_code(filename)


def _code_833() -> AdditiveCode:
    C = cyclic_orbit_code(["01wwW1W"])
    gens = [SymplecticVector.from_string(str(g) + "0") for g in C.generators]
    gens += [SymplecticVector.from_string("1" * 8), SymplecticVector.from_string("w" * 8)]
    return AdditiveCode(8, gens)


def _ovoid() -> AdditiveCode:
    P = cyclic_orbit_code(["1w1w1" + "0" * 12])
    P = AdditiveCode(17, list(P.generators) + [scale_symplectic(g, 1) for g in P.generators])
    return dual(P)


def _concat_dual() -> AdditiveCode:
    return load_data_code("concat_25_1_9_dual.txt")


def _build_entries() -> list[CatalogEntry]:
    E = CatalogEntry
    out = [
        E("hexacode", (6, 0, 4, True), "hexacode, GF(4) span of three rows",
          _file("hexacode.txt"), {"aut_order": 2160, "aut_note": "3.S6, as a linear code"}),
        E("dodecacode", (12, 0, 6, True), "additive self-dual (12, 2^12) code with d = 6",
          _file("dodecacode.txt"), {"aut_order": 648,
                                    "cyclic_generator": "w10100100101"}),
        E("hamming_5_1_3", (5, 1, 3, True), "[[5,1,3]] Hamming code, GF(4) span of 01111 and 101wW",
          hamming_513),
        E("code_8_3_3", (8, 3, 3, True), "[[8,3,3]] code: cyclic shifts of 01wwW1W then 0, plus 1^8 and w^8",
          _code_833, {"aut_order": 168, "equivalent_to": "gottesman m=3",
                      "unique": True}),
        E("concat_25_1_9", (25, 1, 9, False), "[[25,1,9]] from concatenating [[5,1,3]] with itself",
          _file("concat_25_1_9.txt")),
        E("concat_25_1_9_dual", None, "(25, 2^26) dual of the concatenated [[25,1,9]] code",
          _concat_dual, {"dual_of": "concat_25_1_9"}),
        E("extended_gottesman_40", (40, 33, 3, True), "(40, 2^7) code of a [[40,33,3]] code",
          _file("extended_gottesman_40.txt")),
        E("uuv_12_8", (12, 4, 4, True), "(12, 2^8) linear code, u|u+v of the [[6,4,2]] and [[6,0,4]] codes",
          _file("uuv_12_8.txt"), {"aut_order": 720, "transitive": True}, ("note_i_12",)),
        E("linear_14_8", (14, 6, 4, True), "(14, 2^8) linear code",
          _file("linear_14_8.txt"), {"aut_order": 8064, "transitive": True}, ("note_i_14",)),
        E("ovoid_17_8", (17, 9, 4, True), "(17, 2^8) two-weight code; its dual is cyclic, spanned by 1w1w1 0^12",
          _ovoid, {"aut_order": 48960, "weights": {0: 1, 12: 204, 16: 51}}, ("note_j_ovoid",)),
        E("random_17_6", (17, 11, 3, True), "(17, 2^6) code found by random search",
          _file("random_17_6.txt"), {"aut_order": 1}, ("note_v",)),
        E("second_6_1_3", (6, 1, 3, False), "an impure [[6,1,3]] not equivalent to the lengthened [[5,1,3]]",
          _rows(["000011", "011110", "0wwwww", "101wWw", "w0wW10"])),
        E("selfdual_4_indecomposable", (4, 0, 2, True), "indecomposable self-dual code of length 4",
          _rows(["1100", "0011", "wwww", "01wW"])),
        E("selfdual_5_indecomposable_a", (5, 0, 2, True), "indecomposable self-dual code of length 5",
          _rows(["11000", "00110", "00101", "01www", "ww001"])),
        E("selfdual_5_indecomposable_b", (5, 0, 2, True), "indecomposable self-dual code of length 5",
          _rows(["11000", "00110", "10101", "ww00w", "00www"])),
        E("selfdual_5_3", (5, 0, 3, True), "(5, 2^5) d = 3 self-dual code, the punctured hexacode",
          lambda: puncture(load_data_code("hexacode.txt"))),
        E("c1", (1, 0, 1, True), "trivial self-dual code of length 1", _rows(["1"])),
    ]
    for n in range(2, 6):
        out.append(E(f"d{n}_plus", (n, 0, 2, True), f"d_{n}^+ self-dual code", lambda n=n: dn_plus(n)))
    for parts in _table_lines("cyclic_generators.txt"):
        n, k, d = map(int, parts[:3])
        gens = parts[3:]
        out.append(E(f"cyclic_{n}_{k}_{d}", (n, k, d, True),
                     "additive cyclic code, all cyclic shifts of " + ", ".join(gens),
                     lambda g=gens: cyclic_orbit_code(g), {"generators": gens}))
    for parts in _table_lines("quasicyclic_generators.txt"):
        n, k, d = map(int, parts[:3])
        blocks = parts[3:]
        out.append(E(f"quasicyclic_{n}_{k}_{d}", (n, k, d, True),
                     "linear quasicyclic code with blocks " + " ".join(blocks),
                     lambda b=blocks: quasicyclic_code([b]), {"blocks": blocks}))
    return out


_ENTRIES: list[CatalogEntry] | None = None
_INDEX: dict[str, CatalogEntry] = {}


def _ensure() -> None:
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build_entries()
        for e in _ENTRIES:
            _INDEX[e.name] = e
            for a in e.aliases:
                _INDEX[a] = e


def get(name: str) -> CatalogEntry:
    _ensure()
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None


def entries() -> list[CatalogEntry]:
    _ensure()
    return list(_ENTRIES)


def names() -> list[str]:
    return [e.name for e in entries()]


# upper bounds that come from arguments outside the linear program; the
# value is the bound and the mark says which kind
EXTERNAL_UPPER_BOUNDS: dict[tuple[int, int], tuple[int, str]] = {
    (7, 0): (3, "beta"),
    (13, 0): (5, "beta"),
    (15, 4): (4, "beta"),
    (15, 7): (3, "beta"),
    (16, 8): (3, "beta"),
    (18, 12): (2, "beta"),
    (19, 8): (4, "gamma"),
    (19, 13): (2, "beta"),
    (22, 14): (3, "beta"),
    (25, 0): (9, "beta"),
}
