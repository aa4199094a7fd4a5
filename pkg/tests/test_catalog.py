import warnings

import pytest

from qgf4 import catalog
from qgf4.addcode import AdditiveCode, dual, is_self_orthogonal, weight_distribution
from qgf4.catalog import (
    CodeFileError,
    RankDeficiencyWarning,
    data_text,
    format_code,
    parse_code,
    read_code,
    write_code,
)
from qgf4.constructions import concatenate, hamming_513

DATA_FILES = [
    "concat_25_1_9.txt",
    "concat_25_1_9_dual.txt",
    "dodecacode.txt",
    "extended_gottesman_40.txt",
    "hexacode.txt",
    "linear_14_8.txt",
    "random_17_6.txt",
    "uuv_12_8.txt",
]


def header_comments(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        out.append(line[2:] if line.startswith("# ") else "")
    return out


def test_parse_example():
    C = parse_code("# comment\n\n2 2\n1w\nW1\n")
    assert (C.n, C.r) == (2, 2)
    assert C.rows() == ["1w", "W1"]


@pytest.mark.parametrize("name", catalog.names())
def test_round_trip_every_entry(name):
    C = catalog.get(name).code
    text = format_code(C, ["round trip"])
    back = parse_code(text)
    assert back == C and back.rows() == C.rows()
    assert format_code(back, ["round trip"]) == text


def test_file_round_trip(tmp_path):
    C = catalog.get("dodecacode").code
    p = tmp_path / "d.txt"
    write_code(C, p, ["dodecacode"])
    assert read_code(p) == C
    assert p.read_text().startswith("# dodecacode\n12 12\n")


@pytest.mark.parametrize("filename", DATA_FILES)
def test_data_files_are_byte_stable(filename):
    text = data_text(filename)
    C = parse_code(text)
    assert format_code(C, header_comments(text)) == text


def test_concatenated_code_file():
    """The stored (25, 2^24) code is the code built by concatenation, and its
    dual file is its dual."""
    built = concatenate(hamming_513(), hamming_513())
    stored = catalog.get("concat_25_1_9").code
    assert built == stored
    assert dual(stored) == catalog.get("concat_25_1_9_dual").code
    text = data_text("concat_25_1_9.txt")
    assert format_code(stored, header_comments(text)) == text


def test_bad_symbol_reports_position():
    with pytest.raises(CodeFileError) as e:
        parse_code("# x\n3 1\n1x0\n", source="f.txt")
    assert (e.value.line, e.value.column) == (3, 2)
    assert "f.txt:3:2" in str(e.value)


@pytest.mark.parametrize("text", [
    "3 2\n100\n",          # too few rows
    "3 1\n100\n010\n",     # too many rows
    "3\n100\n",            # bad header
    "3 1\n10\n",           # short row
    "# only comments\n",   # no header
    "0 0\n",
])
def test_malformed_files(text):
    with pytest.raises(CodeFileError):
        parse_code(text)


def test_rank_deficiency_warning():
    with pytest.warns(RankDeficiencyWarning):
        C = parse_code("2 3\n10\n01\n11\n")
    assert C.r == 2 and C.dropped == 1
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_code("2 2\n10\n01\n")


@pytest.mark.parametrize("entry", [e for e in catalog.entries() if e.claimed], ids=lambda e: e.name)
def test_every_entry_verifies(entry):
    qp = entry.verify()
    assert entry.verified, (entry.name, qp.as_tuple(), entry.claimed)
    assert is_self_orthogonal(entry.code)


def test_aliases():
    assert catalog.get("note_v") is catalog.get("random_17_6")
    assert catalog.get("note_v").verify().as_tuple() == (17, 11, 3, True)
    assert catalog.get("note_j_ovoid") is catalog.get("ovoid_17_8")
    assert catalog.get("note_i_12") is catalog.get("uuv_12_8")
    with pytest.raises(KeyError):
        catalog.get("no_such_code")


def test_ovoid_weights():
    A = weight_distribution(catalog.get("ovoid_17_8").code)
    assert A.support() == {0: 1, 12: 204, 16: 51}
    assert A.support() == catalog.get("ovoid_17_8").metadata["weights"]


def test_aut_claims_are_metadata_only():
    e = catalog.get("hexacode")
    assert e.metadata["aut_order"] == 2160
    assert catalog.get("concat_25_1_9_dual").claimed is None
    with pytest.raises(ValueError):
        catalog.get("concat_25_1_9_dual").verify()


def test_external_bounds_are_consistent_with_codes():
    for e in catalog.entries():
        if not e.claimed:
            continue
        n, k, d, _ = e.claimed
        if (n, k) in catalog.EXTERNAL_UPPER_BOUNDS:
            assert d <= catalog.EXTERNAL_UPPER_BOUNDS[(n, k)][0]


def test_names_unique():
    names = catalog.names()
    assert len(names) == len(set(names))
    assert isinstance(catalog.get("c1").code, AdditiveCode)
