import pytest

from src.catalog import enumerate_catalog, matrices
from src.exceptions import CycleError, ParseError
from src.io import (
    aggregate_lines, matrices_dict, matrices_lines, p_line, parse_catalog, parse_poset,
    read_catalog, read_poset, serialize_catalog, serialize_poset, tables_dict, write_catalog,
    write_poset,
)
from src.poset import antichain, chain, fence


@pytest.fixture(scope="module")
def catalog3():
    return enumerate_catalog(3)


def test_parse_poset_takes_closure():
    text = "# a chain\n\npoints 3\nrel 0 1\n  rel 1 2  \n"
    assert parse_poset(text) == chain(3)


def test_parse_poset_without_relations():
    assert parse_poset("points 2\n") == antichain(2)


@pytest.mark.parametrize("text, line", [
    ("rel 0 1\n", 1),
    ("points two\n", 1),
    ("points 2\nrel 0 5\n", 2),
    ("points 2\nrel 0 x\n", 2),
    ("points 2\n\nrel 1 1\n", 3),
    ("points 2\nrel 0\n", 2),
    ("points 2\nlink 0 1\n", 2),
    ("points 65\n", 1),
])
def test_parse_poset_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_poset(text)
    assert excinfo.value.line_number == line
    assert str(excinfo.value).startswith(f"line {line}: ")


def test_parse_poset_requires_header():
    with pytest.raises(ParseError) as excinfo:
        parse_poset("# nothing here\n")
    assert excinfo.value.line_number is None


def test_parse_poset_rejects_cycles():
    with pytest.raises(CycleError):
        parse_poset("points 3\nrel 0 1\nrel 1 2\nrel 2 0\n")


def test_serialize_writes_covers_only():
    assert serialize_poset(fence(2)) == "points 4\nrel 0 1\nrel 2 1\nrel 2 3\n"
    text = "points 3\nrel 0 1\nrel 1 2\nrel 0 2\n"
    assert serialize_poset(parse_poset(text)) == "points 3\nrel 0 1\nrel 1 2\n"


def test_poset_files(tmp_path):
    path = tmp_path / "nested" / "fence.txt"
    write_poset(fence(2), path)
    assert read_poset(path) == fence(2)
    with pytest.raises(FileNotFoundError):
        read_poset(tmp_path / "missing.txt")


def test_catalog_file_reserializes_identically(catalog3):
    text = serialize_catalog(catalog3)
    assert text.splitlines()[0] == "posetx-catalog v1 kmax=3"
    assert text.splitlines()[1] == "1\t0\t0\t0\t1\t1\t1\t+1*1\t00"
    assert len(text.splitlines()) == 1 + 9
    assert serialize_catalog(parse_catalog(text)) == text


def test_catalog_file_rejects_tampered_column(catalog3):
    lines = serialize_catalog(catalog3).splitlines()
    lines[1] = "1\t0\t0\t0\t1\t1\t2\t+1*1\t00"
    with pytest.raises(ParseError) as excinfo:
        parse_catalog("\n".join(lines) + "\n")
    assert excinfo.value.line_number == 2
    assert "d" in str(excinfo.value)


@pytest.mark.parametrize("text", [
    "",
    "posetx-catalog v2 kmax=3\n",
    "posetx-catalog v1 kmax=3\n1\t0\t0\n",
    "posetx-catalog v1 kmax=3\n1\t0\t0\t0\t1\t1\t1\t+1*1\tzz\n",
])
def test_catalog_file_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        parse_catalog(text)


def test_catalog_file_rejects_rows_beyond_kmax(catalog3):
    body = serialize_catalog(catalog3).splitlines()[1:]
    with pytest.raises(ParseError):
        parse_catalog("posetx-catalog v1 kmax=2\n" + "\n".join(body) + "\n")


def test_catalog_files(tmp_path, catalog3):
    path = tmp_path / "out" / "catalog.tsv"
    write_catalog(catalog3, path)
    assert [entry.canon for entry in read_catalog(path)] == [entry.canon for entry in catalog3]
    with pytest.raises(FileNotFoundError):
        read_catalog(tmp_path / "missing.tsv")


def test_aggregate_lines(catalog3):
    lines = aggregate_lines(catalog3)
    assert lines[0] == "e_0(m) = +1*1"
    assert "e_3(m) = +1*8 +6*6 +6*5 -6*4 -18*3 +12*2 -1*1" in lines
    assert "e_31(m) = +3*5 +3*4 -6*3" in lines
    assert "e_3^3(m) = +6*4 -6*3" in lines
    assert "e_3^1(m) = +1*8 -3*4 +3*2 -1*1" in lines


def test_p_line(catalog5):
    assert p_line(catalog5) == "p: 1 1 3 19 219 4231 130023"


def test_tables_dict(catalog3):
    tables = tables_dict(catalog3)
    assert tables['kmax'] == 3
    assert tables['e_k']['2'] == "+1*4 +2*3 -4*2 +1*1"
    assert tables['p'] == [1, 1, 3, 19, 219]


def test_matrix_rendering():
    M = matrices(enumerate_catalog(1), 2)
    assert matrices_dict(M) == {
        'A': [[1, 1], [0, 2]],
        'B': [[1, 1], [0, 1]],
        'C': [[1, -1], [0, 1]],
        'D': [[1, 1], [1, 2], [1, 4]],
        'E': [[1, 0], [1, 1], [1, 3]],
    }
    lines = matrices_lines(M)
    assert lines[:3] == ["A (2x2)", "1 1", "0 2"]
    assert lines[lines.index("C (2x2)") + 1] == " 1 -1"
    assert "E (3x2)" in lines
