import pytest
from hypothesis import given, strategies as st

from hamsym.errors import FamilyFormatError
from hamsym.family import QaryFamily, SetFamily, complete_intersecting_family
from hamsym.familyio import format_family, parse_family, read_family, write_family


def test_parse_binary_orientation():
    fam = parse_family("# four singletons\nn 4\n1000\n0100\n\n0010\n0001  \n")
    assert isinstance(fam, SetFamily)
    assert fam.as_sets() == [{1}, {2}, {3}, {4}]


def test_parse_qary():
    fam = parse_family("n 2\nq 3\n00\n01\n02\n")
    assert isinstance(fam, QaryFamily)
    assert fam.members == ((0, 0), (0, 1), (0, 2))


def test_explicit_q2_is_binary():
    assert isinstance(parse_family("n 2\nq 2\n10\n"), SetFamily)


def test_empty_family_is_valid():
    assert len(parse_family("n 3\n")) == 0


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("n 4\n1000\n1000\n", 3),
        ("n 4\n100\n", 2),
        ("n 4\n1020\n", 2),
        ("n 2\nq 3\n03\n", 3),
        ("# c\nm 4\n", 2),
        ("n x\n", 1),
        ("n 2\n1x\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(FamilyFormatError) as err:
        parse_family(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_missing_header():
    with pytest.raises(FamilyFormatError):
        parse_family("# nothing\n")


def test_file_roundtrip(tmp_path):
    fam = complete_intersecting_family(5)
    path = tmp_path / "cif.txt"
    write_family(fam, path)
    assert read_family(path) == fam


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2**n - 1), unique=True, max_size=20))))
def test_binary_roundtrip(args):
    n, members = args
    fam = SetFamily(n, tuple(members))
    assert parse_family(format_family(fam)) == fam


@given(st.integers(1, 5), st.integers(3, 7), st.data())
def test_qary_roundtrip(n, q, data):
    words = data.draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * n), unique=True, max_size=10))
    fam = QaryFamily(n, q, words)
    assert parse_family(format_family(fam)) == fam
