import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcheck.errors import EntryOutOfRange
from schurcheck.partitions import Partition, conjugate_oracle
from schurcheck.tableaux import FerrersShape, Tableau, content, enumerate_ssyt, is_ssyt, is_standard

from oracles import brute_force_ssyt

# The eight (2,1) tableaux in three letters, in row-major lexicographic order.
S21_TABLEAUX = [
    ((1, 1), (2,)),
    ((1, 1), (3,)),
    ((1, 2), (2,)),
    ((1, 2), (3,)),
    ((1, 3), (2,)),
    ((1, 3), (3,)),
    ((2, 2), (3,)),
    ((2, 3), (3,)),
]

SHAPE_4221 = Tableau.from_rows([[1, 2, 2, 5], [2, 4], [3, 6], [5]])

small_shapes = st.lists(st.integers(1, 3), max_size=3).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_ferrers_shape():
    f = FerrersShape.of(Partition(4, 2, 2, 1))
    assert len(f.cells) == 9
    assert (1, 4) in f.cells and (4, 1) in f.cells and (2, 3) not in f.cells
    assert f.transpose().shape == Partition(4, 3, 1, 1)
    assert FerrersShape.of(Partition(3, 2, 1, 1, 1)).transpose().shape == Partition(5, 2, 1)
    assert f.render() == "####\n##\n##\n#"


@given(st.lists(st.integers(1, 10), max_size=10).map(lambda xs: Partition(sorted(xs, reverse=True))))
def test_ferrers_transpose_matches_conjugate(p):
    f = FerrersShape.of(p)
    assert len(f.cells) == p.size
    assert f.transpose().shape == conjugate_oracle(p)


def test_enumerate_s21_three_letters():
    got = [t.rows for t in enumerate_ssyt(Partition(2, 1), 3)]
    assert got == S21_TABLEAUX


def test_enumerate_trivial():
    assert [t.rows for t in enumerate_ssyt(Partition(1), 1)] == [((1,),)]
    assert [t.rows for t in enumerate_ssyt(Partition(), 4)] == [()]
    assert list(enumerate_ssyt(Partition(1, 1), 1)) == []


def test_enumerate_s21_six_letters():
    assert sum(1 for _ in enumerate_ssyt(Partition(2, 1), 6)) == 70


@pytest.mark.parametrize("n", range(2, 8))
def test_s21_count_formula(n):
    assert sum(1 for _ in enumerate_ssyt(Partition(2, 1), n)) == n * (n - 1) * (n + 1) // 3


@pytest.mark.parametrize(
    "shape, m",
    [((2, 1), 4), ((2, 2), 3), ((3, 1), 3), ((2, 1, 1), 4), ((3, 2), 3), ((1, 1, 1), 3), ((4,), 3)],
)
def test_enumeration_matches_brute_force(shape, m):
    got = [t.rows for t in enumerate_ssyt(Partition(shape), m)]
    assert got == brute_force_ssyt(shape, m)


@settings(max_examples=40)
@given(small_shapes, st.integers(1, 4))
def test_enumeration_properties(shape, m):
    tabs = list(enumerate_ssyt(shape, m))
    assert all(is_ssyt(t) for t in tabs)
    assert len({t.rows for t in tabs}) == len(tabs)
    assert all(sum(content(t, m)) == shape.size for t in tabs)
    assert {t.rows for t in tabs} <= {t.rows for t in enumerate_ssyt(shape, m + 1)}


def test_enumeration_is_lazy():
    stream = enumerate_ssyt(Partition(5, 4, 3), 40)
    first = next(stream)
    assert first.rows == ((1, 1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3))


def test_is_ssyt():
    assert is_ssyt(SHAPE_4221)
    assert not is_ssyt(Tableau.from_rows([[1, 1], [1]]))
    assert not is_ssyt(Tableau.from_rows([[2, 1], [3]]))
    assert not is_ssyt(Tableau.from_rows([[0]]))


def test_is_standard():
    assert is_standard(Tableau.from_rows([[1, 2], [3]]))
    assert not is_standard(Tableau.from_rows([[1, 1], [2]]))
    assert not is_standard(SHAPE_4221)
    assert is_standard(Tableau.from_rows([[1, 3], [2], [4]]))


def test_standard_tableaux_count_hook_length():
    # (3,2) has 5 standard tableaux: hook lengths 4,3,1,2,1 -> 5!/24
    standard = [t for t in enumerate_ssyt(Partition(3, 2), 5) if is_standard(t)]
    assert len(standard) == 5


def test_content():
    assert content(Tableau.from_rows([[1, 1], [2]]), 3) == (2, 1, 0)
    assert content(Tableau.from_rows([[1, 2], [3]]), 3) == (1, 1, 1)
    assert content(Tableau.from_rows([[1, 3], [2]]), 3) == (1, 1, 1)
    assert content(Tableau(Partition(), ()), 3) == (0, 0, 0)
    with pytest.raises(EntryOutOfRange):
        content(Tableau.from_rows([[1, 4]]), 3)


def test_tableau_shape_mismatch():
    with pytest.raises(ValueError):
        Tableau(Partition(2, 1), ((1,), (2,)))


def test_render_and_json():
    t = Tableau.from_rows([[1, 2], [3]])
    assert t.render() == "1 2\n3"
    assert t.to_json() == [[1, 2], [3]]


def test_content_of_s21_tableaux_give_s21_monomials():
    contents = [content(t, 3) for t in enumerate_ssyt(Partition(2, 1), 3)]
    assert contents.count((1, 1, 1)) == 2
    assert len(set(contents)) == 7
    assert all(contents.count(c) == 1 for c in set(contents) if c != (1, 1, 1))


def test_brute_force_oracle_on_hand_count():
    assert brute_force_ssyt((1, 1), 3) == [((1,), (2,)), ((1,), (3,)), ((2,), (3,))]
