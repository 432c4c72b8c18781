import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcheck.errors import DoesNotFit, MaxMismatch, NotAPartition, PredicateDomain
from schurcheck.partitions import (
    CountWitness,
    FixedPartitionSequence,
    Partition,
    column_counts,
    conjugate_oracle,
    count_if_sup_exact,
    count_if_sup_literal,
    from_fixed,
    is_conjugate_pred,
    is_conjugate_pred_literal,
    is_partition_pred,
    parse_partition,
    partition_from_parts,
    partitions_of,
    to_fixed,
)

from oracles import euler_p, transpose_diagram

EXAMPLE = Partition(3, 2, 1, 1, 1)


def partitions(max_part=98, max_len=30):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(lambda xs: Partition(sorted(xs, reverse=True)))


def fixed(values, max=100):
    return FixedPartitionSequence.padded(values, max)


# -- Partition --------------------------------------------------------------------


def test_partition_from_parts():
    assert partition_from_parts([3, 2, 1, 1, 1]) == EXAMPLE
    assert partition_from_parts([]) == Partition()
    assert partition_from_parts([2, 1, 0, 0]) == Partition(2, 1)


@pytest.mark.parametrize("bad", [[2, 3, 1], [3, -1], [2, 0, 1]])
def test_partition_from_parts_rejects(bad):
    with pytest.raises(NotAPartition):
        partition_from_parts(bad)


def test_partition_accessors():
    assert EXAMPLE.size == 8
    assert EXAMPLE.length == len(EXAMPLE) == 5
    assert str(EXAMPLE) == "3,2,1,1,1"
    assert repr(Partition(4)) == "Partition(4)"
    assert not Partition()


@pytest.mark.parametrize(
    "text, expected",
    [("3,2,1,1,1", EXAMPLE), ("", Partition()), (" 4, 2 ", Partition(4, 2)), ("2,1,0", Partition(2, 1))],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["a,b", "1,,2", "1,2"])
def test_parse_partition_rejects(text):
    with pytest.raises(NotAPartition):
        parse_partition(text)


# -- fixed layout ---------------------------------------------------------------------


def test_to_fixed_example():
    s = to_fixed(EXAMPLE)
    assert s.max == 100
    assert s.cells[1:6] == [3, 2, 1, 1, 1]
    assert s.cells[0] == 0 and not any(s.cells[6:])


def test_to_fixed_empty():
    assert not any(to_fixed(Partition()).cells)


def test_to_fixed_bounds():
    with pytest.raises(DoesNotFit):
        to_fixed(Partition(99))
    to_fixed(Partition(98))
    with pytest.raises(DoesNotFit):
        to_fixed(Partition([1] * 99))
    to_fixed(Partition([1] * 98))
    with pytest.raises(DoesNotFit):
        to_fixed(Partition(1, 1, 1), max=4)


def test_from_fixed():
    assert from_fixed(fixed([3, 2, 1, 1, 1])) == EXAMPLE
    assert from_fixed(FixedPartitionSequence.zeros()) == Partition()
    with pytest.raises(NotAPartition):
        from_fixed(fixed([1, 2]))


def test_fixed_sequence_layout_is_checked():
    with pytest.raises(ValueError):
        FixedPartitionSequence([0] * 5, 6)
    with pytest.raises(ValueError):
        FixedPartitionSequence([1, 0, 0], 3)
    s = FixedPartitionSequence.zeros(5)
    with pytest.raises(IndexError):
        s[0] = 1


@given(partitions())
def test_fixed_roundtrip(p):
    assert from_fixed(to_fixed(p)) == p


# -- predicates -----------------------------------------------------------------------


def test_is_partition_pred():
    assert is_partition_pred(fixed([3, 2, 1, 1, 1]))
    assert is_partition_pred(FixedPartitionSequence.zeros())
    tail = FixedPartitionSequence.zeros(6)
    tail.cells[5] = 1
    assert not is_partition_pred(tail)
    assert not is_partition_pred(fixed([99]))
    assert is_partition_pred(fixed([98]))
    assert not is_partition_pred(fixed([1, 2]))
    assert not is_partition_pred(fixed([2, -1]))


def test_is_partition_pred_tiny_max_exhaustive():
    # Enumerate every cell vector for max=4 and compare with the clauses read directly.
    import itertools

    for c1, c2, c3 in itertools.product(range(-1, 5), repeat=3):
        s = FixedPartitionSequence([0, c1, c2, c3], 4)
        expected = all(0 <= c < 3 for c in (c1, c2, c3)) and c1 >= c2 >= c3 and c3 == 0
        assert is_partition_pred(s) == expected


def test_count_if_sup_exact_examples():
    s = fixed([3, 2, 1, 1, 1])
    assert count_if_sup_exact(s, 100, 2) == 2
    assert count_if_sup_exact(s, 100, 1) == 5
    assert count_if_sup_exact(s, 3, 1) == 2
    for k in range(1, 100):
        assert count_if_sup_exact(s, 1, k) == 0


@pytest.mark.parametrize("j, k", [(0, 1), (101, 1), (5, 0), (5, 100)])
def test_count_if_sup_exact_domain(j, k):
    with pytest.raises(PredicateDomain):
        count_if_sup_exact(fixed([1]), j, k)


@given(partitions())
def test_column_counts_agree_with_exact_count(p):
    s = to_fixed(p)
    counts = column_counts(s)
    assert counts[1:] == [count_if_sup_exact(s, 100, k) for k in range(1, 100)]


def test_count_if_sup_literal_examples():
    s = fixed([3, 2, 1, 1, 1])
    assert count_if_sup_literal(s, CountWitness(100, 2, 2))
    # The disjunctive form also accepts an under-count.
    assert count_if_sup_literal(s, CountWitness(100, 2, 1))
    assert count_if_sup_literal(s, CountWitness(100, 4, 0))
    assert not count_if_sup_literal(s, CountWitness(100, 2, 3))
    assert not count_if_sup_literal(s, CountWitness(100, 2, 0))
    assert not count_if_sup_literal(s, CountWitness(101, 2, 2))
    assert not count_if_sup_literal(s, CountWitness(100, 0, 0))
    assert not count_if_sup_literal(fixed([1, 2]), CountWitness(100, 1, 1))


@given(partitions(), st.integers(1, 99))
def test_exact_count_satisfies_literal_predicate(p, k):
    s = to_fixed(p)
    assert count_if_sup_literal(s, CountWitness(100, k, count_if_sup_exact(s, 100, k)))


@given(partitions())
def test_exact_count_is_decreasing_in_k(p):
    s = to_fixed(p)
    counts = [count_if_sup_exact(s, 100, k) for k in range(1, 100)]
    assert counts == sorted(counts, reverse=True)


def test_is_conjugate_pred_examples():
    assert is_conjugate_pred(fixed([3, 2, 1, 1, 1]), fixed([5, 2, 1]))
    assert is_conjugate_pred(FixedPartitionSequence.zeros(), FixedPartitionSequence.zeros())
    assert not is_conjugate_pred(fixed([3, 2, 1, 1, 1]), fixed([5, 2, 0]))
    with pytest.raises(MaxMismatch):
        is_conjugate_pred(fixed([1]), fixed([1], max=10))


def test_literal_conjugacy_is_weaker_than_exact():
    a = fixed([3, 2, 1, 1, 1])
    under = fixed([4, 1, 1])
    assert is_conjugate_pred_literal(a, fixed([5, 2, 1]))
    assert is_conjugate_pred_literal(a, under)
    assert not is_conjugate_pred(a, under)
    assert not is_conjugate_pred_literal(a, fixed([5, 2, 0]))


# -- conjugation and enumeration ----------------------------------------------------


@pytest.mark.parametrize(
    "p, expected",
    [(EXAMPLE, Partition(5, 2, 1)), (Partition(), Partition()), (Partition(4, 2, 2, 1), Partition(4, 3, 1, 1))],
)
def test_conjugate_oracle(p, expected):
    assert conjugate_oracle(p) == expected


@given(partitions())
def test_conjugate_properties(p):
    c = conjugate_oracle(p)
    assert conjugate_oracle(c) == p
    assert c.size == p.size
    assert c.parts == transpose_diagram(p.parts)
    if p:
        assert len(c) == p[0] and c[0] == len(p)


def test_partitions_of_small():
    assert list(partitions_of(3)) == [Partition(3), Partition(2, 1), Partition(1, 1, 1)]
    assert list(partitions_of(0)) == [Partition()]
    assert list(partitions_of(5, max_part=2)) == [Partition(2, 2, 1), Partition(2, 1, 1, 1), Partition(1, 1, 1, 1, 1)]
    with pytest.raises(ValueError):
        list(partitions_of(-1))


@pytest.mark.parametrize("n", range(0, 31))
def test_partitions_of_counts_match_euler(n):
    ps = list(partitions_of(n))
    assert len(ps) == euler_p(n)
    assert len(set(ps)) == len(ps)
    assert ps == sorted(ps, reverse=True)
    assert all(p.size == n for p in ps)


def test_partitions_of_thirty():
    assert sum(1 for _ in partitions_of(30)) == 5604


@settings(max_examples=30)
@given(st.integers(0, 15), st.integers(1, 15))
def test_partitions_of_respects_max_part(n, bound):
    ps = list(partitions_of(n, bound))
    assert all(not p or p[0] <= bound for p in ps)
    assert set(ps) == {p for p in partitions_of(n) if not p or p[0] <= bound}
