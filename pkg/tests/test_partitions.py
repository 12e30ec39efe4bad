from hypothesis import given, strategies as st

from isoschub.partitions import (
    conjugate, contains, count_bases, dominates, is_k_strict, k_odd_partitions,
    k_related, k_strict_partitions, length_gt_k, partitions_of, rect_partitions,
    schubert_indices, split_columns, strip, weight,
)


def test_strip():
    assert strip((3, 2, 0, 0)) == (3, 2)
    assert strip((0, 0)) == ()
    assert strip(()) == ()
    assert strip((3, 0, 1, 0)) == (3, 0, 1)


def test_is_k_strict():
    assert is_k_strict((4, 2, 2, 1), 2)
    assert not is_k_strict((4, 3, 3), 2)
    assert is_k_strict((), 0)
    assert not is_k_strict((2, 3), 1)
    assert not is_k_strict((3, 2, 0), 1)  # trailing zero not canonical


def test_split_columns():
    tail, head, r = split_columns((4, 2, 2, 1), 2)
    assert tail == (2,)
    assert head == (2, 2, 2, 1)
    assert r == 1
    assert split_columns((5, 3, 2), 0) == ((5, 3, 2), (), 3)


def test_conjugate():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate(()) == ()
    assert conjugate(conjugate((7, 4, 2))) == (7, 4, 2)


def test_k_related():
    # the relation: |c-k-1| + r matches on both sides
    assert k_related((2, 1), (1, 4), 1)
    assert k_related((1, 1), (1, 3), 1)
    assert not k_related((1, 1), (1, 4), 1)
    # distance to column k+1 is mirrored
    assert k_related((3, 2), (3, 6), 3)


@given(st.integers(0, 3), st.integers(1, 6), st.integers(1, 8), st.integers(1, 8),
       st.integers(1, 6), st.integers(1, 8))
def test_k_related_symmetric(k, r1, c1, c2, r2, c3):
    b1, b2 = (r1, c1), (r2, c2)
    assert k_related(b1, b2, k) == k_related(b2, b1, k)
    assert k_related(b1, b1, k)


def test_dominance():
    assert dominates((4, 1, 1), (3, 2, 1))
    assert not dominates((3, 2, 1), (4, 1, 1))
    assert dominates((3, 2, 1), (3, 2, 1))
    assert dominates((3, 3), (3, 2, 1))
    assert not dominates((4, 3), (3, 2, 1))  # different weights


def test_schubert_indices_type_c():
    # hand evaluation of the index formula
    assert schubert_indices((3, 2, 1), 1, 5, "C") == (4, 5, 8)
    assert schubert_indices((), 1, 5, "C") == ()
    assert schubert_indices((1,), 1, 5, "C") == (6,)


def test_schubert_indices_type_b():
    assert schubert_indices((3, 2, 1), 1, 5, "B") == (4, 5, 9)


def test_schubert_indices_strictly_increasing():
    for k in range(0, 3):
        for n in range(k + 1, 7):
            for lam in rect_partitions(k, n):
                if weight(lam) > 8:
                    continue
                for fam in "BC":
                    p = schubert_indices(lam, k, n, fam)
                    assert all(a < b for a, b in zip(p, p[1:])), (lam, k, n, fam, p)


def test_partitions_of():
    assert list(partitions_of(4, max_len=2)) == [(4,), (3, 1), (2, 2)]
    assert list(partitions_of(0)) == [()]


def test_count_bases_small():
    assert count_bases(4, 0) == (2, 2)  # strict vs odd parts
    assert count_bases(0, 3) == (1, 1)
    assert count_bases(1, 0) == (1, 1)


def test_count_bases_agree():
    for k in range(0, 5):
        for d in range(0, 21):
            a, b = count_bases(d, k)
            assert a == b, (d, k)


def test_k_odd_definition():
    assert set(k_odd_partitions(4, 1)) == {(3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert set(k_strict_partitions(4, 1)) == {(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)}


def test_contains_and_length():
    assert contains((3, 2, 1), (2, 2))
    assert not contains((3, 2), (2, 2, 1))
    assert length_gt_k((5, 3, 2, 1), 2) == 2
