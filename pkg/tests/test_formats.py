import numpy as np
import pytest

from regradius.formats import (
    format_matrix,
    format_tridiagonal,
    parse_matrix,
    parse_tridiagonal,
)


def test_matrix_roundtrip(rng):
    A = rng.normal(size=(4, 4))
    B = parse_matrix(format_matrix(A))
    np.testing.assert_array_equal(A, B)


def test_matrix_parse_basic():
    A = parse_matrix("2\n1 2\n3 4\n")
    np.testing.assert_array_equal(A, [[1.0, 2.0], [3.0, 4.0]])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "x\n1\n",
        "2\n1 2\n3\n",         # short row
        "2\n1 2 3\n4 5 6\n",   # wide rows (non-square)
        "3\n1 2 3\n4 5 6\n",   # missing row
        "2\n1 2\n3 nan\n",
    ],
)
def test_matrix_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


def test_tridiagonal_roundtrip():
    a = np.array([2.0, 2.0, 2.0])
    c = np.array([1.0, -1.0])
    b = np.array([0.5, 1.5])
    a2, c2, b2 = parse_tridiagonal(format_tridiagonal(a, c, b))
    np.testing.assert_array_equal(a, a2)
    np.testing.assert_array_equal(c, c2)
    np.testing.assert_array_equal(b, b2)


def test_tridiagonal_n1_blank_lines():
    a, c, b = parse_tridiagonal("1\n3.5\n\n\n")
    assert a.tolist() == [3.5] and c.size == 0 and b.size == 0


def test_tridiagonal_rejects_bad_counts():
    with pytest.raises(ValueError):
        parse_tridiagonal("3\n1 2 3\n1\n1 2\n")
