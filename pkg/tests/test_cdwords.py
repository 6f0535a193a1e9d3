import pytest

from polyhvec import (
    CDVector,
    FlagVector,
    NotInCDSpanError,
    basis_matrix,
    cd_flag,
    cd_words,
    chain_count_flag,
    build_lattice,
    eliminate_I,
    expand_I,
    point_flag,
    prism_flag,
    to_cd_basis,
    word_degree,
    word_flag,
    word_vector,
)
from polyhvec.lattice import Bipyr, Simplex, parse_expr
from polyhvec.linalg import LinearSolver, mat_det, mat_rank, pivot_rows

WORD_COUNTS = [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_word_enumeration():
    assert cd_words(0) == ("",)
    assert cd_words(2) == ("CC", "D")
    assert cd_words(4) == ("CCCC", "CCD", "CDC", "DCC", "DD")
    for d, count in enumerate(WORD_COUNTS):
        words = cd_words(d)
        assert len(words) == count
        assert list(words) == sorted(words)
        assert all(word_degree(w) == d for w in words)


def test_word_flag_examples():
    assert word_flag("") == point_flag()
    triangle = chain_count_flag(build_lattice(parse_expr("C(C(pt))")))
    assert word_flag("CC") == triangle
    assert word_flag("D") == FlagVector(2, {(0,): 1, (1,): 1, (0, 1): 2})
    with pytest.raises(ValueError):
        word_flag("CX")


def test_cdvector_normalisation_and_arithmetic():
    v = CDVector(2, {"CC": 0, "D": 2})
    assert v.coeffs == {"D": 2}
    w = v + CDVector(2, {"D": -2, "CC": 1})
    assert w == word_vector("CC")
    with pytest.raises(ValueError):
        CDVector(2, {"C": 1})
    with pytest.raises(ValueError):
        v + CDVector(3, {"CCC": 1})


def test_expand_I_examples():
    assert expand_I(word_vector("C")) == CDVector(2, {"CC": 1, "D": 1})
    assert expand_I(word_vector("")) == word_vector("C")
    # the 3-cube: prism twice over a segment
    assert eliminate_I("IIC") == CDVector(3, {"CCC": 1, "DC": 2})
    assert eliminate_I("CICC") == CDVector(4, {"CCCC": 1, "CDC": 1})


def test_expand_I_matches_prism_operator():
    for d in range(6):
        for w in cd_words(d):
            assert cd_flag(expand_I(word_vector(w))) == prism_flag(word_flag(w))


def test_basis_matrix_shapes_and_ranks():
    assert basis_matrix(0) == [[1]]
    m2 = basis_matrix(2)
    assert len(m2) == 2 and mat_rank(m2) == 2
    m4 = basis_matrix(4)
    assert len(m4) == 5 and mat_rank(m4) == 5
    for d in range(7):
        assert mat_rank(basis_matrix(d)) == len(cd_words(d))


def test_to_cd_basis_square():
    square = chain_count_flag(build_lattice(parse_expr("I(C(pt))")))
    assert to_cd_basis(square) == CDVector(2, {"CC": 1, "D": 1})


def test_to_cd_basis_round_trip():
    for d in range(7):
        for w in cd_words(d):
            assert to_cd_basis(word_flag(w)) == word_vector(w)


def test_to_cd_basis_bipyramid_solves():
    f = chain_count_flag(build_lattice(Bipyr(Simplex(3))))
    v = to_cd_basis(f)
    assert cd_flag(v) == f
    assert all(isinstance(c, int) for c in v.coeffs.values())


def test_to_cd_basis_rejects_vectors_outside_span():
    # in degree 2 the span forces equal vertex and edge counts
    outside = FlagVector(2, {(0,): 1})
    with pytest.raises(NotInCDSpanError):
        to_cd_basis(outside)


def test_exact_linalg_helpers():
    assert mat_det([[2, 0], [0, 3]]) == 6
    assert mat_det([[1, 2], [2, 4]]) == 0
    assert mat_det([]) == 1
    assert mat_rank([[1, 2], [2, 4], [0, 1]]) == 2
    assert pivot_rows([[1, 0], [1, 0], [0, 1]]) == [0, 2]
    with pytest.raises(ValueError):
        pivot_rows([[1, 1], [2, 2]])
    solver = LinearSolver([[2, 1], [1, 1]])
    assert solver.solve([3, 2]) == [1, 1]
    with pytest.raises(ValueError):
        LinearSolver([[1, 1], [1, 1]])
