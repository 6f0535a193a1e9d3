import pytest

from polyhvec import (
    ExprParseError,
    FaceCountLimitError,
    FlagVector,
    build_lattice,
    chain_count_flag,
    dual_flag,
    empty_flag,
    eval_flag,
    expr_dim,
    expr_str,
    is_eulerian,
    link_flag,
    parse_expr,
    point_flag,
    prism_flag,
    pyramid_flag,
    sample_expressions,
    total_link_vector,
)
from polyhvec.flagvec import GradedFlagVector, c_on_graded
from polyhvec.lattice import (
    Bipyr,
    Cone,
    Cube,
    Dual,
    Prism,
    Prod,
    Pt,
    Simplex,
    Word,
    face_count,
)


def test_parse_basic_forms():
    assert parse_expr("pt") == Pt()
    assert parse_expr("C(pt)") == Cone(Pt())
    assert parse_expr("I(C(pt))") == Prism(Cone(Pt()))
    assert parse_expr("B(simplex(3))") == Bipyr(Simplex(3))
    assert parse_expr("dual(cube(3))") == Dual(Cube(3))
    assert parse_expr("prod(simplex(2), cube(2))") == Prod(Simplex(2), Cube(2))
    assert parse_expr("simplex(0)") == Simplex(0)


def test_parse_word_shorthand():
    assert parse_expr("CIC(pt)") == Word("CIC", Pt())
    assert parse_expr("CD(pt)") == Word("CD", Pt())
    # single letters C and I are the named constructors
    assert parse_expr("D(pt)") == Word("D", Pt())


def test_parse_is_whitespace_insensitive():
    assert parse_expr(" prod( simplex( 2 ) ,cube(2) ) ") == Prod(
        Simplex(2), Cube(2)
    )


def test_parse_errors_carry_positions():
    with pytest.raises(ExprParseError) as err:
        parse_expr("C(pt")
    assert err.value.pos == 4
    with pytest.raises(ExprParseError) as err:
        parse_expr("frob(pt)")
    assert err.value.pos == 0
    with pytest.raises(ExprParseError):
        parse_expr("pt pt")
    with pytest.raises(ExprParseError):
        parse_expr("cube(0)")
    with pytest.raises(ExprParseError):
        parse_expr("crosspoly(0)")
    with pytest.raises(ExprParseError):
        parse_expr("Pt")  # case sensitive
    with pytest.raises(ExprParseError):
        parse_expr("simplex(x)")
    with pytest.raises(ExprParseError):
        parse_expr("")


def test_expr_str_round_trips():
    for e in sample_expressions(5):
        assert parse_expr(expr_str(e)) == e


def test_expr_dim():
    assert expr_dim(parse_expr("pt")) == 0
    assert expr_dim(parse_expr("B(simplex(3))")) == 4
    assert expr_dim(parse_expr("CD(pt)")) == 3
    assert expr_dim(parse_expr("prod(cube(2),simplex(3))")) == 5


def test_point_and_segment_lattices():
    L = build_lattice(Pt())
    assert len(L) == 2
    seg = build_lattice(Cone(Pt()))
    assert len(seg) == 4
    assert seg.face_counts() == (2,)


def test_bipyramid_face_counts():
    L = build_lattice(Bipyr(Simplex(3)))
    counts = L.face_counts()
    assert counts == (6, 14, 16, 8)
    assert 6 - 14 + 16 - 8 == 0


def test_face_count_prediction_matches_build():
    for e in sample_expressions(4):
        assert face_count(e) == len(build_lattice(e))


def test_face_cap_rejects_huge_builds():
    with pytest.raises(FaceCountLimitError):
        build_lattice(Cube(20))
    with pytest.raises(ValueError):
        face_count(Word("D", Pt()))


def test_chain_count_examples():
    assert chain_count_flag(build_lattice(Cone(Pt()))) == FlagVector(
        1, {(): 1, (0,): 2}
    )
    cube3 = chain_count_flag(build_lattice(Cube(3)))
    assert cube3.get((0, 1, 2)) == 48
    # the cube is simple: complete chains = 2 * vertex-edge chains
    assert cube3.get((0, 1, 2)) == 2 * cube3.get((0, 1))
    bp = chain_count_flag(build_lattice(Bipyr(Simplex(3))))
    assert [bp.get((i,)) for i in range(4)] == [6, 14, 16, 8]


def test_lattices_are_graded_and_eulerian_small():
    for e in sample_expressions(3):
        L = build_lattice(e)
        L.check_graded()
        assert is_eulerian(L), expr_str(e)


def test_euler_relation_dim_up_to_4():
    for e in sample_expressions(4):
        f = chain_count_flag(build_lattice(e))
        d = f.dim
        assert sum((-1) ** i * f.get((i,)) for i in range(d)) == 1 - (-1) ** d


def test_operator_oracle_small_dims():
    for e in sample_expressions(3):
        f = chain_count_flag(build_lattice(e))
        assert chain_count_flag(build_lattice(Cone(e))) == pyramid_flag(f)
        assert chain_count_flag(build_lattice(Prism(e))) == prism_flag(f)
        assert chain_count_flag(build_lattice(Dual(e))) == dual_flag(f)


def test_eval_flag_agrees_with_chain_counting():
    for e in sample_expressions(4):
        assert eval_flag(e) == chain_count_flag(build_lattice(e))


def test_link_examples():
    seg = build_lattice(Cone(Pt()))
    vertex = seg.faces_of_dim(0)[0]
    assert link_flag(seg, vertex) == point_flag()
    assert link_flag(seg, seg.top) == empty_flag()
    with pytest.raises(ValueError):
        link_flag(seg, seg.bottom)

    cube3 = build_lattice(Cube(3))
    vertex = cube3.faces_of_dim(0)[0]
    triangle = chain_count_flag(build_lattice(Simplex(2)))
    assert link_flag(cube3, vertex) == triangle


def test_total_link_vector_examples():
    assert total_link_vector(build_lattice(Pt())) == GradedFlagVector(
        {-1: empty_flag()}
    )
    seg_links = total_link_vector(build_lattice(Cone(Pt())))
    assert seg_links == GradedFlagVector(
        {-1: empty_flag(), 0: point_flag().scaled(2)}
    )
    tri_links = total_link_vector(build_lattice(Simplex(2)))
    segment = chain_count_flag(build_lattice(Cone(Pt())))
    assert tri_links == GradedFlagVector(
        {-1: empty_flag(), 0: point_flag().scaled(3), 1: segment.scaled(3)}
    )


def test_link_identities_small_dims():
    for e in sample_expressions(3):
        f = chain_count_flag(build_lattice(e))
        ell = total_link_vector(build_lattice(e))
        cone_side = ell + c_on_graded(ell) + GradedFlagVector({f.dim: f})
        assert total_link_vector(build_lattice(Cone(e))) == cone_side
        prism_side = ell + c_on_graded(ell).scaled(2)
        assert total_link_vector(build_lattice(Prism(e))) == prism_side
