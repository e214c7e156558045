from fractions import Fraction

from hessaut import lattices, leech
from hessaut.lorentz import LorentzVector, leech_root
from hessaut.lattices import (
    ambient,
    discriminant_form_from_gram,
    direct_sum,
    fqf_isomorphic,
    is_primitive,
    negated,
    orthogonal_complement,
    root_components,
    root_count,
    root_type,
    saturation,
    short_vectors,
    span,
    standard_gram,
)


def _z():
    return leech_root(leech.ZERO)


def _block_diag(*grams):
    n = sum(len(g) for g in grams)
    out = [[0] * n for _ in range(n)]
    off = 0
    for g in grams:
        for i, row in enumerate(g):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(g)
    return out


def test_ambient_frame_is_even_unimodular():
    amb = ambient()
    g = amb.gram
    assert all(g[i][i] % 2 == 0 for i in range(26))
    assert all(g[i][j] == g[j][i] for i in range(26) for j in range(26))


def test_coords_round_trip():
    amb = ambient()
    v = _z()
    c = amb.coords(v)
    assert amb.vector(c) == v
    assert amb.pair(c, c) == -2


def test_coords_membership_matches_congruence_test():
    amb = ambient()
    # a vector whose Leech part fails the congruence characterization
    bad = LorentzVector(tuple([1] + [0] * 23), 0, 0)
    assert not amb.in_lattice(bad)
    assert not leech.contains(bad.lam)
    good = LorentzVector(leech.generator_minus_three(), 2, -3)
    assert amb.in_lattice(good)
    assert leech.contains(good.lam)


def test_span_of_single_root():
    m = span([_z()])
    assert m.rank == 1
    assert m.gram == ((-2,),)


def test_complement_of_root_has_corank_one():
    m = orthogonal_complement(span([_z()]))
    assert m.rank == 25


def test_saturation_and_primitivity():
    doubled = span([_z().scaled(2)])
    sat = saturation(doubled)
    assert sat.rank == 1 and sat.gram == ((-2,),)
    assert not is_primitive(doubled)
    assert is_primitive(sat)
    assert orthogonal_complement(orthogonal_complement(doubled)).rows == sat.rows


def test_standard_grams():
    assert standard_gram("U") == [[0, 1], [1, 0]]
    assert standard_gram("A2(-2)") == [[-4, 2], [2, -4]]
    e8 = standard_gram("E8(-2)")
    assert abs(lattices.exact.det_rational(e8)) == 2 ** 8
    assert abs(lattices.exact.det_rational(standard_gram("A2(-2)"))) == 12


def test_discriminant_forms_of_small_root_lattices():
    f, _ = discriminant_form_from_gram(standard_gram("A5(-1)"))
    assert f.orders == (6,)
    assert f.qvals == (Fraction(7, 6),)  # -5/6 mod 2
    f1, _ = discriminant_form_from_gram(standard_gram("A1(-1)"))
    assert f1.orders == (2,)
    assert f1.qvals == (Fraction(3, 2),)  # -1/2 mod 2


def test_fqf_isomorphism_basics():
    a1, _ = discriminant_form_from_gram(standard_gram("A1(-1)"))
    a2, _ = discriminant_form_from_gram(standard_gram("A2(-1)"))
    assert not fqf_isomorphic(a1, a2)
    u2, _ = discriminant_form_from_gram(standard_gram("U(2)"))
    assert fqf_isomorphic(u2, negated(u2))
    both = direct_sum(a1, u2)
    assert both.group_order == 8
    assert fqf_isomorphic(both, both)


def test_disc_group_order_equals_det():
    g = standard_gram("A2(-2)")
    f, _ = discriminant_form_from_gram(g)
    assert f.group_order == 12


def test_root_enumeration_counts():
    assert root_count(standard_gram("A1(-1)")) == 2
    assert root_count(standard_gram("A3(-1)")) == 12
    assert root_count(standard_gram("A5(-1)")) == 30
    assert root_count(standard_gram("D6(-1)")) == 60
    assert root_count(standard_gram("A7(-1)")) == 56
    assert root_count(standard_gram("E8(-1)")) == 240


def test_root_type_labels():
    g = _block_diag(standard_gram("A5(-1)"), *[standard_gram("A1(-1)")] * 5)
    assert root_type(g) == "A5+5A1"
    comps = root_components(g)
    assert sorted(c[0] for c in comps) == ["A1"] * 5 + ["A5"]
    g2 = _block_diag(standard_gram("D6(-1)"), *[standard_gram("A1(-1)")] * 5)
    assert root_type(g2) == "D6+5A1"


def test_short_vectors_rejects_indefinite_forms():
    try:
        short_vectors(standard_gram("U"), -2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected rejection of an indefinite form")


def test_scaled_root_lattice_has_no_short_roots():
    assert root_count(standard_gram("A2(-2)")) == 0
    assert len(short_vectors(standard_gram("A2(-2)"), -4)) == 6


def test_standard_gram_rejects_unknown_names():
    try:
        standard_gram("F4")
    except ValueError:
        pass
    else:
        raise AssertionError("expected rejection of an unknown lattice name")


def test_hyperbolic_model_discriminant_product():
    # |disc| of U(2) + E8(-2) + A5(-2) + A1(-2) over an index-2^7 overlattice
    dets = [
        abs(lattices.exact.det_rational(standard_gram(name)))
        for name in ("U(2)", "E8(-2)", "A5(-2)", "A1(-2)")
    ]
    assert dets == [4, 256, 192, 4]
    product = 1
    for d in dets:
        product *= int(d)
    assert product // (2 ** 7) ** 2 == 48
