import random

from hessaut import leech
from hessaut.golay import INFINITY, steiner_system
from hessaut.leech import (
    NU_OMEGA,
    ZERO,
    contains,
    generator_minus_three,
    inner,
    norm,
    nu,
    shape_class,
    two_nu,
    vadd,
    vscale,
    vsub,
)

oo = INFINITY


def test_octad_doublings_are_members():
    for octad in steiner_system().octads[::50]:
        assert contains(two_nu(octad))


def test_minus_three_generator_is_member():
    assert contains(generator_minus_three())


def test_non_octad_doubling_is_not_a_member():
    assert not contains(two_nu({oo, 0, 1, 2, 3, 4, 5, 6}))


def test_inner_products():
    octad = next(iter(steiner_system().octads))
    v = two_nu(octad)
    assert inner(v, v) == -4
    w = vadd(vscale(4, nu([oo])), NU_OMEGA)
    assert inner(w, w) == -6
    assert inner(ZERO, w) == 0


def test_inner_rejects_non_members():
    try:
        inner(two_nu({oo, 0, 1, 2, 3, 4, 5, 6}), ZERO)
    except ValueError:
        pass
    else:
        raise AssertionError("expected rejection of a non-member")


def test_shape_classes():
    octad = next(iter(steiner_system().octads))
    assert shape_class(two_nu(octad)) == "norm4"
    assert shape_class(generator_minus_three()) == "norm4"
    assert shape_class(vadd(vscale(4, nu([oo])), NU_OMEGA)) == "norm6"
    assert shape_class(ZERO) == "zero"


def test_difference_of_octad_vectors_norm_tracks_intersection():
    octads = steiner_system().octads
    base = octads[0]
    seen = set()
    for other in octads[1:]:
        k = len(base & other)
        d = vsub(two_nu(base), two_nu(other))
        if k == 4:
            assert norm(d) == 4
        elif k == 2:
            assert norm(d) == 6
        else:
            assert k == 0 and norm(d) == 8
        seen.add(k)
    assert seen == {0, 2, 4}


def test_membership_closed_under_addition_and_negation():
    rng = random.Random(7)
    octads = steiner_system().octads
    gens = [generator_minus_three()] + [two_nu(octads[rng.randrange(759)]) for _ in range(10)]
    members = []
    for _ in range(50):
        v = ZERO
        for g in gens:
            v = vadd(v, vscale(rng.randint(-2, 2), g))
        members.append(v)
    for v in members:
        assert contains(v)
        assert contains(vscale(-1, v))
    for _ in range(50):
        a = members[rng.randrange(len(members))]
        b = members[rng.randrange(len(members))]
        assert contains(vadd(a, b))


def test_membership_rejects_each_congruence_failure():
    assert not contains((1,) + (0,) * 23)  # mixed parity
    assert not contains(two_nu({oo, 0, 1, 2, 3, 4, 5, 6}))  # support off the code
    v = list(two_nu(next(iter(steiner_system().octads))))
    v[0] += 4  # keeps parity and support class, breaks the sum condition
    assert not leech.contains(tuple(v))
