"""Generators of the symmetry group of the Picard lattice and the walls
of its restricted fundamental domain.

Isometries are 16x16 integer matrices over the curve basis, built from
explicit image tables for the twenty curves: the node/line swap involution
tau, the node projections p_a, the (-6)-reflection attached to inversions
of pencils with two tangent lines, and the symmetrized inversion g of the
cone pencils. Boundary walls are Leech roots spanning, together with the
fixed root lattice R, a rank-11 root lattice; they fall into four
enumerable shapes whose projections into the Picard lattice have squares
-2/3, -1, -2/3, -2/3 and are matched with involutions pushing the Weyl
projection by 15, 4 and 12 times the wall vector. A greedy descent on the
pairing with the Weyl projection certifies that the generators cut the
symmetry group down to the 240-element group generated by tau and the
pentahedral permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations

from . import exact, lattices
from .golay import INFINITY, steiner_system
from .hessian import (
    BASE_ROOT_ORDER,
    COMPLEMENT_OCTADS,
    LINE_NAMES,
    NODE_NAMES,
    ClassVec,
    picard,
)
from .leech import NU_OMEGA, nu, two_nu, vadd, vscale, vsub
from .lorentz import LorentzVector, bilinear, leech_root

oo = INFINITY


@dataclass(frozen=True)
class Isometry:
    matrix: tuple[tuple[int, ...], ...]
    name: str = ""

    def apply(self, vec) -> tuple:
        return tuple(
            sum(vec[i] * self.matrix[i][j] for i in range(16)) for j in range(16)
        )

    def then(self, other: "Isometry", name: str = "") -> "Isometry":
        m = exact.mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return Isometry(tuple(tuple(r) for r in m), name or f"{other.name}*{self.name}")

    def inverse(self, name: str = "") -> "Isometry":
        inv = exact.invert_rational([list(r) for r in self.matrix])
        assert all(x.denominator == 1 for row in inv for x in row)
        return Isometry(tuple(tuple(int(x) for x in row) for row in inv), name or f"{self.name}^-1")

    def same_matrix(self, other: "Isometry") -> bool:
        return self.matrix == other.matrix


def identity_isometry() -> Isometry:
    return Isometry(tuple(tuple(int(i == j) for j in range(16)) for i in range(16)), "id")


def compose(*isos: Isometry) -> Isometry:
    """Apply left to right: compose(a, b)(x) = b(a(x))."""
    out = identity_isometry()
    for iso in isos:
        out = out.then(iso)
    return Isometry(out.matrix, "*".join(i.name for i in isos))


def conjugate(g: Isometry, s: Isometry, name: str = "") -> Isometry:
    """s o g o s^-1 (apply s^-1, then g, then s)."""
    out = compose(s.inverse(), g, s)
    return Isometry(out.matrix, name or f"{s.name}.{g.name}.{s.name}^-1")


def isometry_from_images(images: dict[str, ClassVec], name: str) -> Isometry:
    """Linear extension of curve images; rejects ill-defined or non-isometric
    tables (the redundant rows beyond a basis are checked, never assumed)."""
    ctx = picard()
    rows = []
    for b in ctx.basis_names:
        v = [Fraction(x) for x in images[b]]
        if any(x.denominator != 1 for x in v):
            raise ValueError(f"{name}: non-integral image of {b}")
        rows.append(tuple(int(x) for x in v))
    iso = Isometry(tuple(rows), name)
    for c, target in images.items():
        got = iso.apply(ctx.curve_coord[c])
        if tuple(Fraction(x) for x in got) != tuple(Fraction(x) for x in target):
            raise ValueError(f"{name}: images violate the curve relations at {c}")
    g = [list(r) for r in ctx.gram]
    m = [list(r) for r in iso.matrix]
    if exact.mat_mul(exact.mat_mul(m, g), exact.transpose(m)) != g:
        raise ValueError(f"{name}: table is not an isometry")
    return iso


def table_isometry(table: dict[str, dict], name: str) -> Isometry:
    ctx = picard()
    return isometry_from_images(
        {c: ctx.resolve(expr) for c, expr in table.items()}, name
    )


# --- fixed image tables -------------------------------------------------------

TAU_PAIRS = (
    ("N16", "T23"), ("N24", "T36"), ("N56", "T34"), ("N12", "T56"), ("N13", "T46"),
    ("N26", "T14"), ("N35", "T26"), ("N46", "T25"), ("N36", "T15"), ("N45", "T16"),
)

NODE_PROJECTION_TABLE = {
    "N56": {"N24": 1}, "N24": {"N56": 1},
    "N13": {"N12": 1}, "N12": {"N13": 1},
    "N35": {"N46": 1}, "N46": {"N35": 1},
    "T25": {"T26": 1}, "T26": {"T25": 1},
    "T36": {"T34": 1}, "T34": {"T36": 1},
    "T56": {"T46": 1}, "T46": {"T56": 1},
    "T23": {"R16": 1},
    "N16": {"C23": 1},
    "N26": {"N26": 1}, "N36": {"N36": 1}, "N45": {"N45": 1},
    "T15": {"T15": 1}, "T16": {"T16": 1}, "T14": {"T14": 1},
}

SKEW_LINE_TABLE = {
    "T16": {"N26": 1}, "N26": {"T16": 1},
    "T14": {"N45": 1}, "N45": {"T14": 1},
    "T36": {"N56": 1}, "N56": {"T36": 1},
    "T34": {"N24": 1}, "N24": {"T34": 1},
    "T25": {"N13": 1}, "N13": {"T25": 1},
    "T56": {"N35": 1}, "N35": {"T56": 1},
    "T26": {"N12": 1}, "N12": {"T26": 1},
    "T46": {"N46": 1}, "N46": {"T46": 1},
    "T15": {"C15": 1},
    "T23": {"C23": 1},
    "N36": {"R36": 1},
    "N16": {"R16": 1},
}

D1_EXPR = {
    "N26": 1, "N45": 1, "N56": 2, "N24": 2, "N36": -1, "N13": 1, "N46": 1,
    "T46": 2, "T25": 2, "T15": 2,
}
D3_EXPR = {
    "N26": 2, "N45": 2, "N56": 1, "N24": 1, "N16": -1, "N13": 1, "N46": 1,
    "T46": 2, "T25": 2, "T23": 2,
}
_F_LONG_COMMON = {
    "etaH": 4, "T15": -1, "T23": -1, "N16": -2, "N26": -2, "N36": -2,
    "N56": -2, "N12": -2, "N24": -2, "N35": -2, "N45": -2,
}

PENCIL_INVERSION_TABLE = {
    "N16": D1_EXPR, "N36": D3_EXPR,
    "N26": {"N56": 1}, "N56": {"N26": 1},
    "N24": {"N45": 1}, "N45": {"N24": 1},
    "N12": {"C56": 1}, "N35": {"C26": 1},
    "N46": {"N46": 1}, "N13": {"N13": 1},
    "T15": {"T23": 1}, "T23": {"T15": 1},
    "T16": {"T16": 1}, "T36": {"T36": 1}, "T46": {"T46": 1},
    "T14": {"T14": 1}, "T25": {"T25": 1}, "T34": {"T34": 1},
    "T26": {**_F_LONG_COMMON, "T26": -3, "T56": -2},
    "T56": {**_F_LONG_COMMON, "T26": -2, "T56": -3},
}

G2_EXPR = {
    "T26": 1, "T15": 1, "T23": 1, "T46": 2, "T25": 2, "N26": 2, "N24": 2,
    "N16": -1, "N36": -1, "N56": 1, "N45": 1, "N13": 1, "N46": 1,
}
G5_EXPR = {
    "T56": 1, "T15": 1, "T23": 1, "T46": 2, "T25": 2, "N56": 2, "N45": 2,
    "N16": -1, "N36": -1, "N26": 1, "N24": 1, "N13": 1, "N46": 1,
}

SYMMETRIZED_INVERSION_TABLE = {
    "N16": D3_EXPR, "N36": D1_EXPR,
    "N26": {"N45": 1}, "N45": {"N26": 1},
    "N46": {"N13": 1}, "N13": {"N46": 1},
    "N56": {"N24": 1}, "N24": {"N56": 1},
    "N12": {"N12": 1}, "N35": {"N35": 1},
    "T16": {"T34": 1}, "T34": {"T16": 1},
    "T36": {"T14": 1}, "T14": {"T36": 1},
    "T46": {"T25": 1}, "T25": {"T46": 1},
    "T15": {"T15": 1}, "T23": {"T23": 1},
    "T26": G2_EXPR, "T56": G5_EXPR,
}

# the (-6)-root of the worked reflection, as displayed
REFLECTION_ROOT_EXPR = {
    "etaH": 2, "etaS": -2,
    "T46": 2, "T25": 2, "T34": 2, "T36": 2, "T15": 2,
    "N36": 1, "N46": 1, "N56": 1, "N13": 1, "N24": 1,
}

# projections of the three worked wall roots, as displayed
WALL_1A_EXPR = {
    "TT": Fraction(-2, 15), "NN": Fraction(2, 15),
    "T36": Fraction(2, 3), "T46": Fraction(2, 3), "T15": Fraction(2, 3),
    "T25": Fraction(2, 3), "T34": Fraction(2, 3),
    "N36": Fraction(1, 3), "N46": Fraction(1, 3), "N56": Fraction(1, 3),
    "N13": Fraction(1, 3), "N24": Fraction(1, 3),
}
WALL_2_EXPR = {"C16": Fraction(1, 2), "N45": Fraction(-1, 2)}
WALL_3A_EXPR = {
    "N26": Fraction(1, 2), "N45": Fraction(1, 2), "N56": Fraction(1, 2), "N24": Fraction(1, 2),
    "N16": Fraction(-1, 3), "N36": Fraction(-1, 3),
    "N13": Fraction(1, 3), "N46": Fraction(1, 3),
    "T46": Fraction(2, 3), "T25": Fraction(2, 3),
    "T15": Fraction(1, 3), "T23": Fraction(1, 3),
}

WALL_1A_EXAMPLE_OCTAD = frozenset({oo, 0, 1, 5, 9, 11, 13, 21})
WALL_2_EXAMPLE_OCTAD = frozenset({0, oo, 6, 7, 10, 12, 15, 18})
WALL_3A_EXAMPLE_K = 5

# the twelve octads carrying the (3,3,3,-1^5,1^16) walls
WALL_1A_OCTADS = tuple(
    frozenset(s)
    for s in (
        {oo, 0, 1, 5, 9, 11, 13, 21}, {oo, 0, 1, 7, 10, 11, 17, 22},
        {oo, 0, 1, 7, 12, 13, 14, 20}, {oo, 0, 1, 8, 9, 14, 19, 22},
        {oo, 0, 1, 8, 16, 17, 20, 21}, {oo, 0, 1, 5, 10, 12, 16, 19},
        {oo, 0, 2, 5, 7, 9, 12, 22}, {oo, 0, 2, 5, 8, 13, 19, 20},
        {oo, 0, 2, 7, 8, 10, 14, 16}, {oo, 0, 2, 9, 11, 16, 17, 19},
        {oo, 0, 2, 10, 12, 13, 17, 21}, {oo, 0, 2, 11, 14, 20, 21, 22},
    )
)
WALL_3A_KS_FIRST = (5, 14, 17)
WALL_3B_OCTADS_FIRST = tuple(
    frozenset(s)
    for s in (
        {0, 5, 9, 12, 13, 14, 17, 19},
        {0, 5, 10, 11, 14, 16, 17, 21},
        {0, 5, 7, 8, 14, 17, 20, 22},
    )
)

# duals of the A5 chain (x, z, y, r0, x0): projection corrections by case
CASE_CORRECTIONS = {
    "1a": ({"x": 2, "z": 4, "y": 3, "r0": 2, "x0": 1}, 3),
    "1b": ({"x": 1, "z": 2, "y": 3, "r0": 4, "x0": 2}, 3),
    "3a": ({"x": 1, "z": 2, "y": 3, "r0": 4, "x0": 5}, 6),
    "3b": ({"x": 5, "z": 4, "y": 3, "r0": 2, "x0": 1}, 6),
}

CASE_NORMS = {
    "0": Fraction(-2),
    "1a": Fraction(-2, 3), "1b": Fraction(-2, 3),
    "2": Fraction(-1),
    "3a": Fraction(-2, 3), "3b": Fraction(-2, 3),
}

CASE_ROOT_TYPES = {
    "0": "A5+6A1",
    "1a": "D6+5A1", "1b": "D6+5A1",
    "2": "A5+A3+3A1",
    "3a": "A7+4A1", "3b": "A7+4A1",
}

PUSH_MULTIPLES = {"1a": 15, "1b": 15, "2": 4, "3a": 12, "3b": 12}


@dataclass(frozen=True)
class WallRoot:
    case: str
    root: LorentzVector | None
    r1: ClassVec
    key: tuple


def classify_wall_root(root: LorentzVector) -> WallRoot:
    """Case tag, root-lattice type and checked projection of a wall root."""
    ctx = picard()
    roots = ctx.roots
    pat = {k: bilinear(root, roots[k]) for k in BASE_ROOT_ORDER}
    if any(v not in (0, 1) for v in pat.values()):
        raise ValueError(f"pairing pattern {pat} is not a wall pattern")
    ones = frozenset(k for k, v in pat.items() if v == 1)
    if not ones:
        case = "0"
    elif ones == {"z"}:
        case = "1a"
    elif ones == {"r0"}:
        case = "1b"
    elif len(ones) == 2 and ones <= {"x1", "x2", "x3", "x4", "x5"}:
        case = "2"
    elif len(ones) == 2 and "x0" in ones and ones & {"x1", "x2", "x3", "x4", "x5"}:
        case = "3a"
    elif len(ones) == 2 and "x" in ones and ones & {"x1", "x2", "x3", "x4", "x5"}:
        case = "3b"
    else:
        raise ValueError(f"no case matches pairing pattern {sorted(ones)}")

    extended = lattices.span([roots[k] for k in BASE_ROOT_ORDER] + [root])
    assert extended.rank == 11
    assert lattices.root_type(extended.gram) == CASE_ROOT_TYPES[case]

    r1 = ctx.project_to_sh(root)
    assert ctx.inner(r1, r1) == CASE_NORMS[case]
    if case != "0":
        # the closed form: r plus a dual-basis correction inside R tensor Q
        raw = [Fraction(x) for x in root.raw()]
        if case == "2":
            for k in ones:
                raw = [a + Fraction(b, 2) for a, b in zip(raw, roots[k].raw())]
        else:
            coeffs, denom = CASE_CORRECTIONS[case]
            for k, c in coeffs.items():
                raw = [a + Fraction(c * b, denom) for a, b in zip(raw, roots[k].raw())]
            if case in ("3a", "3b"):
                (xi,) = ones & {"x1", "x2", "x3", "x4", "x5"}
                raw = [a + Fraction(b, 2) for a, b in zip(raw, roots[xi].raw())]
        r1_raw = exact.vec_mat(
            exact.vec_mat(list(r1), [list(r) for r in ctx.basis_coords]),
            lattices.ambient().rows,
        )
        assert r1_raw == raw, f"closed-form projection mismatch in case {case}"
    else:
        assert root in ctx.curve_roots.values()
    return WallRoot(case, root, r1, _wall_key(case, root))


def _wall_key(case: str, root: LorentzVector) -> tuple:
    return (case, tuple(sorted(root.lam)), root.lam, root.m, root.n)


def _octad_key(octad) -> tuple:
    return tuple(sorted(octad))


@cache
def enumerate_wall_roots() -> dict[str, list[WallRoot]]:
    """Shape-constrained searches for the four boundary-wall families."""
    system = steiner_system()
    ks = [COMPLEMENT_OCTADS["r0"]] + [COMPLEMENT_OCTADS[f"x{i}"] for i in range(1, 6)]
    out: dict[str, list[WallRoot]] = {"1a": [], "2": [], "3a": [], "3b": []}

    octads_oo0 = [k for k in system.octads if oo in k and 0 in k]
    for octad in octads_oo0:
        inter0 = octad & ks[0]
        if len(inter0) == 2 and oo in inter0:
            (j1,) = inter0 - {oo}
            if all(len(octad & ks[i]) == 4 and j1 in ks[i] for i in range(1, 6)):
                lam = [1] * 24
                for p in octad:
                    lam[p + 1] = -1
                for p in (oo, 0, j1):
                    lam[p + 1] = 3
                out["1a"].append((_octad_key(octad), leech_root(tuple(lam))))

        profile = [len(octad & k) for k in ks]
        if profile[0] == 4:
            twos = [i for i in range(1, 6) if profile[i] == 2]
            if len(twos) == 2 and all(profile[i] == 4 for i in range(1, 6) if i not in twos):
                out["2"].append((tuple(twos), leech_root(two_nu(octad))))

    for k in range(23):
        hits = [i for i in range(1, 6) if k in ks[i]]
        if len(hits) == 1 and k not in ks[0]:
            lam = vsub(NU_OMEGA, vscale(4, nu([k])))
            out["3a"].append(((hits[0], k), leech_root(lam)))

    for octad in system.octads:
        if 0 not in octad or oo in octad or octad & ks[0]:
            continue
        profile = [len(octad & ks[i]) for i in range(1, 6)]
        fours = [i + 1 for i, c in enumerate(profile) if c == 4]
        if len(fours) == 1 and sorted(profile) == [2, 2, 2, 2, 4]:
            lam = vadd(vscale(4, nu([0])), vsub(NU_OMEGA, vscale(2, nu(octad))))
            out["3b"].append(((fours[0],) + _octad_key(octad), leech_root(tuple(lam))))

    walls: dict[str, list[WallRoot]] = {}
    for case, found in out.items():
        found.sort(key=lambda t: t[0])
        walls[case] = []
        for key, root in found:
            w = classify_wall_root(root)
            assert w.case == case
            walls[case].append(WallRoot(case, root, w.r1, (case,) + key))
    assert [len(walls[c]) for c in ("1a", "2", "3a", "3b")] == [12, 10, 15, 15]
    return walls


# --- the generator context -----------------------------------------------------


class AutContext:
    """All named isometries, walls and descent data, built once."""

    def __init__(self):
        ctx = picard()
        self.ctx = ctx
        self.omega = tuple(int(x) for x in ctx.omega_prime)
        self._gram = [list(r) for r in ctx.gram]
        self.gram_omega = exact.mat_vec(self._gram, list(self.omega))

        self.tau = table_isometry(
            {a: {b: 1} for pair in TAU_PAIRS for a, b in (pair, pair[::-1])}, "tau"
        )
        for a, b in TAU_PAIRS:
            assert ctx.tau_partner(a) == b

        self.s5: dict[tuple, Isometry] = {}
        for perm in permutations(range(1, 6)):
            sigma = dict(zip(range(1, 6), perm))
            images = {}
            for n in NODE_NAMES:
                faces = frozenset(sigma[i] for i in ctx.node_faces[n])
                images[n] = {next(m for m in NODE_NAMES if ctx.node_faces[m] == faces): 1}
            for l in LINE_NAMES:
                faces = frozenset(sigma[i] for i in ctx.line_faces[l])
                images[l] = {next(m for m in LINE_NAMES if ctx.line_faces[m] == faces): 1}
            name = "s" + "".join(str(sigma[i]) for i in range(1, 6))
            self.s5[perm] = table_isometry(images, name)

        # the symmetry group of the restricted chamber: order 240, fixes omega
        self.symmetries: dict[tuple, str] = {}
        for perm, s in self.s5.items():
            for pre, label in ((identity_isometry(), s.name), (self.tau, f"tau*{s.name}")):
                m = compose(pre, s)
                assert m.apply(self.omega) == self.omega
                self.symmetries[m.matrix] = "id" if m.same_matrix(identity_isometry()) else (
                    "tau" if m.same_matrix(self.tau) else label
                )
        assert len(self.symmetries) == 240

        self.p16 = table_isometry(NODE_PROJECTION_TABLE, "p16")
        expected_eta = ctx.resolve(
            {"etaH": 2, "T23": -2, "N26": -1, "N45": -1, "N36": -1, "N16": -1}
        )
        assert self._apply_q(self.p16, ctx.eta_h) == expected_eta

        self.projections: dict[str, Isometry] = {}
        base_faces = ctx.node_faces["N16"]
        for n in NODE_NAMES:
            target = ctx.node_faces[n]
            perm = next(
                p for p in sorted(self.s5)
                if frozenset(dict(zip(range(1, 6), p))[i] for i in base_faces) == target
            )
            iso = conjugate(self.p16, self.s5[perm], name=f"p{n[1:]}")
            assert compose(iso, iso).same_matrix(identity_isometry())
            self.projections[n] = iso

        self.f = table_isometry(PENCIL_INVERSION_TABLE, "f")
        self.g = table_isometry(SYMMETRIZED_INVERSION_TABLE, "g")
        assert compose(self.f, self.f).same_matrix(identity_isometry())
        assert compose(self.g, self.g).same_matrix(identity_isometry())

        self.walls = enumerate_wall_roots()
        self.wall_generators: dict[str, list[tuple[WallRoot, Isometry]]] = {}

        gens_1a = []
        for w in self.walls["1a"]:
            alpha = tuple(3 * x for x in w.r1)
            gens_1a.append((w, self.reflection_phi(alpha)))
        self.wall_generators["1a"] = gens_1a

        gens_2 = []
        for w in self.walls["2"]:
            node = [n for n in NODE_NAMES if bilinear(w.root, ctx.curve_roots[n]) == 1]
            line = [l for l in LINE_NAMES if bilinear(w.root, ctx.curve_roots[l]) == 1]
            assert len(node) == 1 and len(line) == 1
            assert ctx.tau_partner(node[0]) == line[0]
            gens_2.append((w, self.projections[node[0]]))
        self.wall_generators["2"] = gens_2

        worked_3a = next(
            w for w in self.walls["3a"] if w.key[1:] == (1, WALL_3A_EXAMPLE_K)
        )
        assert worked_3a.r1 == ctx.resolve(WALL_3A_EXPR)
        gens_3a = []
        for w in self.walls["3a"]:
            sigma = next(
                (s for _, s in sorted(self.s5.items())
                 if self._apply_q(s, worked_3a.r1) == w.r1),
                None,
            )
            assert sigma is not None, "pentahedral orbit must reach every wall"
            iso = conjugate(self.g, sigma, name=f"g[{w.key}]")
            gens_3a.append((w, iso))
        self.wall_generators["3a"] = gens_3a

        gens_1b = []
        for w, phi in gens_1a:
            r1b = self._apply_q(self.tau, w.r1)
            wb = WallRoot("1b", None, r1b, ("1b",) + w.key[1:])
            gens_1b.append((wb, compose(self.tau, phi, self.tau)))
        self.wall_generators["1b"] = gens_1b

        gens_3b = []
        for w in self.walls["3b"]:
            image = self._apply_q(self.tau, w.r1)
            partner = next(
                (ww, gg) for ww, gg in gens_3a if ww.r1 == image
            )
            gens_3b.append((w, compose(self.tau, partner[1], self.tau)))
        self.wall_generators["3b"] = gens_3b

        for case, pairs in self.wall_generators.items():
            mult = PUSH_MULTIPLES[case]
            for w, iso in pairs:
                assert compose(iso, iso).same_matrix(identity_isometry())
                assert self._apply_q(iso, w.r1) == tuple(-x for x in w.r1)
                pushed = self._apply_q(iso, self.omega)
                target = tuple(o + mult * x for o, x in zip(self.omega, w.r1))
                assert pushed == target, f"push identity fails for {case}"
                assert self.discriminant_action(iso) in ("+1", "-1")

        # naming and fixed descent order: plain families first, conjugates last
        self.registry: dict[str, Isometry] = {
            "tau": self.tau,
            "id": identity_isometry(),
            "f": self.f,  # reducible input: f equals g composed with p12, p35
        }
        for perm, s in self.s5.items():
            self.registry[s.name] = s
        for n, iso in self.projections.items():
            self.registry[f"p{n[1:]}"] = iso
        self.descent: list[tuple[str, Isometry, list]] = []

        def _add(name, iso):
            iso = Isometry(iso.matrix, name)
            self.registry[name] = iso
            wvec = exact.mat_vec([list(r) for r in iso.matrix], self.gram_omega)
            self.descent.append((name, iso, wvec))

        for i, (w, iso) in enumerate(sorted(gens_1a, key=lambda t: t[0].key), 1):
            _add(f"phi{i}", iso)
        for w, iso in sorted(gens_2, key=lambda t: t[0].key):
            _add(iso.name, iso)
        for i, (w, iso) in enumerate(sorted(gens_3a, key=lambda t: t[0].key), 1):
            _add(f"g{i}", iso)
        for i, (w, iso) in enumerate(sorted(gens_1b, key=lambda t: t[0].key), 1):
            _add(f"phib{i}", iso)
        for i, (w, iso) in enumerate(sorted(gens_3b, key=lambda t: t[0].key), 1):
            _add(f"gb{i}", iso)
        assert len(self.descent) == 64

    # --- helpers ---------------------------------------------------------

    @staticmethod
    def _apply_q(iso: Isometry, vec) -> tuple:
        return tuple(
            sum(Fraction(vec[i]) * iso.matrix[i][j] for i in range(16))
            for j in range(16)
        )

    def reflection_phi(self, alpha) -> Isometry:
        """Reflection in a primitive (-6)-vector, checked integral."""
        ctx = self.ctx
        alpha = tuple(Fraction(x) for x in alpha)
        assert all(x.denominator == 1 for x in alpha)
        ints = [int(x) for x in alpha]
        from math import gcd
        assert gcd(*[abs(x) for x in ints if x] or [1]) == 1, "reflection vector must be primitive"
        assert ctx.inner(alpha, alpha) == -6
        rows = []
        for i in range(16):
            e = [Fraction(0)] * 16
            e[i] = Fraction(1)
            pairing = ctx.inner(e, alpha)
            img = [e[j] + pairing * alpha[j] / 3 for j in range(16)]
            if any(x.denominator != 1 for x in img):
                raise ValueError("reflection does not preserve the lattice")
            rows.append(tuple(int(x) for x in img))
        iso = Isometry(tuple(rows), "phi")
        g = [list(r) for r in ctx.gram]
        m = [list(r) for r in iso.matrix]
        assert exact.mat_mul(exact.mat_mul(m, g), exact.transpose(m)) == g
        assert iso.apply(ints) == tuple(-x for x in ints)
        return iso

    def discriminant_action(self, iso: Isometry) -> str:
        _, gens = lattices.discriminant_form_from_gram(self.ctx.gram)
        plus = minus = True
        for gvec in gens:
            image = self._apply_q(iso, gvec)
            if any((a - b).denominator != 1 for a, b in zip(image, gvec)):
                plus = False
            if any((a + b).denominator != 1 for a, b in zip(image, gvec)):
                minus = False
        if plus:
            return "+1"
        if minus:
            return "-1"
        return "other"

    def generator_for_wall(self, w: WallRoot) -> Isometry:
        for case, pairs in self.wall_generators.items():
            for ww, iso in pairs:
                if ww.r1 == w.r1:
                    return iso
        raise ValueError("not a wall of the restricted chamber")

    def height(self, vec) -> int:
        return exact.dot(list(vec), self.gram_omega)

    def reduce_height(self, gamma: Isometry, cap: int = 10000):
        """Greedy descent to the chamber of the Weyl projection.

        Returns (word, residual): applying the word after gamma fixes the
        Weyl projection, and the residual must land in the 240-element
        symmetry group.
        """
        v = gamma.apply(self.omega)
        word: list[str] = []
        matrices = [list(r) for r in gamma.matrix]
        while True:
            h = self.height(v)
            for name, iso, wvec in self.descent:
                if exact.dot(list(v), wvec) < h:
                    v = iso.apply(v)
                    word.append(name)
                    matrices = exact.mat_mul(matrices, [list(r) for r in iso.matrix])
                    break
            else:
                break
            if len(word) > cap:
                raise RuntimeError("height descent failed to terminate")
        residual = Isometry(tuple(tuple(r) for r in matrices), "residual")
        return word, residual

    def classify_symmetry(self, iso: Isometry) -> str | None:
        return self.symmetries.get(iso.matrix)


@cache
def autctx() -> AutContext:
    return AutContext()


def project_to_SH(v: LorentzVector) -> ClassVec:
    return picard().project_to_sh(v)


# --- module-level conveniences -------------------------------------------------


def enriques_tau() -> Isometry:
    return autctx().tau


def projection_p(node: str) -> Isometry:
    """Projection involution from a node, e.g. projection_p('N16')."""
    return autctx().projections[node if node.startswith("N") else "N" + node]


def pentahedral_symmetry(perm) -> Isometry:
    """The isometry of a face permutation, given as a tuple image of 1..5."""
    return autctx().s5[tuple(perm)]


def inversion_f(index: int = 1) -> Isometry:
    """The pencil inversion of the i-th cone-pencil wall (1-based), obtained
    from the worked table by the same conjugation as its symmetrized form."""
    a = autctx()
    w, _ = sorted(a.wall_generators["3a"], key=lambda t: t[0].key)[index - 1]
    worked = next(ww for ww, _ in a.wall_generators["3a"] if ww.key[1:] == (1, WALL_3A_EXAMPLE_K))
    sigma = next(
        s for _, s in sorted(a.s5.items()) if a._apply_q(s, worked.r1) == w.r1
    )
    iso = conjugate(a.f, sigma, name=f"f{index}")
    assert compose(iso, iso).same_matrix(identity_isometry())
    return iso


def g_map(index: int = 1) -> Isometry:
    """The symmetrized inversion attached to the i-th cone-pencil wall."""
    a = autctx()
    return a.registry[f"g{index}"]


def reflection_phi(alpha) -> Isometry:
    return autctx().reflection_phi(alpha)


def discriminant_action(iso: Isometry) -> str:
    return autctx().discriminant_action(iso)


def reduce_height(gamma: Isometry):
    return autctx().reduce_height(gamma)


def generator_for_wall(w: WallRoot) -> Isometry:
    return autctx().generator_for_wall(w)
