"""Integral sublattices of L = Leech + U and their exact invariants.

A fixed Z-basis of L (24 Hermite-reduced Leech generators plus f, g) turns
every lattice question into integer row arithmetic in Z^26: spans and
orthogonal complements come from Hermite forms and integer kernels,
saturations from double kernels, discriminant groups from Smith forms of
Gram matrices. Root sublattices are recognized by enumerating their norm
-2 vectors and decomposing the pairing graph, which avoids any dependence
on a choice of basis.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product
from typing import Iterable, Sequence

from . import exact, leech
from .golay import steiner_system
from .lorentz import LorentzVector, bilinear


class Ambient:
    """The fixed coordinate frame: basis rows, Gram matrix and inverse."""

    def __init__(self):
        # rank saturates early but the index keeps dropping, so feed every
        # generator through the reducer
        span = exact.RowSpan(24)
        span.add(list(leech.generator_minus_three()))
        for octad in steiner_system().octads:
            span.add(list(leech.two_nu(octad)))
        lam_rows = span.basis()
        assert len(lam_rows) == 24
        vectors = [LorentzVector(tuple(r), 0, 0) for r in lam_rows]
        vectors += [LorentzVector(leech.ZERO, 1, 0), LorentzVector(leech.ZERO, 0, 1)]
        for v in vectors[:24]:
            assert leech.contains(v.lam)
        self.vectors = tuple(vectors)
        self.rows = [v.raw() for v in vectors]
        self.gram = [[bilinear(a, b) for b in vectors] for a in vectors]
        assert exact.det_rational(self.gram) == -1  # even unimodular, signature (1,25)
        self._inv = exact.invert_rational(self.rows)

    def coords(self, v: LorentzVector) -> tuple[int, ...]:
        """Integer coordinates over the L basis; fails off the lattice."""
        c = exact.vec_mat(v.raw(), self._inv)
        if any(x.denominator != 1 for x in c):
            raise ValueError("vector does not lie in L")
        return tuple(int(x) for x in c)

    def in_lattice(self, v: LorentzVector) -> bool:
        return all(x.denominator == 1 for x in exact.vec_mat(v.raw(), self._inv))

    def vector(self, coords: Sequence[int]) -> LorentzVector:
        raw = exact.vec_mat(list(coords), self.rows)
        return LorentzVector(tuple(raw[:24]), raw[24], raw[25])

    def pair(self, c1: Sequence, c2: Sequence):
        return exact.dot(exact.vec_mat(list(c1), self.gram), list(c2))


@cache
def ambient() -> Ambient:
    return Ambient()


@dataclass(frozen=True)
class EmbeddedLattice:
    """A sublattice of L given by HNF-canonical coordinate rows."""

    rows: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def vectors(self) -> list[LorentzVector]:
        amb = ambient()
        return [amb.vector(r) for r in self.rows]

    def contains_coords(self, coords: Sequence[int]) -> bool:
        span = exact.RowSpan(26)
        for r in self.rows:
            span.add(list(r))
        return span.contains(list(coords))

    def disc_order(self) -> int:
        d = exact.det_rational(self.gram)
        assert d.denominator == 1
        return abs(int(d))


def _from_rows(rows: list[list[int]]) -> EmbeddedLattice:
    amb = ambient()
    rows = exact.hnf_rows(rows)
    gram = [[amb.pair(a, b) for b in rows] for a in rows]
    return EmbeddedLattice(
        tuple(tuple(r) for r in rows), tuple(tuple(g) for g in gram)
    )


def span(gens: Iterable[LorentzVector]) -> EmbeddedLattice:
    amb = ambient()
    rs = exact.RowSpan(26)
    for v in gens:
        rs.add(list(amb.coords(v)))
    return _from_rows(rs.basis())


def orthogonal_complement(m: EmbeddedLattice) -> EmbeddedLattice:
    """All of L orthogonal to m; always a primitive sublattice."""
    amb = ambient()
    if not m.rows:
        return _from_rows(exact.identity_matrix(26))
    pairing_cols = exact.mat_mul(amb.gram, exact.transpose([list(r) for r in m.rows]))
    return _from_rows(exact.kernel_basis(pairing_cols))


def saturation(m: EmbeddedLattice) -> EmbeddedLattice:
    """(m tensor Q) intersected with L."""
    if not m.rows:
        return m
    normals = exact.kernel_basis(exact.transpose([list(r) for r in m.rows]))
    if not normals:
        return _from_rows(exact.identity_matrix(26))
    return _from_rows(exact.kernel_basis(exact.transpose(normals)))


def is_primitive(m: EmbeddedLattice) -> bool:
    return saturation(m).rows == m.rows


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Discriminant group with quadratic values mod 2Z and pairings mod Z."""

    orders: tuple[int, ...]
    qvals: tuple[Fraction, ...]
    pairings: tuple[tuple[Fraction, ...], ...]

    @property
    def group_order(self) -> int:
        return math.prod(self.orders) if self.orders else 1


def _mod2(x: Fraction) -> Fraction:
    return x % 2


def _mod1(x: Fraction) -> Fraction:
    return x % 1


def discriminant_form_from_gram(gram) -> tuple[FiniteQuadraticForm, list[list[Fraction]]]:
    """Discriminant form of a nondegenerate Gram matrix.

    Also returns generators of the discriminant group as rational
    coordinate rows over the lattice basis, read off the Smith transform.
    """
    n = len(gram)
    if n == 0 or exact.det_rational(gram) == 0:
        raise ValueError("discriminant form requires a nondegenerate Gram matrix")
    d, _, v = exact.smith_normal_form([list(r) for r in gram])
    ginv = exact.invert_rational(gram)
    vinv = exact.invert_rational(v)
    orders: list[int] = []
    gens: list[list[Fraction]] = []
    for i in range(n):
        if d[i][i] > 1:
            orders.append(d[i][i])
            gens.append(exact.vec_mat([Fraction(x) for x in vinv[i]], ginv))
    def pair(a, b):
        return exact.dot(exact.vec_mat(a, [list(r) for r in gram]), b)
    qvals = tuple(_mod2(pair(g, g)) for g in gens)
    pairings = tuple(tuple(_mod1(pair(a, b)) for b in gens) for a in gens)
    return FiniteQuadraticForm(tuple(orders), qvals, pairings), gens


def discriminant_form(m: EmbeddedLattice) -> FiniteQuadraticForm:
    return discriminant_form_from_gram(m.gram)[0]


def negated(f: FiniteQuadraticForm) -> FiniteQuadraticForm:
    return FiniteQuadraticForm(
        f.orders,
        tuple(_mod2(-q) for q in f.qvals),
        tuple(tuple(_mod1(-b) for b in row) for row in f.pairings),
    )


def direct_sum(f1: FiniteQuadraticForm, f2: FiniteQuadraticForm) -> FiniteQuadraticForm:
    k1, k2 = len(f1.orders), len(f2.orders)
    pairings = [[Fraction(0)] * (k1 + k2) for _ in range(k1 + k2)]
    for i in range(k1):
        for j in range(k1):
            pairings[i][j] = f1.pairings[i][j]
    for i in range(k2):
        for j in range(k2):
            pairings[k1 + i][k1 + j] = f2.pairings[i][j]
    return FiniteQuadraticForm(
        f1.orders + f2.orders,
        f1.qvals + f2.qvals,
        tuple(tuple(row) for row in pairings),
    )


def _elements(orders):
    return product(*[range(d) for d in orders])


def _element_order(orders, a) -> int:
    out = 1
    for d, x in zip(orders, a):
        out = math.lcm(out, d // math.gcd(d, x))
    return out


def _element_q(f: FiniteQuadraticForm, a) -> Fraction:
    s = Fraction(0)
    k = len(f.orders)
    for i in range(k):
        s += a[i] * a[i] * f.qvals[i]
        for j in range(i + 1, k):
            s += 2 * a[i] * a[j] * f.pairings[i][j]
    return _mod2(s)


def _element_pair(f: FiniteQuadraticForm, a, b) -> Fraction:
    s = Fraction(0)
    k = len(f.orders)
    for i in range(k):
        for j in range(k):
            s += a[i] * b[j] * f.pairings[i][j]
    return _mod1(s)


def fqf_isomorphic(f1: FiniteQuadraticForm, f2: FiniteQuadraticForm) -> bool:
    """Exhaustive isomorphism search; group orders in scope stay tiny."""
    if f1.group_order != f2.group_order:
        return False
    els2 = list(_elements(f2.orders))
    inv1 = Counter(
        (_element_order(f1.orders, a), _element_q(f1, a)) for a in _elements(f1.orders)
    )
    inv2 = Counter((_element_order(f2.orders, a), _element_q(f2, a)) for a in els2)
    if inv1 != inv2:
        return False

    k = len(f1.orders)
    gens1 = [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def closure_size(images) -> int:
        seen = {tuple([0] * len(f2.orders))}
        frontier = [tuple([0] * len(f2.orders))]
        while frontier:
            nxt = []
            for x in frontier:
                for g in images:
                    y = tuple((a + b) % d for a, b, d in zip(x, g, f2.orders))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    def dfs(i, chosen):
        if i == k:
            return closure_size(chosen) == f2.group_order
        want_order = f1.orders[i]
        want_q = f1.qvals[i]
        for t in els2:
            if _element_order(f2.orders, t) != want_order:
                continue
            if _element_q(f2, t) != want_q:
                continue
            if any(
                _element_pair(f2, t, chosen[j]) != _mod1(f1.pairings[i][j])
                for j in range(i)
            ):
                continue
            if dfs(i + 1, chosen + [t]):
                return True
        return False

    return dfs(0, [])


_NAME_RE = re.compile(r"^(U|A(\d+)|D(\d+)|E8)(?:\((-?\d+)\))?$")


def standard_gram(name: str) -> list[list[int]]:
    """Gram matrix of U, A_n, D_n or E8, with 'M(m)' scaling as in A2(-2).

    Root lattices use the positive definite Cartan convention before
    scaling.
    """
    m = _NAME_RE.match(name.replace(" ", ""))
    if not m:
        raise ValueError(f"unknown lattice name {name!r}")
    base, a_n, d_n, scale = m.groups()
    scale = int(scale) if scale else 1
    if base == "U":
        g = [[0, 1], [1, 0]]
    elif a_n is not None:
        n = int(a_n)
        g = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    elif d_n is not None:
        n = int(d_n)
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        g = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    else:  # E8: branch node at position 2, arms of lengths 1, 2, 4
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
        g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
        for i, j in edges:
            g[i][j] = g[j][i] = -1
    return [[scale * x for x in row] for row in g]


def _fraction_sqrt_upper(f: Fraction) -> Fraction:
    assert f >= 0
    return Fraction(math.isqrt(f.numerator * f.denominator) + 1, f.denominator)


def short_vectors(gram, target: int) -> list[tuple[int, ...]]:
    """All integer vectors v (over the basis) with v*gram*v^T == target.

    Requires a negative definite Gram matrix and target < 0; the search
    runs a rational-arithmetic Fincke-Pohst recursion.
    """
    n = len(gram)
    if n == 0:
        return []
    q = [[Fraction(-x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("short_vectors expects a negative definite form")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    tau = Fraction(-target)
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(i: int, rem: Fraction):
        if i < 0:
            if rem == 0:
                out.append(tuple(x))
            return
        u = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        s = _fraction_sqrt_upper(rem / q[i][i])
        for xi in range(math.ceil(-u - s), math.floor(-u + s) + 1):
            t = q[i][i] * (xi + u) ** 2
            if t <= rem:
                x[i] = xi
                rec(i - 1, rem - t)
        x[i] = 0

    rec(n - 1, tau)
    return out


_TYPE_BY_RANK_COUNT = {
    (1, 2): "A1", (2, 6): "A2", (3, 12): "A3", (4, 20): "A4", (5, 30): "A5",
    (6, 42): "A6", (7, 56): "A7", (8, 72): "A8",
    (4, 24): "D4", (5, 40): "D5", (6, 60): "D6", (7, 84): "D7", (8, 112): "D8",
    (6, 72): "E6", (7, 126): "E7", (8, 240): "E8",
}


def root_count(gram) -> int:
    return len(short_vectors(gram, -2))


def root_components(gram) -> list[tuple[str, int, int]]:
    """Irreducible components as (type, rank, root count) triples."""
    roots = short_vectors(gram, -2)
    if not roots:
        return []
    glist = [list(r) for r in gram]
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pair_rows = [exact.vec_mat(list(r), glist) for r in roots]
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if exact.dot(pair_rows[i], list(roots[j])):
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for i, r in enumerate(roots):
        buckets.setdefault(find(i), []).append(r)
    comps = []
    for vs in buckets.values():
        rank = len(exact.hnf_rows([list(v) for v in vs]))
        key = (rank, len(vs))
        label = _TYPE_BY_RANK_COUNT.get(key)
        if label is None:
            raise ValueError(f"unrecognized root component with rank/count {key}")
        comps.append((label, rank, len(vs)))
    return comps


def root_type(gram) -> str:
    """Canonical label such as 'A5+5A1' or 'D6+5A1'."""
    comps = Counter(label for label, _, _ in root_components(gram))
    parts = []
    for label in sorted(comps, key=lambda s: (-int(s[1:]), s[0])):
        k = comps[label]
        parts.append(label if k == 1 else f"{k}{label}")
    return "+".join(parts) if parts else "0"
