"""Group-like elements, pointedness, and the set-coalgebra adjunction.

A group-like element g satisfies Delta(g) = g (x) g and eps(g) = 1;
group-likes of C correspond to characters of the dual algebra A = C^v,
and characters are exactly the joint eigen-covectors of the commuting
left-multiplication operators of A, with eigenvalue vector equal to the
character values.  The search therefore splits the fraction-field space
recursively into simultaneous eigenspaces, pursuing only eigenvalues in
the ground field (no other eigenvalue can contribute), then keeps the
candidates whose coordinates are integral and verifies the defining
equations exactly.

Pointedness is decided over the fraction field K: C is pointed iff the
semisimple quotient of A (x) K has dimension equal to the number of
K-valued characters (so C (x) K is pointed) and every group-like of
C (x) K already has coordinates in R.  The radical is the trace-form
kernel in characteristic zero and the iterated Frobenius kernel in
characteristic p.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .coalgebra import Coalgebra, CoalgebraMap, validate_map
from .errors import (
    NotGroupLike,
    NotGroupLikeImage,
    TooLarge,
    UnsupportedRing,
)
from .lattice import Lattice
from .matrix import Matrix, charpoly, elementary_divisors, hnf, hnf_basis
from .polyroots import FP_SCAN_BOUND, integer_roots, prime_field_roots
from .rings import ZZ, Ring

BRUTE_FORCE_BOUND = 10**7


@dataclass
class GroupLikeSet:
    """The group-likes of a coalgebra plus independence and purity certificates."""

    coalgebra: Coalgebra
    vectors: tuple
    independence_divisors: tuple
    pure: bool
    purity_witness: object = None

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def lattice(self) -> Lattice:
        return Lattice.from_rows(self.coalgebra.ring, self.coalgebra.rank, [list(v) for v in self.vectors])


@dataclass
class PointednessReport:
    semisimple_dimension: int
    character_count: int
    nonintegral_grouplikes: tuple
    pointed: bool

    def __str__(self):
        lines = [
            f"semisimple dimension over the fraction field: {self.semisimple_dimension}",
            f"ground-field characters: {self.character_count}",
        ]
        for g in self.nonintegral_grouplikes:
            lines.append("non-integral group-like: (" + ", ".join(str(x) for x in g) + ")")
        lines.append(f"pointed: {'yes' if self.pointed else 'no'}")
        return "\n".join(lines)


def _is_group_like(c: Coalgebra, g) -> bool:
    ring = c.ring
    n = c.rank
    w = c.comultiply(g)
    outer = [g[j] * g[k] for j in range(n) for k in range(n)]
    if ring.kind == "Fp":
        outer = [v % ring.p for v in outer]
    if w != outer:
        return False
    return c.counit_of(g) == ring.one


def _field_eigenvalues(mat: Matrix) -> list:
    """Eigenvalues of a square matrix that lie in its own (field) ring."""
    ring = mat.ring
    d = mat.nrows
    if d == 0:
        return []
    if ring.kind == "Fp":
        p = ring.p
        if p <= FP_SCAN_BOUND:
            ident = Matrix.identity(ring, d)
            out = []
            for lam in range(p):
                shifted = mat - ident.scale(lam)
                if shifted.rank() < d:
                    out.append(lam)
            return out
        coeffs = charpoly(mat)
        return prime_field_roots(coeffs, p)
    # rational case: scale to an integer matrix, take integer roots, scale back
    denom = 1
    for row in mat.rows:
        for v in row:
            denom = denom * v.denominator // math.gcd(denom, v.denominator)
    scaled = [[int(v * denom) for v in row] for row in mat.rows]
    coeffs = charpoly(Matrix(ZZ, scaled, d))
    return [Fraction(r, denom) for r in integer_roots(coeffs)]


def _character_tuples(delta_rows, n: int, field: Ring) -> list[tuple]:
    """Joint eigen-covector eigenvalue tuples of the dual multiplications.

    The transposed left multiplication by the i-th dual basis vector is
    the i-th n x n column block of the comultiplication matrix, which
    keeps the recursion a matter of slicing.
    """
    if n == 0:
        return []
    spaces = [(Matrix.identity(field, n), ())]
    for i in range(n):
        block = Matrix(field, [row[i * n : (i + 1) * n] for row in delta_rows], n)
        nxt = []
        for basis, prefix in spaces:
            bn = basis * block
            pivots = basis.pivot_columns()
            restriction = Matrix(field, [[row[pc] for pc in pivots] for row in bn.rows], basis.nrows)
            if restriction * basis != bn:
                raise AssertionError("joint eigenspace lost invariance")
            for lam in _field_eigenvalues(restriction):
                shifted = restriction - Matrix.identity(field, restriction.nrows).scale(lam)
                h, u = hnf(shifted)
                ker_rows = u.rows[h.nrows :]
                if not ker_rows:
                    continue
                newbasis = hnf_basis(Matrix(field, ker_rows, restriction.nrows) * basis)
                nxt.append((newbasis, prefix + (lam,)))
        spaces = nxt
        if not spaces:
            return []
    return [prefix for _, prefix in spaces]


def group_likes(c: Coalgebra) -> GroupLikeSet:
    """All group-like elements, with certificates.

    The eigen-covector recursion runs over the fraction field; a
    candidate survives if every coordinate lies in the ground ring, and
    each survivor is reverified exactly against the definition.
    """
    ring = c.ring
    n = c.rank
    field = ring.fraction_field()
    if field == ring:
        delta_rows = c.delta.rows
    else:
        conv = ring.to_fraction
        delta_rows = [[conv(v) for v in row] for row in c.delta.rows]
    vectors = []
    for tup in _character_tuples(delta_rows, n, field):
        if field != ring:
            if not all(ring.contains_fraction(x) for x in tup):
                continue
            cand = [ring.from_fraction(x) for x in tup]
        else:
            cand = list(tup)
        if not _is_group_like(c, cand):
            raise AssertionError("character candidate failed exact verification")
        vectors.append(tuple(cand))
    vectors.sort()
    return _certified(c, vectors)


def _certified(c: Coalgebra, vectors) -> GroupLikeSet:
    # Independence always holds (the classical argument is valid over any
    # domain); purity of the span can fail for exotic inputs, e.g. the dual
    # of Z[x]/(x^2 - 2x), whose group-likes (1,0) and (1,2) collide mod 2.
    # The certificate records that instead of pretending otherwise.
    if vectors:
        stacked = Matrix(c.ring, [list(v) for v in vectors], c.rank)
        divisors = tuple(elementary_divisors(stacked))
        if len(divisors) != len(vectors):
            raise AssertionError("group-likes failed the independence certificate")
        lat = Lattice.from_rows(c.ring, c.rank, [list(v) for v in vectors])
        pure, witness = lat.is_pure()
    else:
        divisors = ()
        pure, witness = True, None
    return GroupLikeSet(c, tuple(vectors), divisors, pure, witness)


def group_likes_bruteforce(c: Coalgebra) -> GroupLikeSet:
    """Exhaustive scan over F_p^n; the oracle for the eigenvector algorithm."""
    ring = c.ring
    if ring.kind != "Fp":
        raise UnsupportedRing("brute force enumeration needs a prime field")
    n = c.rank
    if ring.p**n > BRUTE_FORCE_BOUND:
        raise TooLarge(f"{ring.p}^{n} exceeds the enumeration bound {BRUTE_FORCE_BOUND}")
    vectors = [tuple(g) for g in itertools.product(range(ring.p), repeat=n) if _is_group_like(c, list(g))]
    vectors.sort()
    return _certified(c, vectors)


def _dual_block(delta_rows, n, i):
    """Transposed multiplication-by-f_i matrix of the dual algebra."""
    return [row[i * n : (i + 1) * n] for row in delta_rows]


def _frobenius_matrix(c: Coalgebra) -> Matrix:
    """Matrix of x -> x^p on the dual algebra of a prime-field coalgebra."""
    from .coalgebra import dual_algebra

    a = dual_algebra(c)
    p = c.ring.p
    rows = []
    for i in range(c.rank):
        e = [c.ring.one if t == i else c.ring.zero for t in range(c.rank)]
        rows.append(a.power(e, p))
    return Matrix(c.ring, rows, c.rank)


def is_pointed(c: Coalgebra):
    """Decide pointedness; returns (flag, PointednessReport)."""
    ring = c.ring
    n = c.rank
    if n == 0:
        return True, PointednessReport(0, 0, (), True)
    field = ring.fraction_field()
    if field == ring:
        delta_rows = c.delta.rows
    else:
        conv = ring.to_fraction
        delta_rows = [[conv(v) for v in row] for row in c.delta.rows]

    if field.kind == "Fp":
        fro = _frobenius_matrix(c)
        k = 1
        power = fro
        while field.p**k < n:
            power = power * fro
            k += 1
        semisimple_dim = power.rank()
    else:
        blocks = [_dual_block(delta_rows, n, i) for i in range(n)]
        gram = []
        for i in range(n):
            bi = blocks[i]
            row = []
            for j in range(n):
                bj = blocks[j]
                tr = field.zero
                for a in range(n):
                    for b in range(n):
                        tr = tr + bi[a][b] * bj[b][a]
                row.append(tr)
            gram.append(row)
        semisimple_dim = Matrix(field, gram, n).rank()

    tuples = _character_tuples(delta_rows, n, field)
    nonintegral = []
    if field != ring:
        for tup in tuples:
            if not all(ring.contains_fraction(x) for x in tup):
                nonintegral.append(tup)
    flag = semisimple_dim == len(tuples) and not nonintegral
    return flag, PointednessReport(semisimple_dim, len(tuples), tuple(sorted(nonintegral)), flag)


def counit_retraction(g, c: Coalgebra) -> CoalgebraMap:
    """The retraction x -> eps(x) * g onto the line of a group-like g."""
    g = list(g)
    if tuple(g) not in set(group_likes(c).vectors):
        raise NotGroupLike(f"{g} is not group-like in {c}")
    rows = []
    for e in c.counit:
        row = [e * x for x in g]
        if c.ring.kind == "Fp":
            row = [v % c.ring.p for v in row]
        rows.append(row)
    f = CoalgebraMap(c, c, Matrix(c.ring, rows, c.rank))
    bad = validate_map(f).first_failure()
    if bad is not None:
        raise AssertionError(f"counit retraction failed validation: {bad}")
    return f


def gr_of_map(f: CoalgebraMap):
    """Induced map on group-likes, returned as sorted (source, image) pairs."""
    f.require_valid()
    codomain_set = set(group_likes(f.codomain).vectors)
    pairs = []
    for g in group_likes(f.domain).vectors:
        img = tuple(f.apply(list(g)))
        if img not in codomain_set:
            raise NotGroupLikeImage(f"image of {g} is not group-like")
        pairs.append((g, img))
    return pairs
