"""Exact subspace arithmetic over the Gaussian rationals.

Lattice identities like (b ^ a') v a = b are exact statements; floating
point would force tolerances and unsound verdicts, so scalars are pairs of
``fractions.Fraction``. Subspaces are kept in canonical reduced row-echelon
form, which makes subspace equality plain structural equality.

This also hosts the tensor-product embeddings of two factor lattices into
the lattice of the product space and the sampled verification of the seven
coupling conditions that characterize them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import QuantaxError
from .report import AxiomReport, failed, passed


class DimensionMismatch(QuantaxError):
    pass


class DimensionTooSmall(QuantaxError):
    pass


class DimensionTooLarge(QuantaxError):
    pass


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.of(other)
        n2 = o.norm2()
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n2, -o.im / n2)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


def _rref(rows, ncols):
    """Canonical reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(m)):
            if m[r][col]:
                sel = r
                break
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        inv = m[rank][col]
        m[rank] = [v / inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in m[:rank]), tuple(pivots)


def _nullspace(rows, ncols):
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    red, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [GR_ZERO] * ncols
        v[free] = GR_ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Subspace of a finite-dimensional Gaussian-rational inner-product space.

    ``basis`` rows are in canonical reduced row-echelon form, so two equal
    subspaces are structurally equal objects.
    """

    ambient_dim: int
    basis: tuple[tuple[GaussianRational, ...], ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors) -> "Subspace":
        vecs = [tuple(GaussianRational.of(v) for v in vec) for vec in vectors]
        for vec in vecs:
            if len(vec) != ambient_dim:
                raise DimensionMismatch(
                    f"vector length {len(vec)} != ambient dimension {ambient_dim}"
                )
        red, _ = _rref(vecs, ambient_dim)
        return Subspace(ambient_dim, red)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, basis={self.basis!r})"


def zero_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ())


def full_subspace(ambient_dim: int) -> Subspace:
    rows = []
    for i in range(ambient_dim):
        row = [GR_ZERO] * ambient_dim
        row[i] = GR_ONE
        rows.append(tuple(row))
    return Subspace(ambient_dim, tuple(rows))


def ray(vector) -> Subspace:
    s = Subspace.from_vectors(len(tuple(vector)), [vector])
    if s.dim != 1:
        raise ValueError("a ray needs a nonzero vector")
    return s


def _require_same_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )


def join(a: Subspace, b: Subspace) -> Subspace:
    """Sum of subspaces (closure is the sum in finite dimension)."""
    _require_same_ambient(a, b)
    return Subspace.from_vectors(a.ambient_dim, a.basis + b.basis)


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Exact intersection via the kernel of the stacked-basis system."""
    _require_same_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(a.ambient_dim)
    n, k = a.ambient_dim, a.dim
    # columns: coefficients on a's basis, then on b's; rows: one per coordinate
    rows = [
        tuple([va[t] for va in a.basis] + [-vb[t] for vb in b.basis])
        for t in range(n)
    ]
    vectors = []
    for z in _nullspace(rows, k + b.dim):
        vec = [GR_ZERO] * n
        for i in range(k):
            if z[i]:
                vec = [acc + z[i] * comp for acc, comp in zip(vec, a.basis[i])]
        vectors.append(tuple(vec))
    return Subspace.from_vectors(n, vectors)


def ortho(a: Subspace) -> Subspace:
    """Orthocomplement under the standard Hermitian form sum x_i * conj(y_i)."""
    n = a.ambient_dim
    if a.dim == 0:
        return full_subspace(n)
    rows = [tuple(v.conjugate() for v in row) for row in a.basis]
    return Subspace.from_vectors(n, _nullspace(rows, n))


def le(a: Subspace, b: Subspace) -> bool:
    """Subspace containment a <= b."""
    _require_same_ambient(a, b)
    return join(a, b) == b


def join_all(ambient_dim: int, subspaces) -> Subspace:
    acc = zero_subspace(ambient_dim)
    for s in subspaces:
        acc = join(acc, s)
    return acc


def _mat_mul(x, y):
    n, k, m = len(x), len(y), len(y[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = GR_ZERO
            for t in range(k):
                if x[i][t] and y[t][j]:
                    acc = acc + x[i][t] * y[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_inv(m):
    k = len(m)
    aug = [list(row) + [GR_ONE if i == j else GR_ZERO for j in range(k)] for i, row in enumerate(m)]
    red, pivots = _rref(aug, 2 * k)
    if list(pivots) != list(range(k)):
        raise ArithmeticError("matrix is singular")
    return tuple(tuple(row[k:]) for row in red)


def projection_matrix(s: Subspace):
    """Orthogonal projection onto s: A^T (conj(A) A^T)^-1 conj(A)."""
    n = s.ambient_dim
    if s.dim == 0:
        return tuple(tuple(GR_ZERO for _ in range(n)) for _ in range(n))
    a = s.basis
    conj_a = tuple(tuple(v.conjugate() for v in row) for row in a)
    a_t = tuple(tuple(a[i][t] for i in range(len(a))) for t in range(n))
    gram = _mat_mul(conj_a, a_t)
    return _mat_mul(_mat_mul(a_t, _mat_inv(gram)), conj_a)


def projections_commute(s: Subspace, t: Subspace) -> bool:
    """Compatibility: the orthogonal projections onto s and t commute exactly."""
    _require_same_ambient(s, t)
    ps, pt = projection_matrix(s), projection_matrix(t)
    return _mat_mul(ps, pt) == _mat_mul(pt, ps)


def compatible_as_decomposition(s: Subspace, t: Subspace) -> bool:
    """Equivalent formulation of compatibility: s = (s^t) v (s^t')."""
    return join(meet(s, t), meet(s, ortho(t))) == s


# ---------------------------------------------------------------------------
# seeded sampling; numerators in {-2..2}, denominators in {1, 2}


def _rand_fraction(rng) -> Fraction:
    return Fraction(rng.randrange(-2, 3), rng.choice((1, 2)))


def random_scalar(rng) -> GaussianRational:
    return GaussianRational(_rand_fraction(rng), _rand_fraction(rng))


def random_vector(rng, dim) -> tuple:
    return tuple(random_scalar(rng) for _ in range(dim))


def random_ray(rng, dim) -> Subspace:
    while True:
        v = random_vector(rng, dim)
        if any(v):
            return ray(v)


def random_subspace(rng, dim, min_dim=0) -> Subspace:
    k = rng.randrange(min_dim, dim + 1)
    return Subspace.from_vectors(dim, [random_vector(rng, dim) for _ in range(k)])


def random_proper_subspace(rng, dim) -> Subspace:
    """A subspace of dimension strictly between 0 and dim."""
    while True:
        s = random_subspace(rng, dim, min_dim=1)
        if 0 < s.dim < dim:
            return s


def random_axiom_probe(dim: int, trials: int, seed: int) -> dict[str, AxiomReport]:
    """Sampled covering-law, weak-modularity and atomistic-join instances on
    the subspace lattice; exact arithmetic, zero expected violations.

    Covering instances search for an intermediate element between a and
    a v p among sampled candidates; weak modularity verifies the identity
    (b ^ a') v a = b on constructed comparable pairs; atomistic-join
    verifies each sampled subspace is the join of rays inside it.
    """
    if not 2 <= dim <= 6:
        raise ValueError("dim must be between 2 and 6")
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    wit = {"covering": None, "weak_modularity": None, "atomistic_join": None}

    for t in range(trials):
        a = random_subspace(rng, dim)
        p = random_ray(rng, dim)
        j = join(a, p)
        candidates = [
            random_subspace(rng, dim),
            join(a, random_ray(rng, dim)),
            meet(j, random_subspace(rng, dim)),
        ]
        for x in candidates:
            if x != a and x != j and le(a, x) and le(x, j):
                wit["covering"] = wit["covering"] or (t, a, p, x)

        b = join(a, random_subspace(rng, dim))
        if join(meet(b, ortho(a)), a) != b:
            wit["weak_modularity"] = wit["weak_modularity"] or (t, a, b)

        s = random_subspace(rng, dim)
        rays = [ray(row) for row in s.basis]
        if join_all(dim, rays) != s:
            wit["atomistic_join"] = wit["atomistic_join"] or (t, s)

    out = {}
    for key, w in wit.items():
        if w is None:
            out[key] = passed(key, f"{trials} sampled instances, dim {dim}")
        else:
            out[key] = failed(key, [(w[0],)], f"violation at trial {w[0]}: {w[1:]!r}")
    return out


# ---------------------------------------------------------------------------
# tensor embeddings and the coupling conditions


@dataclass(frozen=True)
class TensorEmbedding:
    """h1: A -> A (x) H2 or h2: B -> H1 (x) B on the product space."""

    factor: int
    dim1: int
    dim2: int

    @property
    def ambient_dim(self) -> int:
        return self.dim1 * self.dim2

    def __call__(self, s: Subspace) -> Subspace:
        d1, d2 = self.dim1, self.dim2
        if self.factor == 1:
            if s.ambient_dim != d1:
                raise DimensionMismatch("input lives in the wrong factor space")
            rows = []
            for a in s.basis:
                for jj in range(d2):
                    row = [GR_ZERO] * (d1 * d2)
                    for t in range(d1):
                        row[t * d2 + jj] = a[t]
                    rows.append(tuple(row))
        else:
            if s.ambient_dim != d2:
                raise DimensionMismatch("input lives in the wrong factor space")
            rows = []
            for b in s.basis:
                for ii in range(d1):
                    row = [GR_ZERO] * (d1 * d2)
                    for t in range(d2):
                        row[ii * d2 + t] = b[t]
                    rows.append(tuple(row))
        return Subspace.from_vectors(d1 * d2, rows)


def tensor_embedding_pair(dim1: int, dim2: int) -> tuple[TensorEmbedding, TensorEmbedding]:
    """Kronecker-structured lattice embeddings of both factors.

    Requires both factor dimensions above 2 and a product dimension of at
    most 36.
    """
    if dim1 <= 2 or dim2 <= 2:
        raise DimensionTooSmall("both factor dimensions must exceed 2")
    if dim1 * dim2 > 36:
        raise DimensionTooLarge("product dimension above 36")
    return TensorEmbedding(1, dim1, dim2), TensorEmbedding(2, dim1, dim2)


@dataclass(frozen=True, eq=False)
class CouplingSample:
    """Seeded input families for the coupling-condition checks."""

    dim1: int
    dim2: int
    inclusion_pairs_1: tuple
    inclusion_pairs_2: tuple
    join_families_1: tuple
    join_families_2: tuple
    compat_pairs: tuple
    ray_pairs: tuple


def sample_coupling_inputs(
    dim1: int, dim2: int, trials: int, ray_pairs: int, seed: int
) -> CouplingSample:
    rng = random.Random(seed)
    inc1 = []
    inc2 = []
    fam1 = []
    fam2 = []
    compat = []
    for _ in range(trials):
        a1 = random_subspace(rng, dim1)
        inc1.append((a1, join(a1, random_subspace(rng, dim1))))
        a2 = random_subspace(rng, dim2)
        inc2.append((a2, join(a2, random_subspace(rng, dim2))))
        fam1.append(tuple(random_subspace(rng, dim1) for _ in range(rng.randrange(2, 4))))
        fam2.append(tuple(random_subspace(rng, dim2) for _ in range(rng.randrange(2, 4))))
        compat.append((random_subspace(rng, dim1), random_subspace(rng, dim2)))
    rays = tuple(
        (random_ray(rng, dim1), random_ray(rng, dim2)) for _ in range(ray_pairs)
    )
    return CouplingSample(
        dim1,
        dim2,
        tuple(inc1),
        tuple(inc2),
        tuple(fam1),
        tuple(fam2),
        tuple(compat),
        rays,
    )


@dataclass(frozen=True)
class ConditionResult:
    condition: int
    description: str
    checked: int
    holds: bool
    counterexample: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "description": self.description,
            "checked": self.checked,
            "holds": self.holds,
            "counterexample": repr(self.counterexample) if self.counterexample else None,
        }


@dataclass(frozen=True, eq=False)
class CouplingReport:
    """Per-condition verdicts for the seven coupling conditions (25)-(31)."""

    conditions: tuple[ConditionResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.holds for c in self.conditions)

    def result(self, condition: int) -> ConditionResult:
        for c in self.conditions:
            if c.condition == condition:
                return c
        raise KeyError(condition)

    def to_dict(self) -> dict:
        return {
            "all_pass": self.all_pass,
            "conditions": [c.to_dict() for c in self.conditions],
        }


def check_coupling_conditions(h1, h2, sample: CouplingSample) -> CouplingReport:
    """Verify the seven coupling conditions on the sampled families.

    Monotonicity (25)(26), join preservation over the sampled finite
    families (27)(28), the top condition (29), compatibility as commuting
    projections (30), and the ray condition (31): h1(p1) ^ h2(p2) is a
    one-dimensional subspace. The verdict is per sampled instance; sampling
    cannot certify the universally quantified originals.
    """
    ambient = sample.dim1 * sample.dim2
    results = []

    def run(condition, description, instances, check):
        counter = None
        count = 0
        for inst in instances:
            count += 1
            if not check(inst):
                counter = inst
                break
        results.append(
            ConditionResult(condition, description, count, counter is None, counter)
        )

    run(
        25,
        "A1 <= B1 implies h1(A1) <= h1(B1)",
        sample.inclusion_pairs_1,
        lambda ab: le(h1(ab[0]), h1(ab[1])),
    )
    run(
        26,
        "A2 <= B2 implies h2(A2) <= h2(B2)",
        sample.inclusion_pairs_2,
        lambda ab: le(h2(ab[0]), h2(ab[1])),
    )
    run(
        27,
        "h1 preserves joins of sampled families",
        sample.join_families_1,
        lambda fam: h1(join_all(sample.dim1, fam))
        == join_all(ambient, [h1(x) for x in fam]),
    )
    run(
        28,
        "h2 preserves joins of sampled families",
        sample.join_families_2,
        lambda fam: h2(join_all(sample.dim2, fam))
        == join_all(ambient, [h2(x) for x in fam]),
    )
    run(
        29,
        "h1(H1) = h2(H2) = H",
        [(full_subspace(sample.dim1), full_subspace(sample.dim2))],
        lambda fs: h1(fs[0]) == full_subspace(ambient)
        and h2(fs[1]) == full_subspace(ambient),
    )
    run(
        30,
        "h1(C1) is compatible with h2(C2) (projections commute)",
        sample.compat_pairs,
        lambda cc: projections_commute(h1(cc[0]), h2(cc[1])),
    )
    run(
        31,
        "h1(p1) ^ h2(p2) is a state (one-dimensional)",
        sample.ray_pairs,
        lambda pp: meet(h1(pp[0]), h2(pp[1])).dim == 1,
    )
    return CouplingReport(tuple(results))
