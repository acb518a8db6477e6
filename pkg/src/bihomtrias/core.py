"""BiHom-associative trialgebra data model and axiom checking.

An algebra is stored as three structure-constant tensors (left product
``x -| y``, right product ``x |- y``, middle product ``x _|_ y``) plus the
two twisting maps alpha and beta, all over Q(i).  Nothing is assumed at
construction time: the defining axioms are *checked*, and failures are
returned as data (witness triples with both sides' values), never raised.

Indices are 0-based internally and 1-based in I/O and reports.

The axiom list follows the defining identities of BiHom-associative
trialgebras, with each two-step chain split into separately reported
sub-identities so a witness pinpoints which equality breaks:

    C0 :  alpha . beta = beta . alpha
    A1 :  (x -| y) -| b(z)  =  a(x) -| (y -| z)
    A2a:  (x -| y) -| b(z)  =  a(x) -| (y |- z)
    A2b:  a(x) -| (y |- z)  =  a(x) -| (y _|_ z)
    A3 :  (x |- y) -| b(z)  =  a(x) |- (y -| z)
    A4a:  (x -| y) |- b(z)  =  a(x) |- (y |- z)
    A4b:  a(x) |- (y |- z)  =  (x _|_ y) |- b(z)
    A5 :  (x |- y) |- b(z)  =  a(x) |- (y |- z)
    A6 :  (x _|_ y) -| b(z) =  a(x) _|_ (y -| z)
    A7 :  (x -| y) _|_ b(z) =  a(x) _|_ (y |- z)
    A8 :  (x |- y) _|_ b(z) =  a(x) |- (y _|_ z)
    A9 :  (x _|_ y) _|_ b(z) = a(x) _|_ (y _|_ z)

and multiplicativity (a subclass property, checked but never required):

    M1/M2: alpha/beta endomorphism of -|      M3/M4: of |-      M5/M6: of _|_
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .matrices import Matrix, Vector, inverse, vec_is_zero, zero_vec
from .scalars import ONE, ZERO, Scalar

LEFT = "left"
RIGHT = "right"
MIDDLE = "middle"
ROLES = (LEFT, RIGHT, MIDDLE)
STAR = "star"  # role tag for derived single products (sums, commutators)
TENSOR_ROLES = ROLES + (STAR,)

AXIOM_IDS = ("C0", "A1", "A2a", "A2b", "A3", "A4a", "A4b", "A5", "A6", "A7", "A8", "A9")
MULT_IDS = ("M1", "M2", "M3", "M4", "M5", "M6")
ALL_CHECK_IDS = AXIOM_IDS + MULT_IDS


class MulTensor:
    """Structure constants of one bilinear product: e_i * e_j = sum_k c[i][j][k] e_k."""

    __slots__ = ("dim", "role", "c")

    def __init__(self, dim: int, role: str, c):
        if role not in TENSOR_ROLES:
            raise ValueError(f"unknown product role {role!r}")
        c = tuple(
            tuple(
                tuple(x if isinstance(x, Scalar) else Scalar(x) for x in row)
                for row in plane
            )
            for plane in c
        )
        if len(c) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane) for plane in c
        ):
            raise DimensionMismatch(f"tensor is not {dim}x{dim}x{dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "role", role)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("MulTensor is immutable")

    @staticmethod
    def zero(dim: int, role: str) -> "MulTensor":
        z = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        return MulTensor(dim, role, z)

    @staticmethod
    def from_entries(dim: int, role: str, entries) -> "MulTensor":
        """Build from a {(i, j, k): scalar} mapping, 0-based indices."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in entries.items():
            c[i][j][k] = v if isinstance(v, Scalar) else Scalar(v)
        return MulTensor(dim, role, c)

    def pair(self, i: int, j: int) -> Vector:
        """The product e_i * e_j as a coefficient vector."""
        return self.c[i][j]

    def bilinear(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension to arbitrary vectors."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"vectors must have length {n}")
        acc = list(zero_vec(n))
        for i, xi in enumerate(x):
            if xi.is_zero:
                continue
            ci = self.c[i]
            for j, yj in enumerate(y):
                if yj.is_zero:
                    continue
                coeff = xi * yj
                for k, ck in enumerate(ci[j]):
                    if not ck.is_zero:
                        acc[k] = acc[k] + coeff * ck
        return tuple(acc)

    def nonzero_entries(self):
        """Sorted ((i, j, k), scalar) pairs, 0-based."""
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, v in enumerate(self.c[i][j]):
                    if not v.is_zero:
                        out.append(((i, j, k), v))
        return out

    def __eq__(self, other):
        if not isinstance(other, MulTensor):
            return NotImplemented
        return self.dim == other.dim and self.role == other.role and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.role, self.c))


class LinearMap:
    """An n x n Scalar matrix; column i holds the image of e_i."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix: Matrix):
        if matrix.rows != matrix.cols:
            raise DimensionMismatch("linear map matrix must be square")
        object.__setattr__(self, "dim", matrix.rows)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMap is immutable")

    @staticmethod
    def identity(dim: int) -> "LinearMap":
        return LinearMap(Matrix.identity(dim))

    @staticmethod
    def zero(dim: int) -> "LinearMap":
        return LinearMap(Matrix.zeros(dim, dim))

    @staticmethod
    def from_rows(rows) -> "LinearMap":
        return LinearMap(Matrix.from_rows(rows))

    @staticmethod
    def unit(dim: int, row: int, col: int) -> "LinearMap":
        """Matrix unit E (0-based): maps e_col to e_row, all else to 0."""
        return LinearMap(
            Matrix(
                dim, dim,
                [ONE if (r == row and c == col) else ZERO for r in range(dim) for c in range(dim)],
            )
        )

    @staticmethod
    def from_images(dim: int, images) -> "LinearMap":
        """Build from a {source_index: image_vector} mapping, 0-based; unlisted images are 0."""
        cols = {s: tuple(v) for s, v in images.items()}
        ent = []
        for r in range(dim):
            for c in range(dim):
                ent.append(cols[c][r] if c in cols else ZERO)
        return LinearMap(Matrix(dim, dim, ent))

    def apply(self, x: Vector) -> Vector:
        return self.matrix.apply(x)

    def image_of_basis(self, i: int) -> Vector:
        return self.matrix.col(i)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(self.matrix @ other.matrix)

    def add(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def sub(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c))

    def inverse(self) -> "LinearMap":
        return LinearMap(inverse(self.matrix))

    def is_invertible(self) -> bool:
        from .matrices import rank

        return rank(self.matrix) == self.dim

    def flatten(self) -> Vector:
        """Row-major flattening, matching the d_qp / c_qp unknown ordering."""
        return self.matrix.entries

    @staticmethod
    def from_flat(dim: int, flat) -> "LinearMap":
        return LinearMap(Matrix(dim, dim, list(flat)))

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap({self.matrix!r})"


class BiHomTrialgebra:
    """Three products plus two twisting maps on a common dimension.

    No axiom is enforced here; use :func:`check_axioms`.
    """

    __slots__ = ("name", "dim", "left", "right", "middle", "alpha", "beta")

    def __init__(self, name, dim, left, right, middle, alpha, beta):
        for t, role in ((left, LEFT), (right, RIGHT), (middle, MIDDLE)):
            if t.dim != dim:
                raise DimensionMismatch(f"{role} tensor has dim {t.dim}, expected {dim}")
            if t.role != role:
                raise DimensionMismatch(f"tensor in slot {role} carries role {t.role}")
        if alpha.dim != dim or beta.dim != dim:
            raise DimensionMismatch("twisting map dimension mismatch")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "middle", middle)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("BiHomTrialgebra is immutable")

    def tensor(self, role: str) -> MulTensor:
        if role == LEFT:
            return self.left
        if role == RIGHT:
            return self.right
        if role == MIDDLE:
            return self.middle
        raise ValueError(f"unknown product role {role!r}")

    def tensors(self):
        return (self.left, self.right, self.middle)

    def renamed(self, name: str) -> "BiHomTrialgebra":
        return BiHomTrialgebra(
            name, self.dim, self.left, self.right, self.middle, self.alpha, self.beta
        )

    def __eq__(self, other):
        if not isinstance(other, BiHomTrialgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.left == other.left
            and self.right == other.right
            and self.middle == other.middle
            and self.alpha == other.alpha
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.dim, self.left, self.right, self.middle, self.alpha, self.beta))

    def __repr__(self):
        return f"BiHomTrialgebra({self.name!r}, dim={self.dim})"


def zero_algebra(dim: int, name: str = "zero") -> BiHomTrialgebra:
    return BiHomTrialgebra(
        name,
        dim,
        MulTensor.zero(dim, LEFT),
        MulTensor.zero(dim, RIGHT),
        MulTensor.zero(dim, MIDDLE),
        LinearMap.zero(dim),
        LinearMap.zero(dim),
    )


def evaluate(algebra: BiHomTrialgebra, role: str, x: Vector, y: Vector) -> Vector:
    """Bilinear product of two vectors under the selected product."""
    return algebra.tensor(role).bilinear(x, y)


# -- axiom checking ----------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """One failing basis tuple, with both sides' values (indices 1-based)."""

    i: int
    j: int | None
    k: int | None
    lhs: Vector
    rhs: Vector

    def key(self):
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class AxiomResult:
    axiom_id: str
    holds: bool
    witnesses: tuple

    def witness_keys(self):
        return {w.key() for w in self.witnesses}


@dataclass(frozen=True)
class AxiomReport:
    results: tuple

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)

    def result(self, axiom_id: str) -> AxiomResult:
        for r in self.results:
            if r.axiom_id == axiom_id:
                return r
        raise KeyError(axiom_id)

    def failing_ids(self):
        return tuple(r.axiom_id for r in self.results if not r.holds)

    def profile(self):
        """(axiom_id, holds) pairs in report order; an isomorphism invariant."""
        return tuple((r.axiom_id, r.holds) for r in self.results)

    def merged(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.results + other.results)


# Each product axiom equates two sides; a side is either
#   ("S1", inner, outer):  (x inner y) outer beta(z)
#   ("S2", inner, outer):  alpha(x) outer (y inner z)
_PRODUCT_AXIOMS = (
    ("A1", ("S1", LEFT, LEFT), ("S2", LEFT, LEFT)),
    ("A2a", ("S1", LEFT, LEFT), ("S2", RIGHT, LEFT)),
    ("A2b", ("S2", RIGHT, LEFT), ("S2", MIDDLE, LEFT)),
    ("A3", ("S1", RIGHT, LEFT), ("S2", LEFT, RIGHT)),
    ("A4a", ("S1", LEFT, RIGHT), ("S2", RIGHT, RIGHT)),
    ("A4b", ("S2", RIGHT, RIGHT), ("S1", MIDDLE, RIGHT)),
    ("A5", ("S1", RIGHT, RIGHT), ("S2", RIGHT, RIGHT)),
    ("A6", ("S1", MIDDLE, LEFT), ("S2", LEFT, MIDDLE)),
    ("A7", ("S1", LEFT, MIDDLE), ("S2", RIGHT, MIDDLE)),
    ("A8", ("S1", RIGHT, MIDDLE), ("S2", MIDDLE, RIGHT)),
    ("A9", ("S1", MIDDLE, MIDDLE), ("S2", MIDDLE, MIDDLE)),
)


def _side_value(algebra, side, i, j, k, alpha_img, beta_img):
    kind, inner, outer = side
    t_in = algebra.tensor(inner)
    t_out = algebra.tensor(outer)
    if kind == "S1":
        return t_out.bilinear(t_in.pair(i, j), beta_img[k])
    return t_out.bilinear(alpha_img[i], t_in.pair(j, k))


def check_axioms(algebra: BiHomTrialgebra) -> AxiomReport:
    """Check C0 and the nine product-axiom families over all basis triples."""
    n = algebra.dim
    alpha_img = [algebra.alpha.image_of_basis(i) for i in range(n)]
    beta_img = [algebra.beta.image_of_basis(i) for i in range(n)]

    results = []

    c0_witnesses = []
    for i in range(n):
        lhs = algebra.alpha.apply(beta_img[i])
        rhs = algebra.beta.apply(alpha_img[i])
        if lhs != rhs:
            c0_witnesses.append(Witness(i + 1, None, None, lhs, rhs))
    results.append(AxiomResult("C0", not c0_witnesses, tuple(c0_witnesses)))

    for axiom_id, lhs_side, rhs_side in _PRODUCT_AXIOMS:
        witnesses = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = _side_value(algebra, lhs_side, i, j, k, alpha_img, beta_img)
                    rhs = _side_value(algebra, rhs_side, i, j, k, alpha_img, beta_img)
                    if lhs != rhs:
                        witnesses.append(Witness(i + 1, j + 1, k + 1, lhs, rhs))
        results.append(AxiomResult(axiom_id, not witnesses, tuple(witnesses)))

    return AxiomReport(tuple(results))


_MULT_CHECKS = (
    ("M1", "alpha", LEFT),
    ("M2", "beta", LEFT),
    ("M3", "alpha", RIGHT),
    ("M4", "beta", RIGHT),
    ("M5", "alpha", MIDDLE),
    ("M6", "beta", MIDDLE),
)


def check_multiplicativity(algebra: BiHomTrialgebra) -> AxiomReport:
    """Check that alpha and beta are endomorphisms of each product (basis pairs)."""
    n = algebra.dim
    maps = {"alpha": algebra.alpha, "beta": algebra.beta}
    images = {
        name: [m.image_of_basis(i) for i in range(n)] for name, m in maps.items()
    }
    results = []
    for check_id, map_name, role in _MULT_CHECKS:
        f = maps[map_name]
        img = images[map_name]
        tensor = algebra.tensor(role)
        witnesses = []
        for i in range(n):
            for j in range(n):
                lhs = f.apply(tensor.pair(i, j))
                rhs = tensor.bilinear(img[i], img[j])
                if lhs != rhs:
                    witnesses.append(Witness(i + 1, j + 1, None, lhs, rhs))
        results.append(AxiomResult(check_id, not witnesses, tuple(witnesses)))
    return AxiomReport(tuple(results))


def full_report(algebra: BiHomTrialgebra) -> AxiomReport:
    """Axioms plus multiplicativity in one report (covers all check ids)."""
    return check_axioms(algebra).merged(check_multiplicativity(algebra))


def products_span(algebra: BiHomTrialgebra, roles=ROLES):
    """All basis-pair product values for the given roles (the span of A*A)."""
    vecs = []
    for role in roles:
        t = algebra.tensor(role)
        for i in range(algebra.dim):
            for j in range(algebra.dim):
                v = t.pair(i, j)
                if not vec_is_zero(v):
                    vecs.append(v)
    return vecs


__all__ = [
    "LEFT",
    "RIGHT",
    "MIDDLE",
    "ROLES",
    "AXIOM_IDS",
    "MULT_IDS",
    "ALL_CHECK_IDS",
    "MulTensor",
    "LinearMap",
    "BiHomTrialgebra",
    "zero_algebra",
    "evaluate",
    "Witness",
    "AxiomResult",
    "AxiomReport",
    "check_axioms",
    "check_multiplicativity",
    "full_report",
    "products_span",
]
