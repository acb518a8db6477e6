"""Morphisms, isomorphism transport, and the derived constructions.

Every construction returns the candidate object *together with* the
report of the identities it is supposed to satisfy; a construction whose
conclusion fails on some input is data for the errata log, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    LEFT,
    MIDDLE,
    RIGHT,
    ROLES,
    STAR,
    AxiomReport,
    BiHomTrialgebra,
    LinearMap,
    MulTensor,
    check_axioms,
)
from .errors import DimensionMismatch, PreconditionFailed
from .matrices import Matrix, unit_vec, vec_add, vec_scale, vec_sub, zero_vec
from .scalars import ZERO, Scalar


class BiHomAlgebra:
    """A single-product (A, *, alpha, beta); associativity is checkable, not assumed."""

    __slots__ = ("name", "dim", "mu", "alpha", "beta")

    def __init__(self, name, dim, mu: MulTensor, alpha: LinearMap, beta: LinearMap):
        if mu.dim != dim or alpha.dim != dim or beta.dim != dim:
            raise DimensionMismatch("component dimension mismatch")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, value):
        raise AttributeError("BiHomAlgebra is immutable")

    def __repr__(self):
        return f"BiHomAlgebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class RotaBaxterData:
    """Candidate Rota-Baxter operator with its weight; verified, not assumed."""

    op: LinearMap
    weight: Scalar


@dataclass(frozen=True)
class BracketPair:
    """The antisymmetrized products x*y = x-|y - y|-x and [x,y] = x_|_y - y_|_x."""

    star: MulTensor
    bracket: MulTensor


@dataclass(frozen=True)
class MorphismReport:
    holds: bool
    witnesses: tuple  # (kind, role_or_map, i, j, lhs, rhs), 1-based indices


def _tensor_from_pairs(dim, role, pair_fn) -> MulTensor:
    c = [[list(pair_fn(i, j)) for j in range(dim)] for i in range(dim)]
    return MulTensor(dim, role, c)


def retag(t: MulTensor, role: str) -> MulTensor:
    return MulTensor(t.dim, role, t.c)


def is_morphism(psi: LinearMap, a: BiHomTrialgebra, b: BiHomTrialgebra):
    """Check psi : a -> b intertwines the twists and all three products."""
    if psi.dim != a.dim or a.dim != b.dim:
        raise DimensionMismatch("morphism endpoints must share the map's dimension")
    witnesses = []
    for name, fa, fb in (("alpha", a.alpha, b.alpha), ("beta", a.beta, b.beta)):
        lhs = psi.compose(fa)
        rhs = fb.compose(psi)
        if lhs != rhs:
            for i in range(a.dim):
                li, ri = lhs.image_of_basis(i), rhs.image_of_basis(i)
                if li != ri:
                    witnesses.append(("map", name, i + 1, None, li, ri))
    for role in ROLES:
        ta, tb = a.tensor(role), b.tensor(role)
        for i in range(a.dim):
            pi = psi.image_of_basis(i)
            for j in range(a.dim):
                lhs = psi.apply(ta.pair(i, j))
                rhs = tb.bilinear(pi, psi.image_of_basis(j))
                if lhs != rhs:
                    witnesses.append(("product", role, i + 1, j + 1, lhs, rhs))
    return MorphismReport(not witnesses, tuple(witnesses))


def is_isomorphism(psi: LinearMap, a: BiHomTrialgebra, b: BiHomTrialgebra) -> bool:
    return psi.is_invertible() and is_morphism(psi, a, b).holds


def transport(algebra: BiHomTrialgebra, psi: LinearMap) -> BiHomTrialgebra:
    """Conjugate products and twists by an invertible map.

    Products become psi . (*) . (psi^-1 x psi^-1) and the twists
    psi alpha psi^-1, psi beta psi^-1; the result is isomorphic to the
    input via psi.
    """
    if psi.dim != algebra.dim:
        raise DimensionMismatch("transport map dimension mismatch")
    inv = psi.inverse()  # raises SingularMatrix when not invertible
    n = algebra.dim
    inv_cols = [inv.image_of_basis(i) for i in range(n)]

    def conjugated(tensor):
        def pair(i, j):
            return psi.apply(tensor.bilinear(inv_cols[i], inv_cols[j]))

        return pair

    new_left = _tensor_from_pairs(n, LEFT, conjugated(algebra.left))
    new_right = _tensor_from_pairs(n, RIGHT, conjugated(algebra.right))
    new_middle = _tensor_from_pairs(n, MIDDLE, conjugated(algebra.middle))
    new_alpha = psi.compose(algebra.alpha).compose(inv)
    new_beta = psi.compose(algebra.beta).compose(inv)
    return BiHomTrialgebra(
        f"{algebra.name}~transport", n, new_left, new_right, new_middle, new_alpha, new_beta
    )


def conjugate_automorphism_check(
    algebra: BiHomTrialgebra, psi: LinearMap, phi: LinearMap
) -> bool:
    """Whether psi phi psi^-1 is an automorphism of transport(algebra, psi).

    Preconditions: psi invertible, phi an automorphism of the input.
    """
    if not is_isomorphism(phi, algebra, algebra):
        raise PreconditionFailed("phi is not an automorphism of the input algebra")
    moved = transport(algebra, psi)
    conj = psi.compose(phi).compose(psi.inverse())
    return is_isomorphism(conj, moved, moved)


def untwist(algebra: BiHomTrialgebra):
    """Replace each product by (a^-1 x) * (b^-1 y) and the twists by id.

    Raises SingularMatrix when alpha or beta is not invertible.  Returns
    the candidate together with its axiom report (identity-twist axioms).
    """
    inv_a = algebra.alpha.inverse()
    inv_b = algebra.beta.inverse()
    n = algebra.dim
    a_cols = [inv_a.image_of_basis(i) for i in range(n)]
    b_cols = [inv_b.image_of_basis(i) for i in range(n)]

    def untwisted(tensor):
        return lambda i, j: tensor.bilinear(a_cols[i], b_cols[j])

    candidate = BiHomTrialgebra(
        f"{algebra.name}~untwist",
        n,
        _tensor_from_pairs(n, LEFT, untwisted(algebra.left)),
        _tensor_from_pairs(n, RIGHT, untwisted(algebra.right)),
        _tensor_from_pairs(n, MIDDLE, untwisted(algebra.middle)),
        LinearMap.identity(n),
        LinearMap.identity(n),
    )
    return candidate, check_axioms(candidate)


def direct_sum(a: BiHomTrialgebra, b: BiHomTrialgebra) -> BiHomTrialgebra:
    """Blockwise products and maps on the sum of the carrier spaces."""
    na, nb = a.dim, b.dim
    n = na + nb

    def block_tensor(role):
        ta, tb = a.tensor(role), b.tensor(role)

        def pair(i, j):
            if i < na and j < na:
                return tuple(ta.pair(i, j)) + zero_vec(nb)
            if i >= na and j >= na:
                return zero_vec(na) + tuple(tb.pair(i - na, j - na))
            return zero_vec(n)

        return _tensor_from_pairs(n, role, pair)

    def block_map(fa, fb):
        ent = []
        for r in range(n):
            for c in range(n):
                if r < na and c < na:
                    ent.append(fa.matrix[r, c])
                elif r >= na and c >= na:
                    ent.append(fb.matrix[r - na, c - na])
                else:
                    ent.append(ZERO)
        return LinearMap(Matrix(n, n, ent))

    return BiHomTrialgebra(
        f"{a.name}(+){b.name}",
        n,
        block_tensor(LEFT),
        block_tensor(RIGHT),
        block_tensor(MIDDLE),
        block_map(a.alpha, b.alpha),
        block_map(a.beta, b.beta),
    )


def graph_subalgebra_check(xi: LinearMap, a: BiHomTrialgebra, b: BiHomTrialgebra) -> bool:
    """Whether the graph of xi is closed in a (+) b under products and twists.

    Membership of (x, y) in the graph means y = xi(x); checked on the
    images of graph basis vectors inside the direct sum.  Must coincide
    with is_morphism(xi, a, b).
    """
    if xi.dim != a.dim or a.dim != b.dim:
        raise DimensionMismatch("graph check dimension mismatch")
    s = direct_sum(a, b)
    na = a.dim
    graph_basis = []
    for i in range(na):
        x = unit_vec(na, i)
        graph_basis.append(tuple(x) + tuple(xi.apply(x)))

    def in_graph(v):
        return tuple(v[na:]) == tuple(xi.apply(v[:na]))

    for u in graph_basis:
        if not in_graph(s.alpha.apply(u)) or not in_graph(s.beta.apply(u)):
            return False
        for v in graph_basis:
            for role in ROLES:
                if not in_graph(s.tensor(role).bilinear(u, v)):
                    return False
    return True


# -- Rota-Baxter operators ----------------------------------------------

def rota_baxter_check(algebra: BiHomTrialgebra, rb: RotaBaxterData):
    """Verify the weighted Rota-Baxter identities on all basis pairs.

    Note the left/right crossing: the |- of two R-images expands through
    -| arguments and vice versa; the middle product stays uncrossed.
    """
    r, lam = rb.op, rb.weight
    if r.dim != algebra.dim:
        raise DimensionMismatch("operator dimension mismatch")
    n = algebra.dim
    witnesses = []
    for name, f in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        lhs, rhs = r.compose(f), f.compose(r)
        if lhs != rhs:
            for i in range(n):
                li, ri = lhs.image_of_basis(i), rhs.image_of_basis(i)
                if li != ri:
                    witnesses.append((f"commute-{name}", i + 1, None, li, ri))
    r_img = [r.image_of_basis(i) for i in range(n)]
    identities = (
        ("rb-right-of-left", RIGHT, LEFT),
        ("rb-left-of-right", LEFT, RIGHT),
        ("rb-middle", MIDDLE, MIDDLE),
    )
    for tag, outer_role, inner_role in identities:
        outer = algebra.tensor(outer_role)
        inner = algebra.tensor(inner_role)
        for i in range(n):
            ei = unit_vec(n, i)
            for j in range(n):
                ej = unit_vec(n, j)
                lhs = outer.bilinear(r_img[i], r_img[j])
                inside = vec_add(
                    vec_add(inner.bilinear(r_img[i], ej), inner.bilinear(ei, r_img[j])),
                    vec_scale(lam, inner.pair(i, j)),
                )
                rhs = r.apply(inside)
                if lhs != rhs:
                    witnesses.append((tag, i + 1, j + 1, lhs, rhs))
    return not witnesses, tuple(witnesses)


def rota_baxter_check_single(algebra: BiHomAlgebra, rb: RotaBaxterData):
    """Single-product Rota-Baxter identity R(x)*R(y) = R(R(x)*y + x*R(y) + w x*y)."""
    r, lam = rb.op, rb.weight
    if r.dim != algebra.dim:
        raise DimensionMismatch("operator dimension mismatch")
    n = algebra.dim
    mu = algebra.mu
    witnesses = []
    for name, f in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        if r.compose(f) != f.compose(r):
            witnesses.append((f"commute-{name}", None, None, None, None))
    r_img = [r.image_of_basis(i) for i in range(n)]
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(n):
            ej = unit_vec(n, j)
            lhs = mu.bilinear(r_img[i], r_img[j])
            inside = vec_add(
                vec_add(mu.bilinear(r_img[i], ej), mu.bilinear(ei, r_img[j])),
                vec_scale(lam, mu.pair(i, j)),
            )
            rhs = r.apply(inside)
            if lhs != rhs:
                witnesses.append(("rb-single", i + 1, j + 1, lhs, rhs))
    return not witnesses, tuple(witnesses)


@dataclass(frozen=True)
class RBInducedResult:
    algebra: BiHomTrialgebra
    report: AxiomReport
    precondition_holds: bool
    precondition_witnesses: tuple


def rb_induced(algebra: BiHomAlgebra, rb: RotaBaxterData) -> RBInducedResult:
    """Induce x -| y = x*R(y), x |- y = R(x)*y, x _|_ y = w(x*y).

    The single-product Rota-Baxter identity is the stated hypothesis; it
    is verified and reported rather than trusted, and the induced
    candidate ships with its own axiom report.
    """
    pre_ok, pre_wit = rota_baxter_check_single(algebra, rb)
    n = algebra.dim
    mu, r, lam = algebra.mu, rb.op, rb.weight
    r_img = [r.image_of_basis(i) for i in range(n)]

    left = _tensor_from_pairs(n, LEFT, lambda i, j: mu.bilinear(unit_vec(n, i), r_img[j]))
    right = _tensor_from_pairs(n, RIGHT, lambda i, j: mu.bilinear(r_img[i], unit_vec(n, j)))
    middle = _tensor_from_pairs(n, MIDDLE, lambda i, j: vec_scale(lam, mu.pair(i, j)))
    candidate = BiHomTrialgebra(
        f"{algebra.name}~rb", n, left, right, middle, algebra.alpha, algebra.beta
    )
    return RBInducedResult(candidate, check_axioms(candidate), pre_ok, pre_wit)


# -- map swap, product sums, commutator ----------------------------------

@dataclass(frozen=True)
class SwapResult:
    algebra: BiHomTrialgebra
    hypotheses: dict
    iso_tested: bool
    iso_holds: bool | None


def swap_maps(algebra: BiHomTrialgebra) -> SwapResult:
    """Exchange alpha and beta; test the isomorphism claim only under
    the full hypothesis set a^2 = id, b^2 = id, ab = ba = id.

    Those hypotheses force beta = alpha^-1 = alpha, so when they hold
    the swap equals the original and the identity map is the isomorphism.
    """
    swapped = BiHomTrialgebra(
        f"{algebra.name}~swap",
        algebra.dim,
        algebra.left,
        algebra.right,
        algebra.middle,
        algebra.beta,
        algebra.alpha,
    )
    ident = LinearMap.identity(algebra.dim)
    a, b = algebra.alpha, algebra.beta
    hypotheses = {
        "alpha_squared_is_id": a.compose(a) == ident,
        "beta_squared_is_id": b.compose(b) == ident,
        "alpha_beta_is_id": a.compose(b) == ident,
        "beta_alpha_is_id": b.compose(a) == ident,
    }
    if all(hypotheses.values()):
        return SwapResult(
            swapped, hypotheses, True, is_morphism(ident, algebra, swapped).holds
        )
    return SwapResult(swapped, hypotheses, False, None)


def sum_middle_right(algebra: BiHomTrialgebra):
    """Candidate (A, -|, _|_, |- + _|_) read positionally as (left, right, middle).

    Returns the candidate and its axiom report; the report, not the
    construction, is the deliverable.
    """
    n = algebra.dim
    star = _tensor_from_pairs(
        n, MIDDLE, lambda i, j: vec_add(algebra.right.pair(i, j), algebra.middle.pair(i, j))
    )
    candidate = BiHomTrialgebra(
        f"{algebra.name}~sum-mr",
        n,
        algebra.left,
        retag(algebra.middle, RIGHT),
        star,
        algebra.alpha,
        algebra.beta,
    )
    return candidate, check_axioms(candidate)


@dataclass(frozen=True)
class CommutatorReport:
    pair: BracketPair
    beta_witnesses: tuple       # [x,y]*b(z) = [x*z, b(y)] + [a(x), y*z]
    alphabeta_witnesses: tuple  # same with ab(z) on the left-hand side


def commutator_construct(algebra: BiHomTrialgebra) -> CommutatorReport:
    """Build x*y = x-|y - y|-x and [x,y] = x_|_y - y_|_x and check the
    displayed Leibniz-type identity in both stated variants."""
    n = algebra.dim
    star = _tensor_from_pairs(
        n, STAR, lambda i, j: vec_sub(algebra.left.pair(i, j), algebra.right.pair(j, i))
    )
    bracket = _tensor_from_pairs(
        n, STAR, lambda i, j: vec_sub(algebra.middle.pair(i, j), algebra.middle.pair(j, i))
    )
    alpha_img = [algebra.alpha.image_of_basis(i) for i in range(n)]
    beta_img = [algebra.beta.image_of_basis(i) for i in range(n)]
    ab_img = [algebra.alpha.apply(beta_img[k]) for k in range(n)]

    def sweep(z_img):
        witnesses = []
        for i in range(n):
            ei = unit_vec(n, i)
            for j in range(n):
                ej = unit_vec(n, j)
                br_ij = bracket.pair(i, j)
                for k in range(n):
                    ek = unit_vec(n, k)
                    lhs = star.bilinear(br_ij, z_img[k])
                    rhs = vec_add(
                        bracket.bilinear(star.bilinear(ei, ek), beta_img[j]),
                        bracket.bilinear(alpha_img[i], star.bilinear(ej, ek)),
                    )
                    if lhs != rhs:
                        witnesses.append((i + 1, j + 1, k + 1, lhs, rhs))
        return tuple(witnesses)

    return CommutatorReport(BracketPair(star, bracket), sweep(beta_img), sweep(ab_img))


# -- total sum and averaging ---------------------------------------------

def bihom_associativity_witnesses(algebra: BiHomAlgebra):
    """Failing triples of (x*y)*b(z) = a(x)*(y*z), 1-based."""
    n = algebra.dim
    mu = algebra.mu
    alpha_img = [algebra.alpha.image_of_basis(i) for i in range(n)]
    beta_img = [algebra.beta.image_of_basis(i) for i in range(n)]
    witnesses = []
    for i in range(n):
        for j in range(n):
            pij = mu.pair(i, j)
            for k in range(n):
                lhs = mu.bilinear(pij, beta_img[k])
                rhs = mu.bilinear(alpha_img[i], mu.pair(j, k))
                if lhs != rhs:
                    witnesses.append((i + 1, j + 1, k + 1, lhs, rhs))
    return tuple(witnesses)


def total_sum(algebra: BiHomTrialgebra):
    """Single product -| + |- + _|_ ; returns the candidate BiHom algebra
    and the witnesses against its BiHom-associativity (empty = holds)."""
    n = algebra.dim
    star = _tensor_from_pairs(
        n,
        STAR,
        lambda i, j: vec_add(
            vec_add(algebra.left.pair(i, j), algebra.right.pair(i, j)),
            algebra.middle.pair(i, j),
        ),
    )
    candidate = BiHomAlgebra(
        f"{algebra.name}~total", n, star, algebra.alpha, algebra.beta
    )
    return candidate, bihom_associativity_witnesses(candidate)


def averaging_check(algebra: BiHomTrialgebra, xi: LinearMap):
    """xi(xi(x)*y) = xi(x)*xi(y) = xi(x*xi(y)) on basis pairs, all products,
    plus commutation with the twists."""
    if xi.dim != algebra.dim:
        raise DimensionMismatch("operator dimension mismatch")
    n = algebra.dim
    witnesses = []
    for name, f in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        if xi.compose(f) != f.compose(xi):
            witnesses.append((f"commute-{name}", None, None))
    xi_img = [xi.image_of_basis(i) for i in range(n)]
    for role in ROLES:
        t = algebra.tensor(role)
        for i in range(n):
            ei = unit_vec(n, i)
            for j in range(n):
                ej = unit_vec(n, j)
                middle_val = t.bilinear(xi_img[i], xi_img[j])
                first = xi.apply(t.bilinear(xi_img[i], ej))
                second = xi.apply(t.bilinear(ei, xi_img[j]))
                if first != middle_val:
                    witnesses.append((f"{role}:first", i + 1, j + 1))
                if middle_val != second:
                    witnesses.append((f"{role}:second", i + 1, j + 1))
    return not witnesses, tuple(witnesses)


def averaging_check_single(mu: MulTensor, f: LinearMap):
    """Averaging identity of a map with respect to one product."""
    n = mu.dim
    img = [f.image_of_basis(i) for i in range(n)]
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(n):
            ej = unit_vec(n, j)
            middle_val = mu.bilinear(img[i], img[j])
            if f.apply(mu.bilinear(img[i], ej)) != middle_val:
                return False, (f"first", i + 1, j + 1)
            if f.apply(mu.bilinear(ei, img[j])) != middle_val:
                return False, (f"second", i + 1, j + 1)
    return True, None


def averaging_induced(algebra: BiHomAlgebra) -> tuple:
    """From averaging alpha, beta on (A, .), induce
    x -| y = a(x).y,  x |- y = x.b(y),  x _|_ y = a(x).b(y).

    Raises PreconditionFailed naming the first failing averaging identity.
    """
    for name, f in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        ok, witness = averaging_check_single(algebra.mu, f)
        if not ok:
            raise PreconditionFailed(
                f"{name} is not an averaging operator: fails {witness[0]} identity "
                f"at basis pair ({witness[1]}, {witness[2]})"
            )
    n = algebra.dim
    mu = algebra.mu
    a_img = [algebra.alpha.image_of_basis(i) for i in range(n)]
    b_img = [algebra.beta.image_of_basis(i) for i in range(n)]
    candidate = BiHomTrialgebra(
        f"{algebra.name}~avg",
        n,
        _tensor_from_pairs(n, LEFT, lambda i, j: mu.bilinear(a_img[i], unit_vec(n, j))),
        _tensor_from_pairs(n, RIGHT, lambda i, j: mu.bilinear(unit_vec(n, i), b_img[j])),
        _tensor_from_pairs(n, MIDDLE, lambda i, j: mu.bilinear(a_img[i], b_img[j])),
        algebra.alpha,
        algebra.beta,
    )
    return candidate, check_axioms(candidate)
