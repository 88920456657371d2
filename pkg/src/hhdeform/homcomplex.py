"""The cochain complex Hom(P^n, Algebra) and its cohomology dimensions.

A bimodule map P^n -> Algebra is determined by its value on each
generator, and the value at Generator(n, r, i) must lie in the corner
subspace e_i . Algebra . e_{(i+n-2r) mod m}.  That gives the canonical
basis used everywhere here: generators in their fixed order, corner
monomials in theirs.

The coboundary d^n is computed generically by pushing the generators of
P^{n+1} through the differential; the closed-form dimension tables from
the kernel/image analysis live in the expected_* functions and are used
as comparison data, never as a computation path.
"""

from fractions import Fraction

from . import linalg
from .algebra import AlgebraElement
from .resolution import differential, generators


def hom_space_basis(n, alg):
    """Ordered basis of Hom(P^n, Algebra): (generator, corner monomial)."""
    key = ("hom_basis", n)
    if key in alg.cache:
        return alg.cache[key]
    m = alg.m
    basis = []
    for gen in generators(n, m):
        for mono in alg.corner_basis(gen.i, gen.terminus(m)):
            basis.append((gen, mono))
    alg.cache[key] = basis
    return basis


def hom_dimension(n, alg):
    return len(hom_space_basis(n, alg))


def coboundary_matrix(n, alg):
    """Matrix of f |-> f o d^{n+1}, columns over the basis of Hom(P^n, .),
    rows over the basis of Hom(P^{n+1}, .)."""
    key = ("coboundary", n)
    if key in alg.cache:
        return alg.cache[key]
    m = alg.m
    source = hom_space_basis(n, alg)
    target = hom_space_basis(n + 1, alg)
    target_index = {item: k for k, item in enumerate(target)}
    d = differential(n + 1, alg)
    mat = linalg.Matrix(len(target), len(source))
    for col, (gen0, mono0) in enumerate(source):
        mono_elt = AlgebraElement.of(mono0)
        for gen in generators(n + 1, m):
            acc = alg.zero()
            for left, tgt, right in d.terms(gen):
                if tgt == gen0:
                    acc = acc + alg.multiply(alg.multiply(left, mono_elt), right)
            for mono, c in acc.coeffs.items():
                mat.add_to_entry(target_index[(gen, mono)], col, c)
    alg.cache[key] = mat
    return mat


def kernel_image_dims(n, alg, strict=False):
    """(dim ker d^n, dim im d^{n-1}) by exact rank computation."""
    if strict:
        alg.require_generic()
    dn = coboundary_matrix(n, alg)
    ker = dn.cols - linalg.rank(dn)
    im = linalg.rank(coboundary_matrix(n - 1, alg)) if n >= 1 else 0
    return ker, im


def cohomology_dimension(n, alg, allow_non_generic=False):
    """dim HH^n = dim ker d^n - dim im d^{n-1}."""
    alg.require_generic(allow_non_generic)
    ker, im = kernel_image_dims(n, alg)
    return ker - im


def kernel_basis(n, alg):
    """Reduced-echelon basis of ker d^n, as vectors over hom_space_basis."""
    return linalg.kernel_basis(coboundary_matrix(n, alg))


def image_basis(n, alg):
    """Echelon basis of im d^{n-1} inside Hom(P^n, .); empty for n = 0."""
    if n == 0:
        return []
    reduced = linalg.rref(coboundary_matrix(n - 1, alg).transpose())
    return reduced.to_lists()


# --- closed-form dimension tables, used as comparison data ------------------


def expected_hom_dimension(n, m):
    """Piecewise closed form for dim Hom(P^n, Algebra)."""
    if m <= 2:
        return 4 * (n + 1)
    p, t = divmod(n, m)
    return (4 * p + 4) * m if t == m - 1 else (4 * p + 2) * m


def expected_kernel_dim(n, m):
    """Closed form for dim ker d^n in the generic regime; m >= 2."""
    if m < 2:
        raise ValueError("no closed-form kernel table for m = 1")
    if m == 2:
        if n <= 1:
            return 3
        p = n // 2
        return 2 * (2 * p + 1)
    if n <= 1:
        return m + 1
    p = n // m
    return (2 * p + 1) * m


def expected_image_dim(n, m):
    """Closed form for dim im d^{n-1} in the generic regime; m >= 2."""
    if m < 2:
        raise ValueError("no closed-form image table for m = 1")
    if n == 0:
        return 0
    if m == 2:
        if n == 1:
            return 1
        if n == 2:
            return 5
        k = n - 1
        p = k // 2
        return 2 * (2 * p + 3) if k % 2 == 1 else 2 * (2 * p + 1)
    if n in (1, 2):
        return m - 1
    p = n // m
    return (2 * p + 1) * m


def expected_cohomology_dim(n, m):
    """dim HH^n in the generic regime: m+1, 2, 1, then 0; total m+4."""
    if n == 0:
        return m + 1
    if n == 1:
        return 2
    if n == 2:
        return 1
    return 0
