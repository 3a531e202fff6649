"""Concrete modules over the big quantum group at a root of unity.

A WeightModule is an X-graded space with one matrix per generator: E_i, F_i
and the divided powers E_i^(ell_i), F_i^(ell_i).  The torus acts implicitly
through the grading, and the K-binomial elements act on a weight-lam vector
by the exact scalar [<coroot_i, lam> + m over t]_{d_i} evaluated at zeta.

Matrices are built generically (Laurent polynomials in v) whenever possible
and specialized late; divided powers are produced by iterated exact division
E^(a) = E^(a-1) * E / [a], which stays inside the integral lattice.  Modules
obtained by pulling back along the quantum Frobenius, or by quotients, carry
only the specialized layer; tensor products of such modules get their divided
powers from the coproduct expansion of E^(n) in terms of the factors'
divided-power families (cross-checked against the division route in tests).

Explicit Weyl modules are provided for A1, which is where all matrix-level
verification happens; higher-rank types only exercise the combinatorial
layers.
"""

from __future__ import annotations

from .linalg import (
    RowBasis,
    identity,
    kron,
    mat_eq,
    mat_is_zero,
    mat_map,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_sub,
    zeros,
)
from .report import Report
from .rootdata import DotOrbits, EllForm, build_root_datum
from .scalars import LatticeError, qbinom_zeta, qfact, qint


class GenSet:
    """Generator matrices for one scalar layer.

    efam[i][a] is the matrix of E_i^(a) for a = 0..ell_i (efam[i][0] = id,
    efam[i][1] = E_i, efam[i][ell_i] = the divided power); same for ffam.
    """

    __slots__ = ("efam", "ffam")

    def __init__(self, efam, ffam):
        self.efam = efam
        self.ffam = ffam

    def e(self, i):
        return self.efam[i][1]

    def f(self, i):
        return self.ffam[i][1]

    def div_e(self, i):
        return self.efam[i][-1]

    def div_f(self, i):
        return self.ffam[i][-1]


class WeightModule:
    """X-graded module with exact generator matrices."""

    def __init__(self, datum, params, weights, zeta_gens: GenSet,
                 generic_gens: GenSet | None = None, name: str = ""):
        self.datum = datum
        self.params = params
        self.weights = [tuple(w) for w in weights]
        self.z = zeta_gens
        self.g = generic_gens
        self.name = name or f"module(dim={len(self.weights)})"
        self.form = EllForm(datum, params)
        _check_grading(self)

    @property
    def dim(self):
        return len(self.weights)

    def pairing(self, i, b):
        """<coroot_i, weight of basis vector b>."""
        return self.weights[b][i]

    def k_diag_zeta(self, i, power=1):
        """Diagonal matrix of K_i^power at zeta."""
        f = self.params.field
        d = self.params.d[i]
        diag = []
        for b in range(self.dim):
            diag.append(f.zeta(power * d * self.pairing(i, b)))
        return _diag(diag, f.zero)

    def k_diag_generic(self, i, power=1):
        ring = self.params.vring
        d = self.params.d[i]
        diag = [ring.monomial(power * d * self.pairing(i, b)) for b in range(self.dim)]
        return _diag(diag, ring.zero)

    def kbinom_diag(self, i, m, t):
        """Diagonal action of [K_i; m over t]_{d_i} at zeta."""
        ring = self.params.vring
        f = self.params.field
        diag = [qbinom_zeta(self.pairing(i, b) + m, t, self.params.d[i], ring)
                for b in range(self.dim)]
        return _diag(diag, f.zero)

    def weight_class(self, b, sc=False):
        """Class of the b-th basis weight modulo phi(Y) (or phi_sc(X*_sc))."""
        orbits = _class_orbits(self, sc)
        return orbits._coset_rep(self.weights[b])

    def has_generic(self):
        return self.g is not None

    def __repr__(self):
        return f"WeightModule({self.name}, dim={self.dim})"


def _class_orbits(module, sc):
    key = ("_orb_sc" if sc else "_orb")
    orb = getattr(module, key, None)
    if orb is None:
        orb = DotOrbits(module.datum, module.params, sc=sc)
        setattr(module, key, orb)
    return orb


def _diag(entries, zero):
    n = len(entries)
    return [[entries[i] if i == j else zero for j in range(n)] for i in range(n)]


def _check_grading(module):
    """Every nonzero entry must connect weights differing by the right root."""
    datum = module.datum
    params = module.params
    for layer in (module.z, module.g):
        if layer is None:
            continue
        for i in range(datum.rank):
            alpha = datum.alpha[i]
            for a, mat in enumerate(layer.efam[i]):
                _check_shift(module, mat, tuple(a * x for x in alpha), f"E_{i}^({a})")
            for a, mat in enumerate(layer.ffam[i]):
                _check_shift(module, mat, tuple(-a * x for x in alpha), f"F_{i}^({a})")


def _check_shift(module, mat, shift, label):
    for r in range(module.dim):
        for c in range(module.dim):
            if mat[r][c]:
                expected = tuple(w + s for w, s in zip(module.weights[c], shift))
                if module.weights[r] != expected:
                    raise LatticeError(
                        f"{label} entry ({r},{c}) violates the grading on {module.name}")


def divided_power_chain(mat, n_max, d, ring):
    """[mat^a / [a]_d! for a = 0..n_max] by successive exact division."""
    dim = len(mat)
    out = [identity(dim, ring.one, ring.zero)]
    cur = out[0]
    for a in range(1, n_max + 1):
        cur = mat_mul(cur, mat, ring.zero)
        div = qint(a, d, ring)
        new = []
        for r_i, row in enumerate(cur):
            new_row = []
            for c_i, entry in enumerate(row):
                if entry:
                    try:
                        new_row.append(entry.exact_div(div))
                    except Exception as exc:
                        raise LatticeError(
                            f"divided power left the lattice at ({r_i},{c_i}): {exc}"
                        ) from exc
                else:
                    new_row.append(ring.zero)
            new.append(new_row)
        cur = new
        out.append(cur)
    return out


def _specialize(gens: GenSet, field) -> GenSet:
    ev = lambda m: mat_map(m, lambda p: p.eval_zeta())
    return GenSet([[ev(m) for m in fam] for fam in gens.efam],
                  [[ev(m) for m in fam] for fam in gens.ffam])


# ---------------------------------------------------------------------------
# Weyl modules (A1)
# ---------------------------------------------------------------------------

def weyl_module(lam, params, datum=None, name=None) -> WeightModule:
    """Cyclic highest-weight module of dimension lam+1 for A1, built generically.

    Basis v_0..v_lam with v_k of weight lam - k*alpha; F acts down the string
    by [k+1], E is derived from the defining commutator relation, and the
    divided powers come from iterated exact division of powers.
    """
    if datum is None:
        datum = build_root_datum("A1")
    if datum.cartan_type != "A1":
        raise ValueError("explicit Weyl modules are implemented for A1 only")
    lam = lam[0] if isinstance(lam, tuple) else lam
    if lam < 0:
        raise ValueError("highest weight must be dominant")
    ring = params.vring
    d = params.d[0]
    n = lam + 1
    zero = ring.zero
    fmat = zeros(n, n, zero)
    for k in range(lam):
        fmat[k + 1][k] = qint(k + 1, d, ring)
    # E v_{k+1} = c_{k+1} v_k with [k+1] c_{k+1} = [k] c_k + [lam - 2k]
    emat = zeros(n, n, zero)
    c_prev = zero
    for k in range(lam):
        rhs = c_prev * qint(k, d, ring) + qint(lam - 2 * k, d, ring)
        c_next = rhs.exact_div(qint(k + 1, d, ring))
        emat[k][k + 1] = c_next
        c_prev = c_next
    li = params.ell_i[0]
    efam = divided_power_chain(emat, li, d, ring)
    ffam = divided_power_chain(fmat, li, d, ring)
    gens = GenSet([efam], [ffam])
    weights = [(lam - 2 * k,) for k in range(n)]
    module = WeightModule(datum, params, weights, _specialize(gens, params.field),
                          gens, name=name or f"W({lam})")
    # postcondition: the highest-weight vector is killed by E and its divided power
    assert all(not module.z.e(0)[r][0] for r in range(n))
    assert all(not module.z.div_e(0)[r][0] for r in range(n))
    return module


def trivial_module(params, datum=None) -> WeightModule:
    if datum is None:
        datum = build_root_datum("A1")
    ring = params.vring
    r = datum.rank
    li = params.ell_i
    zero_m = [[ring.zero]]
    gens = GenSet([[ [[ring.one]] ] + [zero_m] * li[i] for i in range(r)],
                  [[ [[ring.one]] ] + [zero_m] * li[i] for i in range(r)])
    weights = [(0,) * r]
    return WeightModule(datum, params, weights, _specialize(gens, params.field),
                        gens, name="trivial")


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

def tensor_product(M: WeightModule, N: WeightModule, name=None) -> WeightModule:
    """Tensor product with the coproduct action.

    E acts by E (x) 1 + K (x) E and F by F (x) K^{-1} + 1 (x) F.  When both
    factors carry generic matrices the divided powers are computed by exact
    division of powers; otherwise they come from the coproduct expansion
    E^(n) = sum_{a+b=n} v^{d a b} E^(a) K^b (x) E^(b) (and its F-side mirror)
    applied to the factors' divided-power families at zeta.
    """
    if M.params != N.params or M.datum is not N.datum and M.datum != N.datum:
        raise ValueError("tensor factors must share params and root datum")
    datum, params = M.datum, M.params
    weights = [tuple(a + b for a, b in zip(M.weights[im], N.weights[jn]))
               for im in range(M.dim) for jn in range(N.dim)]
    label = name or f"{M.name}(x){N.name}"
    if M.has_generic() and N.has_generic():
        ring = params.vring
        zero, one = ring.zero, ring.one
        efam, ffam = [], []
        for i in range(datum.rank):
            d = params.d[i]
            li = params.ell_i[i]
            idm = identity(M.dim, one, zero)
            idn = identity(N.dim, one, zero)
            et = mat_sum(kron(M.g.e(i), idn, zero),
                         kron(M.k_diag_generic(i), N.g.e(i), zero))
            ft = mat_sum(kron(M.g.f(i), N.k_diag_generic(i, -1), zero),
                         kron(idm, N.g.f(i), zero))
            efam.append(divided_power_chain(et, li, d, ring))
            ffam.append(divided_power_chain(ft, li, d, ring))
        gens = GenSet(efam, ffam)
        return WeightModule(datum, params, weights, _specialize(gens, params.field),
                            gens, name=label)
    zgens = _tensor_zeta_gens(M, N)
    return WeightModule(datum, params, weights, zgens, None, name=label)


def mat_sum(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _tensor_zeta_gens(M: WeightModule, N: WeightModule) -> GenSet:
    params = M.params
    f = params.field
    zero = f.zero
    efam_out, ffam_out = [], []
    for i in range(M.datum.rank):
        d = params.d[i]
        li = params.ell_i[i]
        efam, ffam = [], []
        for n in range(li + 1):
            acc_e = zeros(M.dim * N.dim, M.dim * N.dim, zero)
            acc_f = zeros(M.dim * N.dim, M.dim * N.dim, zero)
            for a in range(n + 1):
                b = n - a
                coeff = f.zeta(d * a * b)
                # E^(a) K^b on the first factor, E^(b) on the second
                left = mat_mul(M.z.efam[i][a], M.k_diag_zeta(i, b), zero) if b \
                    else M.z.efam[i][a]
                term = kron(left, N.z.efam[i][b], zero)
                acc_e = mat_sum(acc_e, mat_scale(term, coeff))
                # F^(a) on the first factor, F^(b) K^{-a} on the second
                right = mat_mul(N.z.ffam[i][b], N.k_diag_zeta(i, -a), zero) if a \
                    else N.z.ffam[i][b]
                term = kron(M.z.ffam[i][a], right, zero)
                acc_f = mat_sum(acc_f, mat_scale(term, coeff))
            efam.append(acc_e)
            ffam.append(acc_f)
        efam_out.append(efam)
        ffam_out.append(ffam)
    return GenSet(efam_out, ffam_out)


def direct_sum(M: WeightModule, N: WeightModule, name=None) -> WeightModule:
    datum, params = M.datum, M.params
    weights = M.weights + N.weights
    f = params.field
    zero = f.zero

    def block(a, b):
        n1, n2 = len(a), len(b)
        out = zeros(n1 + n2, n1 + n2, zero)
        for r in range(n1):
            for c in range(n1):
                out[r][c] = a[r][c]
        for r in range(n2):
            for c in range(n2):
                out[n1 + r][n1 + c] = b[r][c]
        return out

    efam = [[block(ma, mb) for ma, mb in zip(M.z.efam[i], N.z.efam[i])]
            for i in range(datum.rank)]
    ffam = [[block(ma, mb) for ma, mb in zip(M.z.ffam[i], N.z.ffam[i])]
            for i in range(datum.rank)]
    return WeightModule(datum, params, weights, GenSet(efam, ffam), None,
                        name=name or f"{M.name}(+){N.name}")


# ---------------------------------------------------------------------------
# relation checking
# ---------------------------------------------------------------------------

def relation_check(module: WeightModule) -> Report:
    """Evaluate every defining relation as an exact matrix identity at zeta.

    The K-relations hold structurally through the grading (re-verified), the
    E-F commutator is compared against the K-binomial scalar rule, Serre
    relations are checked for every pair of distinct vertices, and when the
    generic layer is available the divided powers are re-derived from plain
    powers by exact division.
    """
    rep = Report(f"relations[{module.name}]")
    params = module.params
    datum = module.datum
    f = params.field
    zero = f.zero
    try:
        _check_grading(module)
        rep.ok("grading", "all generator entries shift weights by the prescribed roots")
    except LatticeError as exc:
        rep.fail("grading", str(exc), counterexample=str(exc))

    ring = params.vring
    for i in range(datum.rank):
        for j in range(datum.rank):
            lhs = mat_sub(mat_mul(module.z.e(i), module.z.f(j), zero),
                          mat_mul(module.z.f(j), module.z.e(i), zero))
            if i == j:
                d = params.d[i]
                diag = _diag([qint(module.pairing(i, b), d, ring).eval_zeta()
                              for b in range(module.dim)], zero)
                residual = mat_sub(lhs, diag)
            else:
                residual = lhs
            name = f"commutator[E_{i},F_{j}]"
            if mat_is_zero(residual):
                rep.ok(name)
            else:
                rep.fail(name, "nonzero residual matrix",
                         counterexample=_first_nonzero(residual))

    if module.has_generic():
        for i in range(datum.rank):
            d = params.d[i]
            lhs = mat_sub(mat_mul(module.g.e(i), module.g.f(i), ring.zero),
                          mat_mul(module.g.f(i), module.g.e(i), ring.zero))
            diag = _diag([qint(module.pairing(i, b), d, ring)
                          for b in range(module.dim)], ring.zero)
            name = f"commutator-generic[E_{i},F_{i}]"
            if mat_eq(lhs, diag):
                rep.ok(name)
            else:
                rep.fail(name, "generic commutator fails",
                         counterexample=_first_nonzero(mat_sub(lhs, diag)))

    if datum.rank > 1:
        for i in range(datum.rank):
            for j in range(datum.rank):
                if i == j:
                    continue
                for fam, sym in ((module.z.efam, "E"), (module.z.ffam, "F")):
                    name = f"serre[{sym},{i},{j}]"
                    res = _serre_residual(module, fam, i, j)
                    if mat_is_zero(res):
                        rep.ok(name)
                    else:
                        rep.fail(name, "Serre relation fails",
                                 counterexample=_first_nonzero(res))
    else:
        rep.skip("serre", "no distinct vertex pairs in rank 1")

    for i in range(datum.rank):
        li = params.ell_i[i]
        d = params.d[i]
        if module.has_generic():
            fact = qfact(li, d, ring)
            for fam, sym in ((module.g.efam, "E"), (module.g.ffam, "F")):
                power = mat_pow(fam[i][1], li, ring.one, ring.zero)
                scaled = mat_scale(fam[i][li], fact)
                name = f"divided-power[{sym}_{i}]"
                if mat_eq(power, scaled):
                    rep.ok(name, f"{sym}^{li} = [{li}]! * {sym}^({li}) in the localization")
                else:
                    rep.fail(name, "divided power disagrees with plain power",
                             counterexample=_first_nonzero(mat_sub(power, scaled)))
        else:
            # at zeta the plain power must vanish: E^ell = [ell]! E^(ell) and
            # [ell]! (zeta) = 0
            for fam, sym in ((module.z.efam, "E"), (module.z.ffam, "F")):
                power = mat_pow(fam[i][1], li, f.one, zero)
                name = f"power-vanishing[{sym}_{i}]"
                if mat_is_zero(power):
                    rep.ok(name, f"{sym}^{li} = 0 at zeta")
                else:
                    rep.fail(name, f"{sym}^{li} nonzero at zeta",
                             counterexample=_first_nonzero(power))
    rep.ok("k-binomial-rule",
           "K-binomial operators act by the scalar rule by construction (grading)")
    return rep


def _serre_residual(module, fam, i, j):
    params = module.params
    f = params.field
    zero = f.zero
    ring = params.vring
    m = 1 - module.datum.a[i][j]
    dim = module.dim
    acc = zeros(dim, dim, zero)
    xi = fam[i][1]
    xj = fam[j][1]
    for s in range(m + 1):
        r = m - s
        coeff = qbinom_zeta(m, s, params.d[i], ring)
        if s % 2 == 1:
            coeff = -coeff
        term = mat_mul(mat_pow(xi, r, f.one, zero),
                       mat_mul(xj, mat_pow(xi, s, f.one, zero), zero), zero)
        acc = mat_sum(acc, mat_scale(term, coeff))
    return acc


def _first_nonzero(mat):
    for r, row in enumerate(mat):
        for c, x in enumerate(row):
            if x:
                return f"entry ({r},{c}) = {x!r}"
    return "zero"


def corrupt_module(module: WeightModule) -> WeightModule:
    """Deliberately perturb one generator entry; relation_check negative control."""
    f = module.params.field
    z = module.z
    efam = [[[list(row) for row in m] for m in fam] for fam in z.efam]
    ffam = [[[list(row) for row in m] for m in fam] for fam in z.ffam]
    done = False
    for fam in (efam, ffam):
        target = fam[0][1]
        for r in range(module.dim):
            for c in range(module.dim):
                if target[r][c]:
                    target[r][c] = target[r][c] + f.one
                    done = True
                    break
            if done:
                break
        if done:
            break
    if not done:
        raise ValueError("nothing to corrupt: all generators act by zero")
    out = WeightModule.__new__(WeightModule)
    out.datum = module.datum
    out.params = module.params
    out.weights = list(module.weights)
    out.z = GenSet(efam, ffam)
    out.g = None
    out.name = module.name + "+corrupted"
    out.form = module.form
    return out


# ---------------------------------------------------------------------------
# submodules, quotients, composition factors (exact, at zeta)
# ---------------------------------------------------------------------------

class Submodule:
    """Weight-homogeneous subspace closed under all generator matrices."""

    def __init__(self, parent: WeightModule, basis_rows, basis_weights):
        self.parent = parent
        self.basis = basis_rows            # reduced row vectors over the field
        self.basis_weights = basis_weights

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        rb = RowBasis(self.parent.params.field)
        for row in self.basis:
            rb.add(list(row))
        return rb.contains(list(vec))

    def __repr__(self):
        return f"Submodule(dim={self.dim} of {self.parent.name})"


def _weight_components(module, vec):
    """Split a vector into weight-homogeneous components."""
    by_weight = {}
    for idx, x in enumerate(vec):
        if x:
            by_weight.setdefault(module.weights[idx], []).append((idx, x))
    zero = module.params.field.zero
    out = []
    for w, entries in sorted(by_weight.items()):
        comp = [zero] * module.dim
        for idx, x in entries:
            comp[idx] = x
        out.append((w, comp))
    return out


def _generator_matrices(module):
    gens = []
    for i in range(module.datum.rank):
        gens.append(module.z.e(i))
        gens.append(module.z.f(i))
        gens.append(module.z.div_e(i))
        gens.append(module.z.div_f(i))
    return gens


def submodule_closure(module: WeightModule, seeds) -> Submodule:
    """Smallest weight-homogeneous subspace containing seeds, stable under
    all generator matrices."""
    field = module.params.field
    basis = RowBasis(field)
    weights_of_rows = {}
    queue = []
    gens = _generator_matrices(module)

    def push(vec):
        for w, comp in _weight_components(module, vec):
            before = basis.dim
            if basis.add(comp):
                queue.append(comp)
                weights_of_rows[before] = w

    for s in seeds:
        push(list(s))
    while queue:
        vec = queue.pop()
        for g in gens:
            img = [sum((g[r][c] * vec[c] for c in range(module.dim) if vec[c]),
                       field.zero) for r in range(module.dim)]
            if any(img):
                push(img)
    rows = basis.sorted_rows()
    row_weights = []
    for row in rows:
        comps = _weight_components(module, row)
        assert len(comps) == 1
        row_weights.append(comps[0][0])
    return Submodule(module, rows, row_weights)


def maximal_proper_submodule(module: WeightModule) -> Submodule:
    """Sum of the basis-vector closures avoiding the highest-weight line.

    Requires a cyclic module with one-dimensional weight spaces (A1 Weyl
    modules); this is the unique maximal proper submodule.
    """
    counts = {}
    for w in module.weights:
        counts[w] = counts.get(w, 0) + 1
    if any(c > 1 for c in counts.values()):
        raise ValueError("weight spaces must be one-dimensional")
    field = module.params.field
    top = max(range(module.dim), key=lambda b: sum(module.weights[b]))
    basis = RowBasis(field)
    weights = []
    for b in range(module.dim):
        seed = [field.one if k == b else field.zero for k in range(module.dim)]
        closure = submodule_closure(module, [seed])
        hits_top = any(row[top] for row in closure.basis)
        if not hits_top:
            for row, w in zip(closure.basis, closure.basis_weights):
                if basis.add(list(row)):
                    weights.append(w)
    rows = basis.sorted_rows()
    row_weights = []
    for row in rows:
        comps = _weight_components(module, row)
        row_weights.append(comps[0][0])
    return Submodule(module, rows, row_weights)


def submodule_as_module(sub: Submodule, name=None) -> WeightModule:
    """The subspace as a WeightModule in its own basis (zeta layer only)."""
    parent = sub.parent
    field = parent.params.field
    rb = RowBasis(field)
    for row in sub.basis:
        rb.add(list(row))

    def restrict(mat):
        out = []
        for row in sub.basis:
            img = _apply(mat, row, field)
            coords = _coords_in_rowbasis(rb, img, field)
            if coords is None:
                raise LatticeError("subspace is not stable under a generator")
            out.append(coords)
        # rows currently give images of basis vectors in basis coordinates;
        # transpose to act on column vectors
        n = len(sub.basis)
        return [[out[c][r] for c in range(n)] for r in range(n)]

    z = parent.z
    efam = [[restrict(m) for m in fam] for fam in z.efam]
    ffam = [[restrict(m) for m in fam] for fam in z.ffam]
    return WeightModule(parent.datum, parent.params, sub.basis_weights,
                        GenSet(efam, ffam), None,
                        name=name or f"sub({parent.name})")


def quotient_module(module: WeightModule, sub: Submodule, name=None):
    """Quotient by a weight-homogeneous submodule (zeta layer only).

    Returns (quotient module, projection matrix).
    """
    field = module.params.field
    rb = RowBasis(field)
    for row in sub.basis:
        rb.add(list(row))
    pivots = set(rb.pivots)
    free = [j for j in range(module.dim) if j not in pivots]
    # projection: e_j maps to its residual expressed on the free coordinates
    proj_rows = []
    for j in range(module.dim):
        res = rb.reduce([field.one if k == j else field.zero
                         for k in range(module.dim)])
        proj_rows.append([res[fc] for fc in free])
    proj = [[proj_rows[j][r] for j in range(module.dim)] for r in range(len(free))]

    def induced(mat):
        out = zeros(len(free), len(free), field.zero)
        for c_i, j in enumerate(free):
            img = [mat[r][j] for r in range(module.dim)]
            red = rb.reduce(img)
            for r_i, fc in enumerate(free):
                out[r_i][c_i] = red[fc]
        return out

    weights = [module.weights[j] for j in free]
    z = module.z
    efam = [[induced(m) for m in fam] for fam in z.efam]
    ffam = [[induced(m) for m in fam] for fam in z.ffam]
    q = WeightModule(module.datum, module.params, weights, GenSet(efam, ffam),
                     None, name=name or f"{module.name}/sub")
    return q, proj


def _apply(mat, vec, field):
    return [sum((mat[r][c] * vec[c] for c in range(len(vec)) if vec[c]),
                field.zero) for r in range(len(mat))]


def _coords_in_rowbasis(rb: RowBasis, vec, field):
    """Coordinates of vec in the row basis, or None if outside the span."""
    vec = list(vec)
    coords = [field.zero] * rb.dim
    for i, (row, p) in enumerate(zip(rb.rows, rb.pivots)):
        c = vec[p]
        if c:
            coords[i] = c
            for j in range(len(vec)):
                if row[j]:
                    vec[j] = vec[j] - c * row[j]
    if any(vec):
        return None
    return coords


def head_module(module: WeightModule):
    """Unique simple quotient of a cyclic highest-weight module."""
    sub = maximal_proper_submodule(module)
    if sub.dim == 0:
        return module, None
    q, _ = quotient_module(module, sub, name=f"L@{module.name}")
    return q, sub


def simple_module(lam, params, datum=None, name=None) -> WeightModule:
    """L(lam) as the head of the Weyl module (A1)."""
    w = weyl_module(lam, params, datum)
    head, _ = head_module(w)
    head.name = name or f"L({lam if not isinstance(lam, tuple) else lam[0]})"
    return head


def composition_factors(module: WeightModule):
    """Multiset of (highest weight, dimension) of the simple factors.

    Peels highest-weight submodules: take a maximal-weight vector, close it
    up, split off the head of that closure, and recurse on the two smaller
    pieces.  Dimensions strictly decrease, so this terminates.
    """
    factors = []
    _peel(module, factors)
    return sorted(factors)


def _peel(module, factors):
    if module.dim == 0:
        return
    field = module.params.field
    top = max(range(module.dim), key=lambda b: sum(module.weights[b]))
    seed = [field.one if k == top else field.zero for k in range(module.dim)]
    closure = submodule_closure(module, [seed])
    w_mod = submodule_as_module(closure)
    max_sub = maximal_proper_submodule_general(w_mod)
    hw = module.weights[top]
    factors.append((hw, w_mod.dim - max_sub.dim))
    if max_sub.dim:
        _peel(submodule_as_module(max_sub), factors)
    if closure.dim < module.dim:
        quotient, _ = quotient_module(module, closure)
        _peel(quotient, factors)


def maximal_proper_submodule_general(module: WeightModule) -> Submodule:
    """Maximal submodule of a cyclic highest-weight module, via closures of
    the basis lines avoiding the top.  Correct only when weight spaces are
    one-dimensional (a weight-homogeneous subspace is then a coordinate
    subspace), which holds along the A1 Weyl-module peel."""
    counts = {}
    for w in module.weights:
        counts[w] = counts.get(w, 0) + 1
    if any(c > 1 for c in counts.values()):
        raise ValueError("peeling requires one-dimensional weight spaces")
    field = module.params.field
    top = max(range(module.dim), key=lambda b: sum(module.weights[b]))
    basis = RowBasis(field)
    for b in range(module.dim):
        if b == top:
            continue
        seed = [field.one if k == b else field.zero for k in range(module.dim)]
        closure = submodule_closure(module, [seed])
        if not any(row[top] for row in closure.basis):
            for row in closure.basis:
                basis.add(list(row))
    rows = basis.sorted_rows()
    weights = []
    for row in rows:
        comps = _weight_components(module, row)
        weights.append(comps[0][0])
    return Submodule(module, rows, weights)
