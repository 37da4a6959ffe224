"""Independent brute-force oracles used to cross-check the package.

None of these share logic with the code paths they validate: squares are
decided by integer square roots or by squaring every residue, comodule
decompositions by enumerating line closures over a finite field, and
extension spaces by solving for all perturbed coactions modulo change of
splitting.
"""

from __future__ import annotations

import math
from itertools import product

from superhopf import superlin
from superhopf.dgxrep import IndecompLabel, Supercomodule, standard_object


# ---------------------------------------------------------------------------
# squares


def rational_is_square(num: int, den: int) -> bool:
    if num * den < 0:
        return False
    num, den = abs(num), abs(den)
    g = math.gcd(num, den)
    num //= g
    den //= g
    rn, rd = math.isqrt(num), math.isqrt(den)
    return rn * rn == num and rd * rd == den


def mod_p_squares(p: int):
    return {(a * a) % p for a in range(p)}


# ---------------------------------------------------------------------------
# comodule label multiset by invariant-subspace enumeration (prime fields)


def _coaction_operators(m: Supercomodule):
    """T_a for each algebra basis monomial a = (chars, eps) appearing."""
    ops = {}
    field = m.field
    for i in range(m.dim):
        for j, c, chars, eps in m.coaction[i]:
            key = (chars, eps)
            mat = ops.setdefault(key, [[field.zero()] * m.dim for _ in range(m.dim)])
            mat[j][i] = mat[j][i] + c
    return ops


def _span_append(basis, vec, field):
    """Extend an echelonized basis (list of rows with pivot bookkeeping) by a
    vector; returns True when the vector was new."""
    v = list(vec)
    for pivot, row in basis:
        if not v[pivot].is_zero():
            coef = v[pivot]
            v = [a - coef * b for a, b in zip(v, row)]
    for k, a in enumerate(v):
        if not a.is_zero():
            inv = a.inverse()
            v = [x * inv for x in v]
            basis.append((k, v))
            return True
    return False


def _closure(m: Supercomodule, ops, vec, dim_cap=None):
    """Echelon basis of the smallest coaction-stable subspace containing vec;
    stops early (returning None) when a dim_cap is exceeded."""
    field = m.field
    basis = []
    _span_append(basis, vec, field)
    frontier = [vec]
    while frontier:
        nxt = []
        for v in frontier:
            for mat in ops.values():
                img = [sum((mat[r][c] * v[c] for c in range(m.dim)), start=field.zero())
                       for r in range(m.dim)]
                if any(not x.is_zero() for x in img) and _span_append(basis, img, field):
                    nxt.append(img)
                    if dim_cap is not None and len(basis) > dim_cap:
                        return None
        frontier = nxt
    return basis


def _all_homogeneous_vectors(m: Supercomodule, p: int):
    """One representative per homogeneous line (first nonzero coordinate 1)."""
    field = m.field
    for parity in (0, 1):
        idx = [i for i in range(m.dim) if m.parities[i] == parity]
        if not idx:
            continue
        for first in range(len(idx)):
            tail = idx[first + 1:]
            for coeffs in product(range(p), repeat=len(tail)):
                vec = [field.zero()] * m.dim
                vec[idx[first]] = field.one()
                for pos, c in zip(tail, coeffs):
                    if c:
                        vec[pos] = field.from_int(c)
                yield parity, vec


def _line_label(m: Supercomodule, parity, vec):
    """Label of a one-dimensional subcomodule K*vec with rho(vec) = vec (x) h."""
    image = m.coact_vector(vec)
    char = None
    for (j, chars, eps), c in image.items():
        if eps != 0:
            return None
        char = chars
    return IndecompLabel("S", char, parity == 1)


def _two_dim_label(m: Supercomodule, basis_rows):
    """Label of a simple two-dimensional subcomodule given by its echelon
    basis: reads off the diagonal character of the even-side vector."""
    alg = m.algebra
    field = m.field
    vecs = [row for _, row in basis_rows]
    pars = []
    for v in vecs:
        par = None
        for i, c in enumerate(v):
            if not c.is_zero():
                par = m.parities[i]
                break
        pars.append(par)
    # diagonal characters: rho(v) = v (x) h + (other) (x) h' z
    for v, par in zip(vecs, pars):
        image = m.coact_vector(v)
        diag = None
        for (j, chars, eps), c in image.items():
            if eps == 0:
                coords = superlin.in_span(vecs, _unit_like(m, j, c, field), field)
                diag = chars
        # the vector of parity epsilon plays the even slot of L(h)
    # identify h as the diagonal character on the vector whose coaction's
    # z-component points at the other vector with the shifted character g*h
    for v, par in zip(vecs, pars):
        image = m.coact_vector(v)
        diag = [chars for (j, chars, eps), c in image.items() if eps == 0]
        zchars = [chars for (j, chars, eps), c in image.items() if eps == 1]
        if len(set(diag)) == 1 and zchars:
            h = diag[0]
            gh = alg.group.reduce(
                tuple(a + b for a, b in zip(h, alg.g.exps))
            )
            if all(z == gh for z in zchars):
                return IndecompLabel("L", h, par == 1)
    return None


def _unit_like(m, j, c, field):
    out = [field.zero()] * m.dim
    out[j] = c
    return out


def comodule_label_multiset_bruteforce(m: Supercomodule, p: int):
    """Label multiset of a comodule over F_p by exhaustive enumeration.

    Simple subcomodules are found as minimal closures of homogeneous lines;
    the quotient by their sum (the socle) is semisimple here, and each of its
    constituents matches the top of one injective hull in the socle.
    The result is canonicalized with the same label identifications that hold
    by explicit isomorphism (L(h) = Pi L(gh) for two-dimensional simples).
    """
    from superhopf.dgxrep import canonical_label

    alg = m.algebra
    field = m.field
    labels = []
    socle_rows = []
    ops = _coaction_operators(m)
    simples = []
    seen = set()
    for parity, vec in _all_homogeneous_vectors(m, p):
        closure = _closure(m, ops, vec, dim_cap=2)
        if closure is None:
            continue
        key = frozenset((pivot, tuple(str(c) for c in row)) for pivot, row in closure)
        if key in seen:
            continue
        seen.add(key)
        if len(closure) == 1:
            label = _line_label(m, parity, closure[0][1])
            if label is not None:
                simples.append((label, closure))
        elif len(closure) == 2:
            # minimal iff it contains no invariant line; lines inside were
            # already enumerated; verify minimality directly
            if _contains_invariant_line(m, ops, closure, p):
                continue
            label = _two_dim_label(m, closure)
            if label is not None:
                simples.append((label, closure))
    # socle = sum of the simples
    socle_basis = []
    for _, closure in simples:
        for _, row in closure:
            _span_append(socle_basis, row, field)
    # count socle constituents per label: dimension bookkeeping per label
    socle_counts = {}
    for label, closure in simples:
        socle_counts.setdefault(str(label), [label, []])
        for _, row in closure:
            _span_append(socle_counts[str(label)][1], row, field)
    # quotient by the socle
    top_counts = {}
    if len(socle_basis) < m.dim:
        q = _quotient_comodule(m, [row for _, row in socle_basis])
        ops_q = _coaction_operators(q)
        seen_q = set()
        for parity, vec in _all_homogeneous_vectors(q, p):
            closure = _closure(q, ops_q, vec, dim_cap=1)
            if closure is None or len(closure) != 1:
                continue
            key = frozenset((pivot, tuple(str(c) for c in row)) for pivot, row in closure)
            if key in seen_q:
                continue
            seen_q.add(key)
            label = _line_label(q, parity, closure[0][1])
            if label is not None:
                top_counts.setdefault(str(label), [label, []])
                _span_append(top_counts[str(label)][1], closure[0][1], field)
    # match: each top constituent Pi^s S(gh) pairs with an injective hull over
    # the socle constituent Pi^{s+1} S(h)
    for key, (label, basis) in top_counts.items():
        count = len(basis)
        h = alg.group.reduce(tuple(a - b for a, b in zip(label.char, alg.g.exps)))
        hull_label = IndecompLabel("L", h, not label.shifted)
        socle_key = str(IndecompLabel("S", h, not label.shifted))
        entry = socle_counts.get(socle_key)
        if entry is None or len(entry[1]) < count:
            raise AssertionError("top constituent without matching socle line")
        for _ in range(count):
            entry[1].pop()
            labels.append(canonical_label(alg, hull_label))
    for key, (label, basis) in socle_counts.items():
        dim = 2 if label.kind == "L" else 1
        if len(basis) % dim:
            raise AssertionError("isotypic span not a multiple of the label dimension")
        for _ in range(len(basis) // dim):
            labels.append(canonical_label(alg, label))
    return sorted(str(l) for l in labels)


def _contains_invariant_line(m, ops, closure, p):
    """Graded invariant lines only: each closure basis row is homogeneous and
    spans the lone candidate line of its parity (inhomogeneous stable lines,
    which exist inside simple two-dimensional blocks, are not graded
    subcomodules and must not disqualify them)."""
    field = m.field
    for _, vec in closure:
        stable = True
        for mat in ops.values():
            img = [sum((mat[r][c2] * vec[c2] for c2 in range(m.dim)), start=field.zero())
                   for r in range(m.dim)]
            if superlin.in_span([vec], img, field) is None:
                stable = False
                break
        if stable:
            return True
    return False


def _quotient_comodule(m: Supercomodule, sub_vectors):
    """Quotient of m by the subcomodule spanned by sub_vectors."""
    field = m.field
    reduced, pivots = superlin.row_reduce([v[:] for v in sub_vectors], field)
    free = [c for c in range(m.dim) if c not in pivots]

    def project(vec):
        v = list(vec)
        for i, pc in enumerate(pivots):
            if not v[pc].is_zero():
                coef = v[pc]
                v = [a - coef * b for a, b in zip(v, reduced[i])]
        return [v[c] for c in free]

    parities = tuple(m.parities[c] for c in free)
    rows = []
    for c in free:
        image = m.coact_vector([field.one() if i == c else field.zero()
                                for i in range(m.dim)])
        per_mono = {}
        for (j, chars, eps), coef in image.items():
            vec = per_mono.setdefault((chars, eps), [field.zero()] * m.dim)
            vec[j] = vec[j] + coef
        row = []
        for (chars, eps), vec in per_mono.items():
            pv = project(vec)
            for t, coef in enumerate(pv):
                if not coef.is_zero():
                    row.append((t, coef, chars, eps))
        rows.append(row)
    return Supercomodule(m.algebra, parities, rows)


# ---------------------------------------------------------------------------
# Ext^1 by enumerating perturbed coactions modulo change of splitting


def ext1_bruteforce(algebra, s: IndecompLabel, t: IndecompLabel) -> int:
    """dim Ext^1(S, T): solve for all even coaction perturbations delta on
    T (+) S satisfying counit, parity and coassociativity (cocycles), modulo
    those induced by a change of splitting (coboundaries)."""
    field = algebra.field
    S = standard_object(algebra, s)
    T = standard_object(algebra, t)
    nS, nT = S.dim, T.dim
    chars = sorted({ch for row in list(S.coaction) + list(T.coaction) for _, _, ch, _ in row})
    amons = [(ch, e) for ch in chars for e in (0, 1)]
    amon_index = {am: k for k, am in enumerate(amons)}
    nvar = nS * nT * len(amons)

    def var(i_s, j_t, a_idx):
        return (i_s * nT + j_t) * len(amons) + a_idx

    rows = []
    for i in range(nS):
        for j in range(nT):
            for a_idx, (ch, e) in enumerate(amons):
                if (T.parities[j] + e - S.parities[i]) % 2:
                    row = [field.zero()] * nvar
                    row[var(i, j, a_idx)] = field.one()
                    rows.append(row)
    for i in range(nS):
        for j in range(nT):
            row = [field.zero()] * nvar
            touched = False
            for a_idx, (ch, e) in enumerate(amons):
                if e == 0:
                    row[var(i, j, a_idx)] = field.one()
                    touched = True
            if touched:
                rows.append(row)
    eq = {}

    def eqrow(key):
        if key not in eq:
            eq[key] = [field.zero()] * nvar
        return eq[key]

    for i in range(nS):
        for j in range(nT):
            for a_idx, (ch, e) in enumerate(amons):
                mono = algebra.monomial(ch, eps=e)
                for (m1, m2), c in algebra.delta_monomial(mono).terms.items():
                    key = (i, j, m1[0], m1[2], m2[0], m2[2])
                    row = eqrow(key)
                    row[var(i, j, a_idx)] = row[var(i, j, a_idx)] - c
        for j in range(nT):
            for a_idx, (ch, e) in enumerate(amons):
                for t_j, c, ch2, e2 in T.coaction[j]:
                    key = (i, t_j, ch2, e2, ch, e)
                    row = eqrow(key)
                    row[var(i, j, a_idx)] = row[var(i, j, a_idx)] + c
        for s_i, c, ch2, e2 in S.coaction[i]:
            for j in range(nT):
                for a_idx, (ch, e) in enumerate(amons):
                    key = (i, j, ch, e, ch2, e2)
                    row = eqrow(key)
                    row[var(s_i, j, a_idx)] = row[var(s_i, j, a_idx)] + c
    rows.extend(eq.values())
    cocycles = superlin.kernel_basis(rows, field) if rows else []
    if not cocycles:
        return 0
    cob = []
    for i0 in range(nS):
        for j0 in range(nT):
            if (T.parities[j0] - S.parities[i0]) % 2:
                continue
            vec = [field.zero()] * nvar
            for t_j, c, ch, e in T.coaction[j0]:
                k = var(i0, t_j, amon_index[(ch, e)])
                vec[k] = vec[k] + c
            for i in range(nS):
                for s_i, c, ch, e in S.coaction[i]:
                    if s_i == i0:
                        k = var(i, j0, amon_index[(ch, e)])
                        vec[k] = vec[k] - c
            cob.append(vec)
    dim_total = superlin.rank([r[:] for r in cob + cocycles], field)
    dim_b = superlin.rank([r[:] for r in cob], field) if cob else 0
    return dim_total - dim_b
