"""Exact symbolic layer: deformed fermion operators and module checks.

Basis states of the single wedge space are bit masks over the barred
alphabet (bit n-j holds row j-bar, matching the crystal ids); the doubled
space indexes pairs of masks, low bits first.  Creation and annihilation
carry the usual fermionic phase over the lower bits; the diagonal gauge
operators carry the deformation parameter of the middle nodes.

On top of the raw operators the module builds the full generator family
for any of the seven labelings, checks the defining relations and the
bilinear-form compatibility exactly, extracts the modified root operators
weight space by weight space, and compares their specialization at qs = 0
with the combinatorial crystal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import crystal as crys
from .cartan import AffineType, DOUBLE, FORK, SINGLE, CartanData, cartan_data, \
    fundamental_weight_cl
from .laurent import LaurentScalar, RationalScalar, qfactorial

_ZERO = RationalScalar.zero()
_ONE = RationalScalar.one()


def _rq(v) -> RationalScalar:
    return v if isinstance(v, RationalScalar) else RationalScalar(v)


class SparseOperator:
    """Sparse exact matrix acting on column vectors indexed 0..dim-1."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries=None):
        self.dim = dim
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                v = _rq(v)
                if not v.is_zero:
                    self.entries[(r, c)] = v

    @classmethod
    def identity(cls, dim: int) -> "SparseOperator":
        out = cls(dim)
        out.entries = {(i, i): _ONE for i in range(dim)}
        return out

    @classmethod
    def diagonal(cls, dim: int, values) -> "SparseOperator":
        out = cls(dim)
        for i, v in enumerate(values):
            v = _rq(v)
            if not v.is_zero:
                out.entries[(i, i)] = v
        return out

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, v) -> "SparseOperator":
        v = _rq(v)
        out = SparseOperator(self.dim)
        if v.is_zero:
            return out
        out.entries = {rc: val * v for rc, val in self.entries.items()}
        return out

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        out = SparseOperator(self.dim)
        e = dict(self.entries)
        for rc, v in other.entries.items():
            s = e.get(rc)
            s = v if s is None else s + v
            if s.is_zero:
                e.pop(rc, None)
            else:
                e[rc] = s
        out.entries = e
        return out

    def __neg__(self) -> "SparseOperator":
        out = SparseOperator(self.dim)
        out.entries = {rc: -v for rc, v in self.entries.items()}
        return out

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        return self + (-other)

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        by_col = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        out = {}
        for (r2, c2), v2 in other.entries.items():
            for r1, v1 in by_col.get(r2, ()):
                key = (r1, c2)
                s = out.get(key)
                p = v1 * v2
                s = p if s is None else s + p
                if s.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        op = SparseOperator(self.dim)
        op.entries = out
        return op

    def power(self, k: int) -> "SparseOperator":
        out = SparseOperator.identity(self.dim)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "SparseOperator":
        out = SparseOperator(self.dim)
        out.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return out

    def apply(self, vec: dict) -> dict:
        return _apply_fast(self, vec)

    def __eq__(self, other):
        return isinstance(other, SparseOperator) and self.dim == other.dim \
            and self.entries == other.entries

    def __repr__(self):
        return f"SparseOperator(dim={self.dim}, nnz={len(self.entries)})"


def kron(low: SparseOperator, high: SparseOperator) -> SparseOperator:
    """Tensor product; the first factor owns the low index bits."""
    d = low.dim
    out = SparseOperator(d * high.dim)
    for (r1, c1), v1 in low.entries.items():
        for (r2, c2), v2 in high.entries.items():
            out.entries[(r1 + r2 * d, c1 + c2 * d)] = v1 * v2
    return out


def _apply_fast(op: SparseOperator, vec: dict) -> dict:
    by_col = {}
    for (r, c), v in op.entries.items():
        by_col.setdefault(c, []).append((r, v))
    out = {}
    for c, v in vec.items():
        for r, a in by_col.get(c, ()):
            s = out.get(r)
            p = a * v
            s = p if s is None else s + p
            if s.is_zero:
                out.pop(r, None)
            else:
                out[r] = s
    return out


# -- fermionic generators ------------------------------------------------------


def _bit(n: int, j: int) -> int:
    return n - j


def _phase(state: int, bit: int) -> int:
    mask = (1 << bit) - 1
    return -1 if bin(state & mask).count("1") % 2 else 1


def psi(n: int, j: int) -> SparseOperator:
    """Creation at row j-bar with the fermionic phase over lower bits."""
    b = _bit(n, j)
    out = SparseOperator(1 << n)
    for s in range(1 << n):
        if not (s >> b) & 1:
            out.entries[(s | (1 << b), s)] = _rq(_phase(s, b))
    return out


def psi_star(n: int, j: int) -> SparseOperator:
    """Annihilation at row j-bar, adjoint phase convention."""
    b = _bit(n, j)
    out = SparseOperator(1 << n)
    for s in range(1 << n):
        if (s >> b) & 1:
            out.entries[(s & ~(1 << b), s)] = _rq(_phase(s, b))
    return out


def omega(n: int, j: int, unit: int, power: int = 1) -> SparseOperator:
    """Diagonal gauge operator: qs^(unit*power*(m_j - 1)) on each state."""
    b = _bit(n, j)
    out = SparseOperator(1 << n)
    for s in range(1 << n):
        m = (s >> b) & 1
        out.entries[(s, s)] = _rq(LaurentScalar.qs(unit * power * (m - 1)))
    return out


def parity(n: int) -> SparseOperator:
    """Fermion parity (-1)^(occupation count), the Klein twist factor."""
    out = SparseOperator(1 << n)
    for s in range(1 << n):
        out.entries[(s, s)] = _rq(1 if bin(s).count("1") % 2 == 0 else -1)
    return out


def clifford_relation_checks(n: int, unit: int):
    """Exact checks of the generator relations on the 2^n-dimensional space."""
    checks = []
    dim = 1 << n
    q = LaurentScalar.qs(unit)
    qinv = LaurentScalar.qs(-unit)
    denom = RationalScalar(q - qinv)
    for a in range(1, n + 1):
        pa, psa = psi(n, a), psi_star(n, a)
        oa = omega(n, a, unit)
        oai = omega(n, a, unit, power=-1)
        checks.append((f"omega({a}) invertible", (oa @ oai) == SparseOperator.identity(dim)))
        lhs = pa @ psa
        rhs = (oa.scale(RationalScalar(q)) - oai.scale(RationalScalar(qinv))).scale(denom.inverse())
        checks.append((f"psi({a})psi*({a}) diagonal identity", lhs == rhs))
        lhs = psa @ pa
        rhs = (oa - oai).scale(-denom.inverse())
        checks.append((f"psi*({a})psi({a}) diagonal identity", lhs == rhs))
        for b in range(1, n + 1):
            pb, psb = psi(n, b), psi_star(n, b)
            checks.append((f"psi({a})psi({b}) anticommute",
                           (pa @ pb + pb @ pa).is_zero))
            checks.append((f"psi*({a})psi*({b}) anticommute",
                           (psa @ psb + psb @ psa).is_zero))
            if a != b:
                checks.append((f"psi({a})psi*({b}) anticommute",
                               (pa @ psb + psb @ pa).is_zero))
            ob = omega(n, b, unit)
            obi = omega(n, b, unit, power=-1)
            scale = RationalScalar(LaurentScalar.qs(unit if a == b else 0))
            checks.append((f"omega({b})psi({a}) gauge",
                           (ob @ pa @ obi) == pa.scale(scale)))
            checks.append((f"omega({b})psi*({a}) gauge",
                           (ob @ psa @ obi) == psa.scale(scale.inverse())))
    return checks


# -- the generator family ------------------------------------------------------


@dataclass
class Representation:
    """Generator matrices for one labeling on the wedge space or its square."""

    type: AffineType
    cd: CartanData
    copies: int  # 1 or 2
    dim: int
    e: dict
    f: dict
    t: dict
    tinv: dict
    elements: list = field(repr=False)  # basis index -> crystal element
    weights: list = field(repr=False)  # basis index -> coroot pairings

    def q_i(self, i: int) -> LaurentScalar:
        return LaurentScalar.qs(self.cd.qi_exp[i])


def _klein_target(t: AffineType) -> int | None:
    """End node whose generators get the fermion-parity twist.

    Two remote odd generators anticommute; composing one short end with the
    parity operator restores the required commutation without touching any
    relation local to a single end.  Only configurations with a short end
    facing another non-fork end need it, and only on one side.
    """
    d0, dn = t.diamond
    if d0 == SINGLE and dn in (SINGLE, DOUBLE):
        return 0
    if dn == SINGLE and d0 == DOUBLE:
        return t.n
    return None


def _end_ops_single(t: AffineType, cd: CartanData):
    """Raw end-node operators on the single space (no doubled ends here)."""
    n = t.n
    unit = cd.qi_exp[1]
    ops = {}
    q0 = LaurentScalar.qs(cd.qi_exp[0])
    qn = LaurentScalar.qs(cd.qi_exp[n])
    if t.end0 == SINGLE:
        ops[0] = (psi(n, 1), psi_star(n, 1),
                  omega(n, 1, unit).scale(RationalScalar(q0)),
                  omega(n, 1, unit, power=-1).scale(RationalScalar(q0).inverse()))
    elif t.end0 == FORK:
        o = omega(n, 1, unit) @ omega(n, 2, unit)
        oi = omega(n, 1, unit, power=-1) @ omega(n, 2, unit, power=-1)
        ops[0] = (psi(n, 1) @ psi(n, 2), psi_star(n, 2) @ psi_star(n, 1),
                  o.scale(RationalScalar(q0)), oi.scale(RationalScalar(q0).inverse()))
    if t.end_n == SINGLE:
        ops[n] = (psi_star(n, n), psi(n, n),
                  omega(n, n, unit, power=-1).scale(RationalScalar(qn).inverse()),
                  omega(n, n, unit).scale(RationalScalar(qn)))
    elif t.end_n == FORK:
        o = omega(n, n, unit, power=-1) @ omega(n, n - 1, unit, power=-1)
        oi = omega(n, n, unit) @ omega(n, n - 1, unit)
        ops[n] = (psi_star(n, n) @ psi_star(n, n - 1), psi(n, n - 1) @ psi(n, n),
                  o.scale(RationalScalar(qn).inverse()), oi.scale(RationalScalar(qn)))
    target = _klein_target(t)
    if target in ops:
        p = parity(n)
        e, f, tt, ti = ops[target]
        ops[target] = (e @ p, p @ f, tt, ti)
    return ops


def representation(t: AffineType) -> Representation:
    """Generator matrices realizing the labeling on the appropriate space."""
    cd = cartan_data(t)
    n = t.n
    unit = cd.qi_exp[1]
    single = {}
    for i in range(1, n):
        e_i = psi(n, i + 1) @ psi_star(n, i)
        # creation factor first; the anticommutation phase then makes the
        # string identity with e_i exact
        f_i = psi(n, i) @ psi_star(n, i + 1)
        t_i = omega(n, i + 1, unit) @ omega(n, i, unit, power=-1)
        ti_i = omega(n, i + 1, unit, power=-1) @ omega(n, i, unit)
        single[i] = (e_i, f_i, t_i, ti_i)
    single.update(_end_ops_single(t, cd))

    if not t.doubled:
        dim = 1 << n
        e = {i: single[i][0] for i in range(n + 1)}
        f = {i: single[i][1] for i in range(n + 1)}
        tt = {i: single[i][2] for i in range(n + 1)}
        tinv = {i: single[i][3] for i in range(n + 1)}
        elements = [crys.BinaryVector.from_id(n, v) for v in range(dim)]
    else:
        dim = 1 << (2 * n)
        half = 1 << n
        ident = SparseOperator.identity(half)
        e, f, tt, tinv = {}, {}, {}, {}
        for i in range(n + 1):
            if (i == 0 and t.end0 == DOUBLE) or (i == n and t.end_n == DOUBLE):
                q_end = RationalScalar(LaurentScalar.qs(cd.qi_exp[i]))
                if i == 0:
                    e[i] = kron(psi(n, 1), psi(n, 1))
                    f[i] = kron(psi_star(n, 1), psi_star(n, 1))
                    o2 = omega(n, 1, unit, power=2)
                    o2i = omega(n, 1, unit, power=-2)
                    tt[i] = kron(o2, o2).scale(q_end)
                    tinv[i] = kron(o2i, o2i).scale(q_end.inverse())
                else:
                    e[i] = kron(psi_star(n, n), psi_star(n, n))
                    f[i] = kron(psi(n, n), psi(n, n))
                    o2 = omega(n, n, unit, power=2)
                    o2i = omega(n, n, unit, power=-2)
                    tt[i] = kron(o2i, o2i).scale(q_end.inverse())
                    tinv[i] = kron(o2, o2).scale(q_end)
            else:
                e1, f1, t1, ti1 = single[i]
                e[i] = kron(e1, ti1) + kron(ident, e1)
                f[i] = kron(f1, ident) + kron(t1, f1)
                tt[i] = kron(t1, t1)
                tinv[i] = kron(ti1, ti1)
        elements = [crys.BinaryMatrix.from_id(n, v) for v in range(dim)]
    weights = [crys.weight(t, el) for el in elements]
    return Representation(type=t, cd=cd, copies=2 if t.doubled else 1, dim=dim,
                          e=e, f=f, t=tt, tinv=tinv,
                          elements=elements, weights=weights)


# -- relation and polarization suites -----------------------------------------


@dataclass
class Check:
    name: str
    ok: bool


def _qpow(rep: Representation, i: int, k: int) -> RationalScalar:
    return RationalScalar(LaurentScalar.qs(rep.cd.qi_exp[i] * k))


def divided_power(rep: Representation, op: SparseOperator, k: int, i: int) -> SparseOperator:
    fact = RationalScalar(qfactorial(k, rep.cd.qi_exp[i]))
    return op.power(k).scale(fact.inverse())


def verify_relations(rep: Representation, threads: int = 1):
    """Every defining relation, checked as an exact matrix identity."""
    n = rep.type.n
    dim = rep.dim
    ident = SparseOperator.identity(dim)
    a = rep.cd.a
    jobs = []

    def add(name, thunk):
        jobs.append((name, thunk))

    for i in range(n + 1):
        add(f"t({i}) t({i})^-1 = 1",
            lambda i=i: (rep.t[i] @ rep.tinv[i]) == ident)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            add(f"t({i}) t({j}) commute",
                lambda i=i, j=j: (rep.t[i] @ rep.t[j]) == (rep.t[j] @ rep.t[i]))
    for i in range(n + 1):
        for j in range(n + 1):
            add(f"t({i}) e({j}) gauge",
                lambda i=i, j=j: (rep.t[i] @ rep.e[j] @ rep.tinv[i])
                == rep.e[j].scale(_qpow(rep, i, a[i][j])))
            add(f"t({i}) f({j}) gauge",
                lambda i=i, j=j: (rep.t[i] @ rep.f[j] @ rep.tinv[i])
                == rep.f[j].scale(_qpow(rep, i, -a[i][j])))
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                def thunk(i=i):
                    lhs = rep.e[i] @ rep.f[i] - rep.f[i] @ rep.e[i]
                    qi = LaurentScalar.qs(rep.cd.qi_exp[i])
                    qii = LaurentScalar.qs(-rep.cd.qi_exp[i])
                    rhs = (rep.t[i] - rep.tinv[i]).scale(
                        RationalScalar(qi - qii).inverse())
                    return lhs == rhs
                add(f"[e({i}), f({i})] string identity", thunk)
            else:
                add(f"[e({i}), f({j})] = 0",
                    lambda i=i, j=j: (rep.e[i] @ rep.f[j] - rep.f[j] @ rep.e[i]).is_zero)
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                continue
            m = 1 - a[i][j]

            def serre(x, i=i, j=j, m=m):
                total = SparseOperator(dim)
                parts = rep.e if x == "e" else rep.f
                for kk in range(m + 1):
                    term = divided_power(rep, parts[i], kk, i) @ parts[j] \
                        @ divided_power(rep, parts[i], m - kk, i)
                    total = total + (term if kk % 2 == 0 else -term)
                return total.is_zero

            add(f"serre e({i},{j})", lambda i=i, j=j, m=m: serre("e", i, j, m))
            add(f"serre f({i},{j})", lambda i=i, j=j, m=m: serre("f", i, j, m))

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda job: Check(job[0], job[1]()), jobs))
    else:
        results = [Check(name, thunk()) for name, thunk in jobs]
    return results


def verify_weight_compatibility(rep: Representation):
    """Diagonal gauge eigenvalues match the crystal weights exactly."""
    checks = []
    for i in range(rep.type.n + 1):
        expected = SparseOperator.diagonal(
            rep.dim,
            [RationalScalar(LaurentScalar.qs(rep.cd.qi_exp[i] * rep.weights[idx][i]))
             for idx in range(rep.dim)])
        checks.append(Check(f"t({i}) eigenvalues match weights", rep.t[i] == expected))
    return checks


def verify_polarization(rep: Representation):
    """Transpose against the twisted antiautomorphism, entry by entry."""
    checks = []
    for i in range(rep.type.n + 1):
        qinv = _qpow(rep, i, -1)
        eta_e = (rep.tinv[i] @ rep.f[i]).scale(qinv)
        eta_f = (rep.t[i] @ rep.e[i]).scale(qinv)
        checks.append(Check(f"polarization e({i})", rep.e[i].transpose() == eta_e))
        checks.append(Check(f"polarization f({i})", rep.f[i].transpose() == eta_f))
        checks.append(Check(f"polarization t({i})", rep.t[i].transpose() == rep.t[i]))
    return checks


# -- dense exact linear algebra (small blocks) ---------------------------------


def _nullspace(rows, ncols):
    """Basis of the right kernel of the dense matrix (list of row lists)."""
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if not mat[r][c].is_zero:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][c].inverse()
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][c].is_zero:
                factor = mat[r][c]
                mat[r] = [v - factor * w for v, w in zip(mat[r], mat[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [_ZERO] * ncols
        vec[fc] = _ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def _solve_multi(a_rows, b_rows):
    """Solve A X = B for square A; A and B given as row lists."""
    size = len(a_rows)
    width = len(b_rows[0]) if b_rows else 0
    aug = [list(ar) + list(br) for ar, br in zip(a_rows, b_rows)]
    for c in range(size):
        pivot = None
        for r in range(c, size):
            if not aug[r][c].is_zero:
                pivot = r
                break
        if pivot is None:
            raise ArithmeticError("singular change of basis")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [v * inv for v in aug[c]]
        for r in range(size):
            if r != c and not aug[r][c].is_zero:
                factor = aug[r][c]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[c])]
    return [row[size:size + width] for row in aug]


# -- modified root operators from the module -----------------------------------


def kashiwara_operators(rep: Representation, i: int):
    """(raising, lowering) operators extracted per i-weight space."""
    dim = rep.dim
    unit = rep.cd.qi_exp[i]
    ei, fi = rep.e[i], rep.f[i]
    buckets = {}
    for idx in range(dim):
        buckets.setdefault(rep.weights[idx][i], []).append(idx)
    for (r, c) in ei.entries:
        if rep.weights[r][i] != rep.weights[c][i] + 2:
            raise ArithmeticError(f"raising operator {i} is not weight-homogeneous")

    strings = []  # (top_weight m, [w_r dicts for r = 0..m])
    for m, cols in sorted(buckets.items(), reverse=True):
        if m < 0:
            continue
        target = buckets.get(m + 2, [])
        pos_of = {idx: p for p, idx in enumerate(target)}
        rows = [[_ZERO] * len(cols) for _ in target]
        for ci, cidx in enumerate(cols):
            for (r, c), v in ei.entries.items():
                if c == cidx:
                    rows[pos_of[r]][ci] = v
        kernel = _nullspace(rows, len(cols))
        for coeffs in kernel:
            u = {cidx: v for cidx, v in zip(cols, coeffs) if not v.is_zero}
            chain = [u]
            w = u
            for _ in range(m):
                w = _apply_fast(fi, w)
                chain.append(w)
            if _apply_fast(fi, w):
                raise ArithmeticError(f"string through weight {m} does not close")
            vecs = []
            for r, w in enumerate(chain):
                fact = RationalScalar(qfactorial(r, unit)).inverse()
                vecs.append({k: v * fact for k, v in w.items()})
            strings.append((m, vecs))

    total = sum(m + 1 for m, _ in strings)
    if total != dim:
        raise ArithmeticError(f"string count {total} does not fill dimension {dim}")

    # change of basis per weight value
    by_weight = {}
    for sidx, (m, vecs) in enumerate(strings):
        for r, vec in enumerate(vecs):
            by_weight.setdefault(m - 2 * r, []).append((sidx, r, vec))
    et = SparseOperator(dim)
    ft = SparseOperator(dim)
    for lam, cols in by_weight.items():
        idxs = buckets[lam]
        if len(cols) != len(idxs):
            raise ArithmeticError("weight space dimension mismatch")
        a_rows = [[col[2].get(idx, _ZERO) for col in cols] for idx in idxs]
        e_imgs = []
        f_imgs = []
        for sidx, r, _vec in cols:
            m, vecs = strings[sidx]
            e_imgs.append(vecs[r - 1] if r >= 1 else {})
            f_imgs.append(vecs[r + 1] if r + 1 <= m else {})
        for imgs, op, shift in ((e_imgs, et, 2), (f_imgs, ft, -2)):
            rows_out = buckets.get(lam + shift, [])
            if not rows_out or all(not img for img in imgs):
                continue
            b_rows = [[img.get(ridx, _ZERO) for img in imgs] for ridx in rows_out]
            # solve X * A = B  <=>  A^T X^T = B^T
            at = [[a_rows[r][c] for r in range(len(idxs))] for c in range(len(cols))]
            bt = [[b_rows[r][c] for r in range(len(rows_out))] for c in range(len(cols))]
            xt = _solve_multi(at, bt)
            for ci, cidx in enumerate(idxs):
                for ri, ridx in enumerate(rows_out):
                    v = xt[ci][ri]
                    if not v.is_zero:
                        op.entries[(ridx, cidx)] = v
    return et, ft


def crystal_match(rep: Representation, indices=None):
    """Specialize the modified operators at qs = 0 and compare adjacency."""
    t = rep.type
    checks = []
    signs = {}
    for i in (range(t.n + 1) if indices is None else indices):
        et, ft = kashiwara_operators(rep, i)
        for name, op, comb in ((f"e~({i})", et, crys.e_tilde),
                               (f"f~({i})", ft, crys.f_tilde)):
            regular = all(v.is_regular for v in op.entries.values())
            checks.append(Check(f"{name} lattice-regular", regular))
            if not regular:
                continue
            reduced = {}
            for (r, c), v in op.entries.items():
                val = v.eval_at_zero()
                if val:
                    reduced[(r, c)] = val
            adjacency = {}
            for el in rep.elements:
                y = comb(t, i, el)
                if y is not None:
                    adjacency[(y.id, el.id)] = 1
            same = set(reduced) == set(adjacency) and \
                all(abs(v) == 1 for v in reduced.values())
            checks.append(Check(f"{name} matches the crystal adjacency", same))
            cols = {}
            for (r, c), v in reduced.items():
                cols[c] = cols.get(c, 0) + 1
            checks.append(Check(f"{name} single-valued columns",
                                all(v == 1 for v in cols.values())))
            signs[name] = {rc: (1 if v > 0 else -1) for rc, v in reduced.items()}
    return checks, signs


# -- highest vectors and the null-root shift -----------------------------------


def highest_vectors(rep: Representation, weight_vec):
    """Exact basis of the joint kernel of the classical raising operators."""
    idxs = [idx for idx in range(rep.dim) if rep.weights[idx] == tuple(weight_vec)]
    if not idxs:
        return [], idxs
    rows_idx = sorted({r for i in range(1, rep.type.n + 1)
                       for (r, c) in rep.e[i].entries if c in set(idxs)})
    rows = []
    for i in range(1, rep.type.n + 1):
        for ridx in rows_idx:
            rows.append([rep.e[i].entries.get((ridx, c), _ZERO) for c in idxs])
    kernel = _nullspace(rows, len(idxs))
    return [{idx: v for idx, v in zip(idxs, vec) if not v.is_zero}
            for vec in kernel], idxs


def _highest_crystal_ids(rep: Representation, weight_vec):
    out = []
    for el in rep.elements:
        if rep.weights[el.id] == tuple(weight_vec) and \
                all(crys.e_tilde(rep.type, i, el) is None
                    for i in range(1, rep.type.n + 1)):
            out.append(el.id)
    return sorted(out)


def normalized_highest_vector(rep: Representation, k: int, l: int):
    """The classical highest vector with unit coefficient on its leading term.

    Normalized so the coefficient at the canonical (k, l) basis state is 1
    and the coefficients at all other classically-highest states are 0;
    checks that the remainder lies in qs times the lattice.
    """
    t = rep.type
    target = crys.v_kl(t, k, l).id
    wvec = fundamental_weight_cl(t, k)
    kernel, _ = highest_vectors(rep, wvec)
    ids = _highest_crystal_ids(rep, wvec)
    if target not in ids:
        raise ValueError(f"({k},{l}) does not index a classically-highest state")
    if len(kernel) != len(ids):
        raise ArithmeticError(
            f"kernel dimension {len(kernel)} differs from crystal count {len(ids)}")
    order = [target] + [i for i in ids if i != target]
    a_rows = [[vec.get(idx, _ZERO) for vec in kernel] for idx in order]
    unit_col = [[_ONE if r == 0 else _ZERO] for r in range(len(order))]
    coeffs = _solve_multi(a_rows, unit_col)
    out = {}
    for lam, vec in zip((c[0] for c in coeffs), kernel):
        if lam.is_zero:
            continue
        for idx, v in vec.items():
            s = out.get(idx)
            p = lam * v
            s = p if s is None else s + p
            if s.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = s
    ok = all(v.is_regular for v in out.values())
    if ok:
        for idx, v in out.items():
            val = v.eval_at_zero()
            if idx == target and val != 1:
                ok = False
            if idx != target and val != 0:
                ok = False
        ok = ok and out.get(target) == _ONE
    return out, ok, len(kernel)


def apply_extremal_word(rep: Representation, vec: dict, elem, word):
    """Divided-power word application tracking the crystal element."""
    t = rep.type
    for i in word:
        m = crys.weight(t, elem)[i]
        op = divided_power(rep, rep.f[i] if m >= 0 else rep.e[i], abs(m), i)
        vec = _apply_fast(op, vec)
        elem = crys.weyl_reflection(t, i, elem)
    return vec, elem


def verify_null_shift(rep: Representation):
    """Leading-coefficient behavior of the shift word on highest vectors.

    For each middle k the word is applied by divided powers to the
    normalized highest vector; the image must have coefficient +-1 on the
    partner state (the sign is an artifact of the operator ordering
    conventions) and a remainder in qs times the lattice.  When the highest
    weight space is two-dimensional the word must swap the two normalized
    vectors exactly, with one common sign: the two sign combinations are
    then exact eigenvectors with eigenvalues +1 and -1.
    """
    t = rep.type
    if t.diamond != (FORK, DOUBLE):
        raise ValueError("null-root shift check needs the fork-plus-double type")
    n = t.n
    checks = []
    minus_one = -_ONE
    for k in range(1, n):
        word = crys.delta_word(t, k)
        va_el = crys.v_kl(t, k, n - k)
        vb_el = crys.v_kl(t, k, n - k - 1)
        va, ok_a, dim_a = normalized_highest_vector(rep, k, n - k)
        vb, ok_b, _ = normalized_highest_vector(rep, k, n - k - 1)
        checks.append(Check(f"k={k} highest vector ({k},{n-k}) congruent", ok_a))
        checks.append(Check(f"k={k} highest vector ({k},{n-k-1}) congruent", ok_b))
        img_a, end_a = apply_extremal_word(rep, va, va_el, word)
        img_b, end_b = apply_extremal_word(rep, vb, vb_el, word)
        checks.append(Check(f"k={k} word moves the crystal representatives",
                            end_a.id == vb_el.id and end_b.id == va_el.id))
        signs = []
        for name, img, target in ((f"k={k} image of ({k},{n-k})", img_a, vb_el.id),
                                  (f"k={k} image of ({k},{n-k-1})", img_b, va_el.id)):
            lead = img.get(target, _ZERO)
            good = lead in (_ONE, minus_one) and \
                all(v.is_regular for v in img.values()) and \
                all(v.eval_at_zero() == 0 for idx, v in img.items() if idx != target)
            signs.append(lead)
            checks.append(Check(f"{name} is a signed unit leading term", good))
        if dim_a == 2:
            sign = signs[0]
            swapped = sign in (_ONE, minus_one) and signs[1] == sign and \
                img_a == {i: sign * v for i, v in vb.items()} and \
                img_b == {i: sign * v for i, v in va.items()}
            checks.append(Check(f"k={k} signed swap on the two-dimensional space",
                                swapped))
    return checks
