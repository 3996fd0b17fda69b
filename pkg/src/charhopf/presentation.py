"""Presentations (L, N, c, d) of quotients of kX # k[Gamma] and the redbr table."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .grading import Grading, N_default, zdeg_of
from .scalars import INFINITE, multiplicative_order
from .superletters import SuperElement, prec_L_check, superletter_in_L, superword_zdeg
from .words import format_word, is_lyndon, is_shirshov_closed, shirshov


class PresentationError(ValueError):
    pass


class LiftingError(PresentationError):
    pass


class FuelExhausted(RuntimeError):
    """Too many rewriting steps: the presentation data is almost surely invalid."""


def compute_C(L, theta: int | None = None) -> list:
    """Lyndon words uv not in L with u < v in L and Sh(uv) = (u, v)."""
    L = sorted({tuple(u) for u in L})
    if theta is None:
        theta = max((max(u) for u in L), default=1)
    if not is_shirshov_closed(L, theta):
        raise PresentationError("L is not Shirshov closed")
    Lset = set(L)
    out = set()
    for i, u in enumerate(L):
        for v in L[i + 1:]:
            w = u + v
            if w not in Lset and shirshov(w) == (u, v):
                out.add(w)
    return sorted(out)


def compute_D(L, N) -> list:
    return sorted(tuple(u) for u in L if N.get(tuple(u), INFINITE) != INFINITE)


@dataclass
class Violation:
    rule: str  # closure | order | homogeneity | prec_L | lifting | unknown
    datum: str
    message: str

    def to_json(self):
        return {"rule": self.rule, "datum": self.datum, "message": self.message}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def to_json(self):
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"[{v.rule}] {v.datum}: {v.message}" for v in self.violations)


class Presentation:
    """The datum (grading, L, N, c, d) defining the ideal I = I_{L,N,c,d}.

    Missing entries of ``c`` and ``d`` are zero; ``N`` defaults to
    ord q_{u,u} (INFINITE when q_{u,u} has infinite order or order 1).
    """

    def __init__(self, grading: Grading, L, N=None, c=None, d=None, name: str = ""):
        self.grading = grading
        self.name = name
        self.L = tuple(sorted({tuple(u) for u in L}))
        self.Lset = frozenset(self.L)
        auto = {u: N_default(u, grading) for u in self.L}
        self.N = dict(auto)
        for u, n in (N or {}).items():
            self.N[tuple(u)] = n
        zero = SuperElement.zero(grading)
        self.c = {tuple(w): e for w, e in (c or {}).items()}
        self.d = {tuple(u): e for u, e in (d or {}).items()}
        try:
            self.C = compute_C(self.L, grading.theta)
        except PresentationError:
            self.C = []
        self.D = compute_D(self.L, self.N)
        for w in self.C:
            self.c.setdefault(w, zero)
        for u in self.D:
            self.d.setdefault(u, zero)
        self._redbr = {}
        self._lock = threading.RLock()

    @property
    def theta(self) -> int:
        return self.grading.theta

    def N_of(self, u):
        return self.N.get(tuple(u), INFINITE)

    def is_finite(self) -> bool:
        return self.grading.group.is_finite() and all(self.N[u] != INFINITE for u in self.L)

    def generators(self):
        """Ideal generators as (label, SuperElement): [w] - c_w and [u]^N_u - d_u."""
        out = []
        for w in self.C:
            out.append((f"[{format_word(w)}]", _superletter_over_L(self, w) - self.c[w]))
        for u in self.D:
            n = self.N[u]
            U = (u,) * n
            out.append((f"[{format_word(u)}]^{n}", SuperElement.superword(self.grading, U) - self.d[u]))
        return out

    def redbr(self, u, v) -> SuperElement:
        return redbr(tuple(u), tuple(v), self)

    def redbr_table(self) -> dict:
        """All redbr(u, v), u < v in L, computed eagerly (safe to share afterwards)."""
        L = self.L
        pairs = sorted(((u, v) for i, u in enumerate(L) for v in L[i + 1:]),
                       key=lambda p: (len(p[0]) + len(p[1]), len(p[0]), p))
        for u, v in pairs:
            self.redbr(u, v)
        return dict(self._redbr)

    def __repr__(self):
        return f"Presentation({self.name or '?'}, L={[format_word(u) for u in self.L]})"


def _superletter_over_L(p: Presentation, w) -> SuperElement:
    """[w] written over super letters of L (recursively commutated when w is not in L)."""
    return superletter_in_L(p.grading, p.Lset, w)


# -- validation ---------------------------------------------------------------------

def validate(p: Presentation) -> ValidationReport:
    rep = ValidationReport()
    bad = rep.violations
    grading = p.grading
    theta = grading.theta
    non_lyndon = [u for u in p.L if not is_lyndon(u) or any(i < 1 or i > theta for i in u)]
    for u in non_lyndon:
        bad.append(Violation("closure", format_word(u), "not a Lyndon word over the alphabet"))
    if not non_lyndon and not is_shirshov_closed(p.L, theta):
        bad.append(Violation("closure", "L", "L is not Shirshov closed"))
    if non_lyndon or not p.C and bad:
        return rep
    for u in p.L:
        n = p.N[u]
        z = zdeg_of(u, theta)
        order = multiplicative_order(grading.qbichar(z, z))
        if n == INFINITE:
            continue
        if n != order or n < 2:
            bad.append(Violation("order", format_word(u),
                                 f"N_u = {n} but ord q_uu = {order}; only INFINITE may override"))
    for w in p.c:
        if w not in p.C:
            bad.append(Violation("unknown", format_word(w), "redex given for a word outside C(L)"))
    for u in p.d:
        if u not in p.D:
            bad.append(Violation("unknown", format_word(u), "redex given for a word outside D(L)"))
    for w in p.C:
        _check_redex(p, rep, p.c[w], zdeg_of(w, theta), (w,), f"c[{format_word(w)}]", w)
    for u in p.D:
        n = p.N[u]
        z = tuple(n * x for x in zdeg_of(u, theta))
        _check_redex(p, rep, p.d[u], z, (u,) * n, f"d[{format_word(u)}]", u, power=n)
    return rep


def _check_redex(p, rep, e, z, W, label, word, power=1):
    grading = p.grading
    target = grading.ghat_key(z)
    theta = grading.theta
    for (U, _g) in e.terms:
        if grading.ghat_key(superword_zdeg(U, theta)) != target:
            rep.violations.append(Violation("homogeneity", label,
                                            "redex is not homogeneous of the required character degree"))
            break
    if not prec_L_check(e, W, p.L, strict=True):
        rep.violations.append(Violation("prec_L", label, "redex is not a combination of admissible terms"))
    if e and all(not U for (U, _g) in e.terms):
        # pure group-algebra redex lambda (1 - g): only allowed when chi = eps and g != 1
        gw = grading.g_of(z) if not grading.nichols else None
        if not grading.is_trivial_degree(z):
            rep.violations.append(Violation("lifting", label, "nonzero lifting coefficient but chi != epsilon"))
        elif gw is not None and gw == grading.group.identity:
            rep.violations.append(Violation("lifting", label, "nonzero lifting coefficient but g = 1"))


# -- liftings -------------------------------------------------------------------------

def standard_lifting(core: Presentation, lam=None, mu=None, check: bool = True, name: str = "") -> Presentation:
    """c_w = lambda_w (1 - g_w), d_u = mu_u (1 - g_u^N_u) on top of ``core``."""
    grading = core.grading
    theta = grading.theta
    grp = grading.group
    fld = grading.field
    c, d = {}, {}
    for w, lv in (lam or {}).items():
        w = tuple(w)
        if w not in core.C:
            raise LiftingError(f"{format_word(w)} is not in C(L)")
        lv = fld(lv)
        z = zdeg_of(w, theta)
        if lv and check and (grading.g_of(z) == grp.identity or not grading.is_trivial_degree(z)):
            raise LiftingError(f"lambda_{format_word(w)} must vanish (g_w = 1 or chi_w != epsilon)")
        c[w] = _lift_term(grading, lv, grading.g_of(z))
    for u, mv in (mu or {}).items():
        u = tuple(u)
        if u not in core.D:
            raise LiftingError(f"{format_word(u)} is not in D(L)")
        mv = fld(mv)
        n = core.N[u]
        z = tuple(n * x for x in zdeg_of(u, theta))
        if mv and check and (grading.g_of(z) == grp.identity or not grading.is_trivial_degree(z)):
            raise LiftingError(f"mu_{format_word(u)} must vanish (g_u^N = 1 or chi_u^N != epsilon)")
        d[u] = _lift_term(grading, mv, grading.g_of(z))
    merged_c = {**{w: e for w, e in core.c.items()}, **c}
    merged_d = {**{u: e for u, e in core.d.items()}, **d}
    return Presentation(grading, core.L, dict(core.N), merged_c, merged_d, name=name or core.name)


def _lift_term(grading, coeff, g):
    one = SuperElement.scalar(grading, 1)
    return (one - SuperElement.group_element(grading, g)).scale(coeff)


# -- redbr ----------------------------------------------------------------------------

def redbr(u, v, p: Presentation) -> SuperElement:
    """Replacement for [[u], [v]] modulo I, for u < v in L.

    If Sh(uv) = (u, v) this is [uv] (uv in L) or c_uv.  Otherwise, with
    Sh(u) = (u1, u2),
        redbr(u, v) = D_u1(redbr(u2, v)) + q_{u2,v} redbr(u1, v)[u2] - q_{u1,u2} [u2] redbr(u1, v)
    where D_u1 is the q-derivation that replaces the first bracket by redbr.
    """
    key = (u, v)
    memo = p._redbr
    hit = memo.get(key)
    if hit is not None:
        return hit
    if u not in p.Lset or v not in p.Lset:
        raise PresentationError(f"redbr needs words in L, got {format_word(u)}, {format_word(v)}")
    if not u < v:
        raise PresentationError("redbr(u, v) needs u < v")
    with p._lock:
        hit = memo.get(key)
        if hit is not None:
            return hit
        val = _redbr(u, v, p)
        memo[key] = val
        return val


def _redbr(u, v, p):
    grading = p.grading
    theta = grading.theta
    uv = u + v
    if shirshov(uv) == (u, v):
        if uv in p.Lset:
            return SuperElement.superletter(grading, uv)
        return p.c.get(uv, SuperElement.zero(grading))
    if len(u) == 1:
        raise PresentationError("Shirshov decomposition of x_i v must be (x_i, v)")
    u1, u2 = shirshov(u)
    if u1 not in p.Lset or u2 not in p.Lset:
        raise PresentationError("L is not Shirshov closed")
    z1, z2, zv = zdeg_of(u1, theta), zdeg_of(u2, theta), zdeg_of(v, theta)
    r2 = redbr(u2, v, p)
    r1 = redbr(u1, v, p)
    q0 = grading.qbichar(z1, tuple(a + b for a, b in zip(z2, zv)))
    out = _partial(u1, r2, q0, p)
    s2 = SuperElement.superletter(grading, u2)
    out = out + (r1 * s2).scale(grading.qbichar(z2, zv)) - (s2 * r1).scale(grading.qbichar(z1, z2))
    return out


def _partial(u1, r, q0, p):
    """q-derivation of [u1] applied to r, with redbr substituted where it applies."""
    grading = p.grading
    theta = grading.theta
    fld = grading.field
    grp = grading.group
    z1 = zdeg_of(u1, theta)
    S1 = (u1,)
    acc = {}
    from .algebra import add_into
    for (U, g), alpha in r.terms.items():
        if not any(g) and U and U[0] > u1:
            # D(U) = redbr(u1, l1)[l2..ln] + sum_i q_{u1, l1..l_{i-1}} [l1..l_{i-1}] [[u1],[li]] [l_{i+1}..]
            tail = SuperElement.superword(grading, U[1:])
            add_into(acc, (redbr(u1, U[0], p) * tail).terms, alpha)
            prefix_deg = zdeg_of(U[0], theta)
            for i in range(1, len(U)):
                li = U[i]
                zi = zdeg_of(li, theta)
                coeff = alpha * grading.qbichar(z1, prefix_deg)
                qi = grading.qbichar(z1, zi)
                head, rest = U[:i], U[i + 1:]
                add_into(acc, {(head + S1 + (li,) + rest, g): coeff})
                add_into(acc, {(head + (li,) + S1 + rest, g): -coeff * qi})
                prefix_deg = tuple(a + b for a, b in zip(prefix_deg, zi))
        else:
            # [[u1], V g]_{q0} = ([u1] V - q0 chi_u1(g) V [u1]) g
            qq = q0 * grading.chi_eval(z1, g) if any(g) else q0
            add_into(acc, {(S1 + U, g): alpha})
            add_into(acc, {(U + S1, g): -alpha * qq})
    return SuperElement._raw(grading, acc)
