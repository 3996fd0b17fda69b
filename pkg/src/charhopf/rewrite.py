"""Reduction of super-word combinations to the PBW basis.

Rules, for a presentation with super letters L:

* pair rule: an ascending adjacent pair [u][v] (u < v) becomes
  q_{u,v} [v][u] + redbr(u, v);
* power rule: a run [u]^N_u becomes d_u.

Every right-hand side is smaller in the order that compares length first
and then prefers lexicographically larger super words, so reduction
terminates on valid data.  Terms are processed largest first from a heap,
which merges equal terms before they are rewritten again.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .algebra import SmashElement
from .presentation import FuelExhausted, Presentation
from .scalars import INFINITE
from .superletters import SuperElement, superletter_in_L, superword_length, superword_zdeg

DEFAULT_FUEL = 10 ** 6
ALL = "ALL"
STRATEGIES = ("leftmost", "rightmost")


class PBWMonomial(NamedTuple):
    factors: tuple  # ((u, r), ...) with u strictly decreasing and 0 < r < N_u
    group: tuple

    def superword(self) -> tuple:
        return tuple(u for u, r in self.factors for _ in range(r))

    def degree(self) -> int:
        return sum(len(u) * r for u, r in self.factors)


def _runs(U):
    out = []
    for u, grp in itertools.groupby(U):
        out.append((u, sum(1 for _ in grp)))
    return out


def is_pbw_normal(U, p: Presentation) -> bool:
    for u in U:
        if u not in p.Lset:
            raise ValueError(f"super letter {u} is not in L")
    prev = None
    for u, r in _runs(U):
        if prev is not None and not u < prev:
            return False
        if r >= p.N_of(u):
            return False
        prev = u
    return True


class RewriteSystem:
    """Pair and power rules of a presentation, with per-strategy memo tables."""

    def __init__(self, p: Presentation):
        self.p = p
        self.grading = p.grading
        p.redbr_table()
        self.pair_q = {}
        g = p.grading
        theta = g.theta
        for u in p.L:
            for v in p.L:
                self.pair_q[(u, v)] = g.qbichar(superword_zdeg((u,), theta), superword_zdeg((v,), theta))
        self._memo = {s: {} for s in STRATEGIES}

    def _violation(self, U, strategy):
        """(kind, position) of the rule to apply, or None if U is normal."""
        p = self.p
        n = len(U)
        if strategy == "leftmost":
            run = 1
            for i in range(n - 1):
                a, b = U[i], U[i + 1]
                if a < b:
                    return ("pair", i)
                if a == b:
                    run += 1
                    if run >= p.N_of(a):
                        return ("power", i + 2 - run)
                else:
                    run = 1
            if n == 1 and p.N_of(U[0]) <= 1:
                return ("power", 0)
            return None
        run = 1
        for i in range(n - 1, 0, -1):
            a, b = U[i - 1], U[i]
            if a < b:
                return ("pair", i - 1)
            if a == b:
                run += 1
                if run >= p.N_of(a):
                    return ("power", i - 1)
            else:
                run = 1
        if n == 1 and p.N_of(U[0]) <= 1:
            return ("power", 0)
        return None

    def _step(self, U, kind, i):
        """Terms (V, h) -> coeff that replace the group-free super word U."""
        p = self.p
        grading = self.grading
        theta = grading.theta
        grp = grading.group
        out = {}
        if kind == "pair":
            u, v = U[i], U[i + 1]
            A, B = U[:i], U[i + 2:]
            out[(A + (v, u) + B, grp.identity)] = self.pair_q[(u, v)]
            rhs = p.redbr(u, v)
        else:
            u = U[i]
            n = p.N_of(u)
            A, B = U[:i], U[i + n:]
            rhs = p.d.get(u) or SuperElement.zero(grading)
        zb = superword_zdeg(B, theta) if B else None
        for (W, h), c in rhs.terms.items():
            if B and any(h):
                c = c * grading.chi_eval(zb, h)
            key = (A + W + B, h)
            old = out.get(key)
            if old is None:
                out[key] = c
            else:
                s = old + c
                if s:
                    out[key] = s
                else:
                    del out[key]
        return out

    def reduce_superword(self, U, strategy="leftmost", fuel=DEFAULT_FUEL) -> dict:
        """Normal form of a group-free super word as a term dict."""
        memo = self._memo[strategy]
        hit = memo.get(U)
        if hit is not None:
            return hit
        grp = self.grading.group
        pending = {(U, grp.identity): self.grading.field.one}
        heap = [(-superword_length(U), U, grp.identity)]
        result = {}
        steps = 0
        while heap:
            _, V, g = heapq.heappop(heap)
            c = pending.pop((V, g), None)
            if c is None or not c:
                continue
            known = memo.get(V)
            if known is not None:
                new = {(W, grp.mul(h, g)): d * c for (W, h), d in known.items()}
                _add(result, new)
                continue
            viol = self._violation(V, strategy)
            if viol is None:
                _add(result, {(V, g): c})
                continue
            steps += 1
            if steps > fuel:
                raise FuelExhausted(f"more than {fuel} rewriting steps")
            for (W, h), d in self._step(V, *viol).items():
                key = (W, grp.mul(h, g))
                old = pending.get(key)
                if old is None:
                    pending[key] = d * c
                    heapq.heappush(heap, (-superword_length(W), W, key[1]))
                else:
                    pending[key] = old + d * c
        memo[U] = result
        return result

    def normal_form(self, e, strategy="leftmost", fuel=DEFAULT_FUEL) -> SuperElement:
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        e = self.prepare(e)
        grading = self.grading
        grp = grading.group
        out = {}
        for (U, g), c in e.terms.items():
            nf = self.reduce_superword(U, strategy, fuel)
            if any(g):
                _add(out, {(W, grp.mul(h, g)): d * c for (W, h), d in nf.items()})
            else:
                _add(out, {k: d * c for k, d in nf.items()})
        return SuperElement._raw(grading, out)

    def prepare(self, e) -> SuperElement:
        """Embed SmashElements letter-wise and unfold super letters outside L."""
        if isinstance(e, SmashElement):
            e = SuperElement.from_smash(e)
        Lset = self.p.Lset
        if all(u in Lset for (U, _g) in e.terms for u in U):
            return e
        grading = self.grading
        total = SuperElement.zero(grading)
        for (U, g), c in e.terms.items():
            term = SuperElement.scalar(grading, c)
            for u in U:
                term = term * superletter_in_L(grading, Lset, u)
            total = total + term.times_group(g)
        return total


def _add(acc, terms):
    for k, v in terms.items():
        old = acc.get(k)
        if old is None:
            if v:
                acc[k] = v
        else:
            s = old + v
            if s:
                acc[k] = s
            else:
                del acc[k]


def rewrite_system(p: Presentation) -> RewriteSystem:
    rs = getattr(p, "_rewrite", None)
    if rs is None:
        with p._lock:
            rs = getattr(p, "_rewrite", None)
            if rs is None:
                rs = p._rewrite = RewriteSystem(p)
    return rs


def normal_form(e, p: Presentation, strategy: str = "leftmost", fuel: int = DEFAULT_FUEL) -> SuperElement:
    return rewrite_system(p).normal_form(e, strategy, fuel)


# -- basis ----------------------------------------------------------------------------

def _pbw_words(p: Presentation, budget):
    """Factor sequences of PBW monomials with letter-degree <= budget (None: no cap)."""
    letters = sorted(p.L, reverse=True)

    def rec(i, left):
        if i == len(letters):
            yield ()
            return
        u = letters[i]
        n = p.N_of(u)
        top = n - 1 if n != INFINITE else left // len(u)
        if left is not None:
            top = min(top, left // len(u))
        for r in range(top + 1):
            rest = None if left is None else left - r * len(u)
            for tail in rec(i + 1, rest):
                yield (((u, r),) + tail) if r else tail

    yield from rec(0, budget)


def enumerate_pbw(p: Presentation, max_zdeg=ALL, group_elements=None) -> list:
    """PBW monomials [u1]^r1 ... [ut]^rt g of letter-degree <= max_zdeg.

    With ``ALL`` the whole (finite) basis is listed.  For an infinite group
    the group parts are taken from ``group_elements`` (default: identity
    only, i.e. one representative per coset of the group).
    """
    grp = p.grading.group
    if max_zdeg == ALL:
        if not p.is_finite():
            raise ValueError("the full basis is infinite")
        budget = None
    else:
        budget = int(max_zdeg)
    if group_elements is None:
        group_elements = grp.elements() if grp.is_finite() else [grp.identity]
    words = sorted(_pbw_words(p, budget), key=lambda f: (sum(len(u) * r for u, r in f), f))
    return [PBWMonomial(f, g) for f in words for g in group_elements]


def dimension(p: Presentation):
    grp = p.grading.group
    if not p.is_finite():
        return INFINITE
    total = grp.order()
    for u in p.L:
        total *= p.N[u]
    return total


# -- confluence self-test ---------------------------------------------------------------

@dataclass
class ConfluenceReport:
    trials: int
    mismatches: list = field(default_factory=list)
    not_idempotent: list = field(default_factory=list)
    not_normal: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.not_idempotent or self.not_normal)

    def to_json(self):
        return {"trials": self.trials, "ok": self.ok,
                "mismatches": [str(e) for e in self.mismatches],
                "not_idempotent": [str(e) for e in self.not_idempotent],
                "not_normal": [str(e) for e in self.not_normal]}


def random_element(p: Presentation, rng: random.Random, max_zdeg: int, max_terms: int = 3) -> SuperElement:
    """Sum of a few random super words over L with random group parts and coefficients."""
    grading = p.grading
    grp = grading.group
    fld = grading.field
    total = SuperElement.zero(grading)
    for _ in range(rng.randint(1, max_terms)):
        target = rng.randint(0, max_zdeg)
        U = []
        left = target
        while left > 0:
            choices = [u for u in p.L if len(u) <= left]
            u = rng.choice(choices)
            U.append(u)
            left -= len(u)
        g = tuple(rng.randint(-2, 2) for _ in range(grp.free_rank)) + tuple(
            rng.randrange(m) for m in grp.torsion)
        c = fld(rng.choice([1, -1, 2, 3, -5]))
        if fld.kind != "rationals" and rng.random() < 0.5:
            c = c * fld.gen() ** rng.randint(0, 3)
        total = total + SuperElement.superword(grading, U, c, g)
    return total


def confluence_selftest(p: Presentation, trials: int = 100, max_zdeg: int = 6, seed=0) -> ConfluenceReport:
    """Reduce random elements with both strategies; compare and re-reduce."""
    rng = random.Random(seed)
    rs = rewrite_system(p)
    rep = ConfluenceReport(trials)
    for _ in range(trials):
        e = random_element(p, rng, max_zdeg)
        a = rs.normal_form(e, "leftmost")
        b = rs.normal_form(e, "rightmost")
        if a != b:
            rep.mismatches.append(e)
        if rs.normal_form(a, "leftmost") != a:
            rep.not_idempotent.append(e)
        if any(not is_pbw_normal(U, p) for (U, _g) in a.terms):
            rep.not_normal.append(e)
    return rep
