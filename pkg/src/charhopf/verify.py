"""Independent checks of a presentation.

* ``oracle_dimension``: brute-force row reduction of the ideal inside the
  filtered pieces (letter-degree <= D) of the free smash product.
* ``ideal_membership``: the same echelon form, used as a membership test.
* ``hopf_ideal_check``: images of the ideal generators under the coproduct,
  the counit and conjugation by the group, reduced to normal form.
* ``hopf_axiom_spotcheck``: antipode and counit axioms on PBW monomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import SmashElement, antipode, coproduct, counit, multiply
from .linalg import SparseEchelon
from .presentation import Presentation
from .rewrite import enumerate_pbw, rewrite_system
from .scalars import INFINITE
from .superletters import SuperElement, expand_superelement


class OracleError(RuntimeError):
    """The oracle cannot run on this input (size cap or unsupported data)."""


@dataclass(frozen=True)
class OracleConfig:
    max_zdeg: int = 4
    max_columns: int = 200_000
    word_caps: tuple = ()  # optional (degree, max words) pairs
    t: int = 1  # value of the free group generators on the right module quotient

    def __post_init__(self):
        if self.max_zdeg < 0:
            raise ValueError("max_zdeg must be >= 0")


def top_degree(p: Presentation):
    """Sum of (N_u - 1) l(u): the highest letter-degree of a PBW monomial."""
    if any(p.N[u] == INFINITE for u in p.L):
        return INFINITE
    return sum((p.N[u] - 1) * len(u) for u in p.L)


# -- the oracle -------------------------------------------------------------------------

class _Oracle:
    """Columns are (word, torsion part of g); the free part of g is specialised to t."""

    def __init__(self, p: Presentation, cfg: OracleConfig):
        self.p = p
        self.cfg = cfg
        grading = p.grading
        self.grading = grading
        grp = grading.group
        self.free = grp.free_rank
        self.cosets = grp.torsion_elements()
        theta = grading.theta
        D = cfg.max_zdeg
        caps = dict(cfg.word_caps)
        self.col = {}
        self.col_degree = []
        count = 0
        for n in range(D + 1):
            nwords = theta ** n
            if n in caps and nwords > caps[n]:
                raise OracleError(f"{nwords} words of degree {n} exceed the cap {caps[n]}")
            count += nwords * len(self.cosets)
            if count > cfg.max_columns:
                raise OracleError(f"more than {cfg.max_columns} columns")
        # larger index = more leading: longer words, then lexicographically smaller
        for n in range(D + 1):
            words = sorted(itertools.product(range(1, theta + 1), repeat=n), reverse=True)
            for w in words:
                for h in self.cosets:
                    self.col[(w, h)] = len(self.col_degree)
                    self.col_degree.append(n)
        self.ech = SparseEchelon()
        self._build()

    def vector(self, e: SmashElement) -> dict:
        fld = self.grading.field
        t = fld(self.cfg.t)
        f = self.free
        row = {}
        for (x, g), c in e.terms.items():
            if f:
                c = c * t ** sum(g[:f])
                g = (0,) * f + g[f:]
            key = self.col.get((x, g))
            if key is None:
                raise OracleError("element exceeds the oracle degree")
            old = row.get(key)
            s = c if old is None else old + c
            if s:
                row[key] = s
            else:
                row.pop(key, None)
        return row

    def generators(self):
        """Expanded ideal generators, split into Gamma-hat-homogeneous parts."""
        p = self.p
        grading = self.grading
        out = []
        for _label, r in p.generators():
            R = expand_superelement(r)
            if not R:
                continue
            if grading.group.rank == 0:
                out.append(R)
                continue
            parts = {}
            for (x, g), c in R.terms.items():
                k = grading.ghat_key(R._zdeg(x))
                parts.setdefault(k, {})[(x, g)] = c
            out.extend(SmashElement._raw(grading, t) for t in parts.values())
        return out

    def _build(self):
        grading = self.grading
        grp = grading.group
        theta = grading.theta
        D = self.cfg.max_zdeg
        gens = []
        for R in self.generators():
            deg = max(len(x) for (x, _) in R.terms)
            if deg <= D:
                gens.append((deg, R))
        gens.sort(key=lambda t: t[0])
        words = {n: list(itertools.product(range(1, theta + 1), repeat=n)) for n in range(D + 1)}
        # rows a r b h, smallest filtered degree first
        rows = []
        for deg, R in gens:
            terms = [(x, g, c, R._zdeg(x)) for (x, g), c in R.terms.items()]
            for extra in range(D - deg + 1):
                for la in range(extra + 1):
                    for a in words[la]:
                        for b in words[extra - la]:
                            rows.append((deg + extra, a, b, terms))
        rows.sort(key=lambda r: r[0])
        for _deg, a, b, terms in rows:
            zb = tuple(b.count(i) for i in range(1, theta + 1)) if b else None
            for h in self.cosets:
                acc = {}
                for x, g, c, _z in terms:
                    if b and any(g):
                        c = c * grading.chi_eval(zb, g)
                    key = (a + x + b, grp.mul(g, h))
                    old = acc.get(key)
                    s = c if old is None else old + c
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
                if acc:
                    self.ech.add(self.vector(SmashElement._raw(grading, acc)))

    def table(self):
        D = self.cfg.max_zdeg
        ncols = [0] * (D + 1)
        for n in self.col_degree:
            ncols[n] += 1
        npiv = [0] * (D + 1)
        for c in self.ech.pivots:
            npiv[self.col_degree[c]] += 1
        out = []
        cols = piv = 0
        for n in range(D + 1):
            cols += ncols[n]
            piv += npiv[n]
            out.append(cols - piv)
        return out


def _oracle(p: Presentation, cfg: OracleConfig) -> _Oracle:
    cache = p.__dict__.setdefault("_oracles", {})
    o = cache.get(cfg)
    if o is None:
        o = cache[cfg] = _Oracle(p, cfg)
    return o


@dataclass
class OracleResult:
    cumulative: list  # dim of the image of letter-degree <= D, for D = 0..max_zdeg
    cosets: int  # number of torsion cosets counted (the free part is specialised)

    @property
    def per_degree(self) -> list:
        c = self.cumulative
        return [c[0]] + [c[i] - c[i - 1] for i in range(1, len(c))]

    @property
    def total(self) -> int:
        return self.cumulative[-1]

    def to_json(self):
        return {"cumulative": self.cumulative, "per_degree": self.per_degree, "total": self.total}


def oracle_dimension(p: Presentation, cfg: OracleConfig | None = None) -> OracleResult:
    """Dimensions of F_D / (I cap F_D), F_D = span of (word, g) with |word| <= D.

    For an infinite group the free generators are sent to ``cfg.t``; the
    numbers then count dimensions over the group algebra of the free part.
    """
    if cfg is None:
        top = top_degree(p)
        if top == INFINITE:
            raise OracleError("give max_zdeg for an infinite-dimensional presentation")
        cfg = OracleConfig(max_zdeg=top)
    o = _oracle(p, cfg)
    return OracleResult(o.table(), len(o.cosets))


def ideal_membership(e, p: Presentation, cfg: OracleConfig | None = None) -> bool:
    if isinstance(e, SuperElement):
        e = expand_superelement(e)
    deg = max((len(x) for (x, _) in e.terms), default=0)
    if cfg is None:
        cfg = OracleConfig(max_zdeg=deg)
    elif cfg.max_zdeg < deg:
        raise OracleError("element degree exceeds max_zdeg")
    o = _oracle(p, cfg)
    return o.ech.contains(o.vector(e))


# -- reduction helpers in A and A (x) A ------------------------------------------------

def _hopf_grading(p):
    """The grading carrying the group-likes: the bosonization in Nichols mode."""
    return p.grading.bosonization()


def _nf_key(p, x, h, cache):
    """Normal form of the word x times the group element h, as a term dict."""
    nf = cache.get(x)
    if nf is None:
        rs = rewrite_system(p)
        nf = rs.reduce_superword(tuple((i,) for i in x))
        cache[x] = nf
    hg = _hopf_grading(p)
    grp = hg.group
    if p.grading.nichols:
        return {(U, h): c for (U, _), c in nf.items()}
    if not any(h):
        return nf
    return {(U, grp.mul(g, h)): c for (U, g), c in nf.items()}


def _reduce_smash(p, e: SmashElement, cache) -> dict:
    out = {}
    for (x, h), c in e.terms.items():
        for k, v in _nf_key(p, x, h, cache).items():
            s = out.get(k)
            s = v * c if s is None else s + v * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _reduce_tensor(p, t, cache) -> dict:
    out = {}
    left_nf = {}
    for ((x, h), (y, k)), c in t.terms.items():
        a = left_nf.get((x, h))
        if a is None:
            a = left_nf[(x, h)] = _nf_key(p, x, h, cache)
        b = _nf_key(p, y, k, cache)
        for ka, va in a.items():
            for kb, vb in b.items():
                key = (ka, kb)
                v = c * va * vb
                s = out.get(key)
                s = v if s is None else s + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def _lift(p, e: SmashElement) -> SmashElement:
    """Move an element of kX into the bosonization (Nichols mode only)."""
    if not p.grading.nichols:
        return e
    hg = _hopf_grading(p)
    ident = hg.group.identity
    return SmashElement._raw(hg, {(x, ident): c for (x, _), c in e.terms.items()})


@dataclass
class CheckItem:
    name: str
    ok: bool
    residue: str = "0"

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "residue": self.residue}


@dataclass
class CheckReport:
    items: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def failures(self):
        return [i for i in self.items if not i.ok]

    def to_json(self):
        return {"ok": self.ok, "checks": [i.to_json() for i in self.items]}

    def __str__(self):
        return "\n".join(f"{'ok  ' if i.ok else 'FAIL'} {i.name}" + ("" if i.ok else f": {i.residue}")
                         for i in self.items)


def _fmt_terms(grading, terms, limit=6):
    """Readable residue: a super-word combination, or a sum of tensors."""
    if not terms:
        return "0"
    first = next(iter(terms))
    if len(first) == 2 and isinstance(first[0], tuple) and len(first[0]) == 2 and isinstance(first[0][1], tuple) \
            and isinstance(first[1], tuple) and len(first[1]) == 2 and isinstance(first[1][1], tuple):
        parts = []
        for (a, b), c in list(terms.items())[:limit]:
            left = SuperElement._raw(grading, {a: grading.field.one})
            right = SuperElement._raw(grading, {b: grading.field.one})
            parts.append(f"({c!r}) {left!r} (x) {right!r}")
        return " + ".join(parts) + (" + ..." if len(terms) > limit else "")
    return repr(SuperElement._raw(grading, dict(terms)))


def hopf_ideal_check(p: Presentation) -> CheckReport:
    """For each generator r: nf(r), (nf x nf)(Delta r), eps(r) and nf(h r h^-1) all vanish."""
    rep = CheckReport()
    hg = _hopf_grading(p)
    grp = hg.group
    cache = {}
    for label, r in p.generators():
        R = _lift(p, expand_superelement(r))
        res = _reduce_smash(p, R, cache)
        rep.items.append(CheckItem(f"{label}: normal form", not res, _fmt_terms(hg, res)))
        res = _reduce_tensor(p, coproduct(R), cache)
        rep.items.append(CheckItem(f"{label}: coproduct", not res, _fmt_terms(hg, res)))
        eps = counit(R)
        rep.items.append(CheckItem(f"{label}: counit", not eps, repr(eps)))
        worst = {}
        for j in range(grp.rank):
            h = grp.generator(j)
            conj = SmashElement._raw(hg, {(x, g): c * hg.chi_eval(R._zdeg(x), h) for (x, g), c in R.terms.items()})
            worst = _reduce_smash(p, conj, cache)
            if worst:
                break
        rep.items.append(CheckItem(f"{label}: group conjugation", not worst, _fmt_terms(hg, worst)))
    return rep


def hopf_axiom_spotcheck(p: Presentation, sample_zdeg: int = 2) -> CheckReport:
    """m(S x id)Delta = eps 1 and the counit axioms on PBW monomials of degree <= sample_zdeg."""
    rep = CheckReport()
    hg = _hopf_grading(p)
    grp = hg.group
    cache = {}
    if p.grading.nichols:
        groups = [grp.identity] + [grp.generator(j) for j in range(grp.rank)]
    elif grp.is_finite():
        groups = grp.elements()
    else:
        groups = [grp.identity] + [grp.generator(j) for j in range(grp.rank)]
    mons = enumerate_pbw(p, sample_zdeg, group_elements=[p.grading.group.identity])
    one = SmashElement.scalar(hg, 1)
    for m in mons:
        base = _lift(p, expand_superelement(SuperElement.superword(p.grading, m.superword())))
        for g in groups:
            x = base.times_group(g)
            d = coproduct(x)
            # m (S x id) Delta
            total = SmashElement.zero(hg)
            for ((a, h), (b, k)), c in d.terms.items():
                sa = antipode(SmashElement._raw(hg, {(a, h): c}))
                total = total + multiply(sa, SmashElement._raw(hg, {(b, k): hg.field.one}))
            diff = _reduce_smash(p, total - one.scale(counit(x)), cache)
            name = f"{m.superword()} g={g}"
            rep.items.append(CheckItem(f"antipode {name}", not diff, _fmt_terms(hg, diff)))
            left = SmashElement.zero(hg)
            right = SmashElement.zero(hg)
            for ((a, h), (b, k)), c in d.terms.items():
                if not a:
                    left = left + SmashElement._raw(hg, {(b, k): c})
                if not b:
                    right = right + SmashElement._raw(hg, {(a, h): c})
            rep.items.append(CheckItem(f"counit {name}", left == x and right == x,
                                       f"{left!r} / {right!r}"))
    return rep
