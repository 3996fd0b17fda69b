"""JSON configuration of a presentation.

Example::

    {
      "field": {"kind": "cyclotomic", "n": 3, "symbol": "q"},
      "group": {"free_rank": 0, "torsion": [3]},
      "g": [[1], [1]],
      "chi": [["q^-2"], ["q^2"]],
      "L": ["1", "2"],
      "c": {"1.2": "1 - g1^2"}
    }

``chi[j][k]`` is the value of chi_{j+1} on the k-th group generator.  A
Nichols-type datum gives ``qmatrix`` instead of ``group``/``g``/``chi``.
``N`` maps words to integers or ``"inf"``; missing entries are computed.
Alternatively ``{"preset": "taft:3"}``.
"""

from __future__ import annotations

import json

from .expr import format_element, format_scalar, parse_expression
from .grading import AbelianGroup, Grading
from .presentation import Presentation
from .scalars import INFINITE, field_from_json
from .words import format_word, parse_word


class ConfigError(ValueError):
    pass


def _n_value(v):
    if v == INFINITE or (isinstance(v, str) and v.strip().lower() in ("inf", "infinite", "infinity")):
        return INFINITE
    try:
        n = int(v)
    except (TypeError, ValueError):
        raise ConfigError(f"N values are integers or \"inf\", got {v!r}") from None
    return n


def presentation_from_config(data: dict) -> Presentation:
    if "preset" in data:
        from .presets import load_preset
        extra = set(data) - {"preset", "name"}
        if extra:
            raise ConfigError(f"preset configs take no other keys: {sorted(extra)}")
        return load_preset(str(data["preset"]))
    try:
        fld = field_from_json(data.get("field", {"kind": "rationals"}))
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad field: {exc}") from None
    if "qmatrix" in data:
        qm = [[fld(x) for x in row] for row in data["qmatrix"]]
        grading = Grading.nichols(fld, qm)
    else:
        for key in ("g", "chi"):
            if key not in data:
                raise ConfigError(f"missing key {key!r}")
        gd = data.get("group", {})
        group = AbelianGroup(int(gd.get("free_rank", 0)), tuple(gd.get("torsion", ())))
        chi = [[fld(v) for v in row] for row in data["chi"]]
        grading = Grading(fld, group, [tuple(x) for x in data["g"]], chi)
    theta = grading.theta
    if "theta" in data and int(data["theta"]) != theta:
        raise ConfigError(f"theta = {data['theta']} but {theta} letters are described")
    L = [parse_word(w, theta) for w in data.get("L", [str(i) for i in range(1, theta + 1)])]
    N = {parse_word(w, theta): _n_value(v) for w, v in data.get("N", {}).items()}
    Lset = frozenset(L)
    c = {parse_word(w, theta): parse_expression(str(e), grading, Lset) for w, e in data.get("c", {}).items()}
    d = {parse_word(w, theta): parse_expression(str(e), grading, Lset) for w, e in data.get("d", {}).items()}
    return Presentation(grading, L, N, c, d, name=str(data.get("name", "")))


def load_config(path) -> Presentation:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from None
    return presentation_from_config(data)


def dump_config(p: Presentation) -> dict:
    """Inverse of ``presentation_from_config`` (full data, never a preset name)."""
    grading = p.grading
    out = {"name": p.name, "theta": grading.theta, "field": grading.field.to_json()}
    if grading.nichols:
        out["qmatrix"] = [[format_scalar(x) for x in row] for row in grading.qmatrix]
    else:
        grp = grading.group
        out["group"] = {"free_rank": grp.free_rank, "torsion": list(grp.torsion)}
        out["g"] = [list(g) for g in grading.g]
        out["chi"] = [[format_scalar(v) for v in c.values] for c in grading.chi]
    out["L"] = [format_word(u) for u in p.L]
    out["N"] = {format_word(u): ("inf" if n == INFINITE else n) for u, n in p.N.items()}
    out["c"] = {format_word(w): format_element(e) for w, e in p.c.items() if e}
    out["d"] = {format_word(u): format_element(e) for u, e in p.d.items() if e}
    return out
