"""Offline re-validation of result envelopes.

Only the envelope and the input file(s) are read. Positive claims are
checked against their certificates; non-membership claims are recomputed,
since there is no short certificate for them.
"""

from __future__ import annotations

import itertools
import json

from .cone import dot
from .errors import InputError
from .frobenius import FrobeniusCert
from .io import digest, load_input, pi_from, semigroup_from
from .linalg import lattice_intersect, lattice_member
from .semigroup import AffineSemigroup, box_points


def _vec(x):
    return tuple(int(v) for v in x)


class Checker:
    def __init__(self):
        self.count = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str):
        self.count += 1
        if not ok:
            self.failures.append(what)
        return ok


def _combination_ok(gens, u, x) -> bool:
    u = _vec(u)
    if len(u) != len(gens) or any(c < 0 for c in u):
        return False
    return tuple(sum(c * g[k] for c, g in zip(u, gens)) for k in range(len(x))) == _vec(x)


def _check_pf(ck, S, items, label="pf"):
    for item in items:
        a = _vec(item["element"])
        ck.check(a not in S, f"{label}: {a} is in S")
        ck.check(S.cone.contains(a), f"{label}: {a} is outside the cone")
        trans = item["translates"]
        ck.check(len(trans) == S.n, f"{label}: {a} lacks some generator translates")
        for t in trans:
            g = _vec(t["generator"])
            ck.check(g in S.gens and _combination_ok(S.gens, t["coefficients"],
                                                     tuple(x + y for x, y in zip(a, g))),
                     f"{label}: bad witness for {a}+{g}")


def _check_saturation(ck, S, certs):
    """Re-derive the gap list from ray elements and the saturation table."""
    rays = set(S.cone.extreme_rays)
    es = []
    for item in certs["ray_elements"]:
        e = _vec(item["point"])
        ck.check(_combination_ok(S.gens, item["coefficients"], e), f"ray element {e} witness")
        es.append(e)
    from .cone import primitive
    ck.check({primitive(e) for e in es} == rays and len(es) == len(rays),
             "ray elements do not match the extreme rays")
    top = tuple(sum(e[i] for e in es) for i in range(S.dim))
    fundamental = [r for r in box_points(top)
                   if S.cone.contains(r) and lattice_member(S.group, r) is not None]
    table = {_vec(item["r"]): item for item in certs["saturation"]}
    ck.check(set(table) == set(fundamental), "saturation table does not cover the fundamental box")
    candidates = set()
    for r, item in table.items():
        Ns = [int(n) for n in item["N"]]
        for N, e, u in zip(Ns, es, item["coefficients"]):
            ck.check(_combination_ok(S.gens, u, tuple(a + N * b for a, b in zip(r, e))),
                     f"saturation witness for {r} + {N}·{e}")
        for ns in itertools.product(*(range(N) for N in Ns)):
            candidates.add(tuple(r[i] + sum(n * e[i] for n, e in zip(ns, es))
                                 for i in range(S.dim)))
    fresh = AffineSemigroup(S.gens, S.dim)
    return sorted(c for c in candidates if c not in fresh)


def _same(a, b):
    return sorted(_vec(x) for x in a) == sorted(_vec(x) for x in b)


def verify_envelope(env_path: str, input_path: str, input2_path=None) -> dict:
    out = {"command": "verify", "input_digest": None, "status": "error",
           "payload": {}, "certificates": {}, "timing": None}
    try:
        with open(env_path, encoding="utf-8") as fh:
            env = json.load(fh)
        data = load_input(input_path)
        if input2_path is not None:
            data = (data, load_input(input2_path))
    except (OSError, json.JSONDecodeError, InputError) as exc:
        out["payload"] = {"message": str(exc)}
        return out
    out["input_digest"] = digest(list(data) if isinstance(data, tuple) else data)
    ck = Checker()
    cmd = env.get("command", "")
    ck.check(env.get("input_digest") == out["input_digest"], "input digest mismatch")
    p, c = env.get("payload", {}), env.get("certificates", {})
    try:
        _dispatch(ck, cmd, env.get("status"), p, c, data)
    except (KeyError, TypeError, ValueError) as exc:
        ck.check(False, f"malformed envelope: {exc!r}")
    out["payload"] = {"verified_command": cmd, "checks": ck.count, "failures": ck.failures}
    out["status"] = "ok" if not ck.failures else "error"
    return out


def _dispatch(ck, cmd, status, p, c, data):
    if cmd == "glue":
        S1, S2 = semigroup_from(data[0]), semigroup_from(data[1])
        if not p.get("gluing"):
            return
        d = _vec(p["d"])
        ck.check(_combination_ok(S1.gens, c["d_in_S1"], d), "d witness in S1")
        ck.check(_combination_ok(S2.gens, c["d_in_S2"], d), "d witness in S2")
        inter = lattice_intersect(S1.group, S2.group)
        ck.check(inter.rank == 1 and inter.basis[0] in (d, tuple(-x for x in d)),
                 "intersection of groups is not generated by d")
        if "pf" in c:
            glued = AffineSemigroup([_vec(g) for g in p["generators"]], S1.dim)
            _check_pf(ck, glued, c["pf"])
        return
    if cmd.startswith("pi "):
        if cmd == "pi check" and p.get("pi") and "closure" in c:
            S = semigroup_from(data)
            m, mins = _vec(p["m"]), [_vec(g) for g in c["minimal_generators"]]
            ck.check(m == tuple(min(g[k] for g in S.gens) for k in range(S.dim)),
                     "m is not the componentwise minimum")
            ck.check(m in S, "m is not in S")
            pairs = {(item["i"], item["j"]): item["coefficients"] for item in c["closure"]}
            for i in range(len(mins)):
                for j in range(i, len(mins)):
                    x = tuple(a + b - e for a, b, e in zip(mins[i], mins[j], m))
                    ck.check((i, j) in pairs and _combination_ok(S.gens, pairs[(i, j)], x),
                             f"closure witness for pair {(i, j)}")
        elif "a_in_T" in c:
            a, tg = _vec(p.get("a", p.get("m"))), p.get("t_generators")
            if tg is None:
                tg = pi_from(data).t_gens
            ck.check(_combination_ok([_vec(g) for g in tg], c["a_in_T"], a), "a is not in T")
        return
    S = semigroup_from(data)
    if cmd == "info":
        removed = [_vec(item["point"]) for item in c["non_minimal"]]
        for item, x in zip(c["non_minimal"], removed):
            u = _vec(item["coefficients"])
            ok = _combination_ok(S.gens, u, x) and u[S.gens.index(x)] == 0
            ck.check(ok, f"non-minimality witness for {x}")
        ck.check(_same(p["minimal_generators"], [g for g in S.gens if g not in removed]),
                 "minimal generators disagree with the witnesses")
        for r in p["extreme_rays"]:
            ck.check(S.cone.contains(_vec(r)), f"extreme ray {r} is outside the cone")
    elif cmd == "gaps" and status == "ok":
        ck.check(_same(p["gaps"], _check_saturation(ck, S, c)), "gap list mismatch")
    elif cmd == "gaps" and status == "no":
        from .gaps import c_semigroup_obstructions
        from .io import jsonable
        ck.check(jsonable(c_semigroup_obstructions(S)) == p["reasons"], "obstructions differ")
    elif cmd == "pf":
        _check_pf(ck, S, c["pf"])
        ck.check(_same(p["pf"], [item["element"] for item in c["pf"]]), "pf list mismatch")
        if p.get("complete"):
            gap_list = _check_saturation(ck, S, c)
            expect = [h for h in gap_list
                      if all(tuple(a + b for a, b in zip(h, g)) in S for g in S.gens)]
            ck.check(_same(p["pf"], expect), "pf differs from the gap filter")
    elif cmd == "frobenius":
        gap_list = _check_saturation(ck, S, c)
        ck.check(_same(p["gaps"], gap_list), "gap list mismatch")
        for item in c["weights"]:
            cert = FrobeniusCert(_vec(item["f"]), _vec(item["w"]))
            ck.check(cert.revalidate(gap_list), f"weight {cert.w} does not certify {cert.f}")
            ck.check(all(dot(cert.w, g) > 0 for g in S.gens), "weight not positive")
    elif cmd == "apery":
        b = _vec(p["base"])
        for item in c["elements"]:
            a = _vec(item["point"])
            ck.check(_combination_ok(S.gens, item["coefficients"], a), f"Apéry witness for {a}")
            ck.check(tuple(x - y for x, y in zip(a, b)) not in S, f"{a} - base is in S")
    elif cmd in ("mpd", "irreducible") and "pf" in c:
        _check_pf(ck, S, c["pf"])
