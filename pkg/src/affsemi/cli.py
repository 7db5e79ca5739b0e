"""Command-line front end emitting JSON result envelopes.

Exit codes: 0 for a definitive answer, 2 for unknown / at-bound, 1 for
input or precondition errors. Everything except the envelope goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import constructions as K
from . import frobenius as F
from .errors import InputError, PreconditionError, StateError
from .gaps import DEFAULT_NMAX, NO, UNKNOWN, YES, decide_c_semigroup
from .io import digest, dumps, jsonable, load_input, parse_vector, pi_from, semigroup_from
from .linalg import lattice_index, saturation
from .semigroup import AffineSemigroup

EXIT = {"ok": 0, "no": 0, "unknown": 2, "error": 1}


class Outcome:
    def __init__(self, status="ok", payload=None, certificates=None):
        self.status = status
        self.payload = payload or {}
        self.certificates = certificates or {}


def _box(text):
    if text is None:
        return None
    box = parse_vector(text)
    if any(x < 0 for x in box):
        raise InputError("--box entries must be nonnegative")
    return box


def _dim_check(v, dim, flag):
    if v is not None and len(v) != dim:
        raise InputError(f"{flag} has length {len(v)}, expected {dim}")
    return v


def _witness(S, x):
    return {"point": x, "coefficients": S.witness(x)}


def _pf_certs(S, elements):
    return [{"element": a,
             "translates": [{"generator": g, "coefficients": w}
                            for g, w in zip(S.gens, F.is_pseudo_frobenius(S, a).witnesses)]}
            for a in elements]


def _verdict_payload(v):
    out = {"verdict": v.status, "nmax": v.nmax}
    if v.status == NO:
        out["reasons"] = list(v.reasons)
    if v.status == UNKNOWN:
        out["unresolved"] = [{"r": r, "ray_index": j} for r, j in v.unresolved]
    return out


def _saturation_certs(S, v):
    return {
        "ray_elements": [_witness(S, e) for e in v.ray_elements],
        "saturation": [
            {"r": r, "N": list(Ns),
             "coefficients": [S.witness(tuple(a + N * b for a, b in zip(r, e)))
                              for N, e in zip(Ns, v.ray_elements)]}
            for r, Ns in v.saturation],
    }


# -- commands --------------------------------------------------------------------

def cmd_info(args, data):
    S = semigroup_from(data)
    mins = S.minimal_generators()
    G = S.group
    C = S.cone
    return Outcome("ok", {
        "dim": S.dim, "generators": list(S.gens), "minimal_generators": S.sorted(mins),
        "extreme_rays": S.sorted(C.extreme_rays), "facets": sorted(C.facets),
        "equations": sorted(C.equations), "span_dim": C.span_dim,
        "group_basis": list(G.basis),
        "group_index": lattice_index(G, saturation(G)),
    }, {"non_minimal": [_witness(S, g) for g in S.gens if g not in set(mins)]})


def cmd_gaps(args, data):
    S = semigroup_from(data)
    v = decide_c_semigroup(S, args.nmax)
    payload = _verdict_payload(v)
    if v.status != YES:
        return Outcome(v.status, payload)
    payload.update(gaps=list(v.gaps), count=len(v.gaps))
    return Outcome("ok", payload, _saturation_certs(S, v))


def cmd_pf(args, data):
    S = semigroup_from(data)
    box = _dim_check(_box(args.box), S.dim, "--box")
    if box is None:
        v = decide_c_semigroup(S, args.nmax)
        if v.is_yes:
            res = F.pseudo_frobenius_csem(S, v)
            return Outcome("ok", {"pf": list(res.elements), "complete": True,
                                  "method": res.method, "verdict": v.status},
                           {"pf": _pf_certs(S, res.elements), **_saturation_certs(S, v)})
    res = F.pseudo_frobenius_bounded(S, box)
    return Outcome("ok", {"pf": list(res.elements), "complete": False, "method": res.method,
                          "search_box": res.search_box},
                   {"pf": _pf_certs(S, res.elements)})


def cmd_frobenius(args, data):
    S = semigroup_from(data)
    v = decide_c_semigroup(S, args.nmax)
    certs = F.frobenius_elements(S, v)
    payload = {"frobenius": S.sorted(c.f for c in certs), "gaps": list(v.gaps)}
    if args.order:
        order = F.TermOrder.by_name(args.order, S.dim)
        payload["order"] = args.order
        payload["order_maximum"] = F.max_under_order(v.gaps, order) if v.gaps else None
    return Outcome("ok", payload,
                   {"weights": [{"f": c.f, "w": c.w} for c in certs],
                    **_saturation_certs(S, v)})


def cmd_apery(args, data):
    S = semigroup_from(data)
    b = _dim_check(parse_vector(args.base), S.dim, "--base")
    box = _dim_check(_box(args.box), S.dim, "--box")
    ap = F.apery(S, b, args.variant, box=box)
    status = "ok" if ap.complete else "unknown"
    return Outcome(status, {"base": ap.base, "variant": ap.variant,
                            "elements": list(ap.elements), "complete": ap.complete,
                            "search_box": ap.search_box},
                   {"elements": [_witness(S, a) for a in ap.elements]})


def cmd_mpd(args, data):
    S = semigroup_from(data)
    box = _dim_check(_box(args.box), S.dim, "--box")
    m = F.is_mpd(S, args.nmax, box)
    payload = {"mpd": m.status, "reason": m.reason}
    certs = {}
    if m.pf is not None:
        payload.update(pf=list(m.pf.elements), complete=m.pf.complete, method=m.pf.method)
        certs["pf"] = _pf_certs(S, m.pf.elements)
    if m.certificate is not None and m.certificate.is_yes:
        payload["gaps"] = list(m.certificate.gaps)
    status = {YES: "ok", NO: "no", UNKNOWN: "unknown"}[m.status]
    return Outcome(status, payload, certs)


def cmd_bound(args, data):
    S = semigroup_from(data)
    return Outcome("ok", {"norm_inf": F.norm_inf(S), "n": S.n,
                          "length_bound": F.pf_length_bound(S)})


def cmd_glue(args, data):
    d1, d2 = data
    S1, S2 = semigroup_from(d1), semigroup_from(d2)
    if S1.dim != S2.dim:
        raise InputError("the two inputs have different dimensions")
    d = _dim_check(parse_vector(args.d), S1.dim, "--d")
    try:
        cert = K.check_gluing(S1, S2, d)
    except K.GluingError as exc:
        return Outcome("no", {"gluing": False, "reason": exc.reason, "message": str(exc),
                              "evidence": exc.evidence})
    payload = {"gluing": True, "d": cert.d_vec, "generators": list(cert.glued.gens),
               "intersection_basis": list(cert.intersection.basis)}
    certs = {"d_in_S1": cert.d_in_S1, "d_in_S2": cert.d_in_S2}
    if (args.pf1 is None) != (args.pf2 is None):
        raise InputError("--pf1 and --pf2 go together")
    if args.pf1 is not None:
        b1 = _dim_check(parse_vector(args.pf1), S1.dim, "--pf1")
        b2 = _dim_check(parse_vector(args.pf2), S1.dim, "--pf2")
        g = K.pf_of_gluing(cert, b1, b2)
        payload["pf"] = g
        certs["pf"] = _pf_certs(cert.glued, [g])
    return Outcome("ok", payload, certs)


def cmd_irreducible(args, data):
    S = semigroup_from(data)
    box = _dim_check(_box(args.box), S.dim, "--box")
    r = K.irreducibility_verdict(S, args.nmax, box)
    status = {K.C_IRREDUCIBLE: "ok", K.NOT_IRREDUCIBLE: "no", UNKNOWN: "unknown"}[r.status]
    return Outcome(status, {"verdict": r.status, "shape": r.shape, "pf": list(r.pf),
                            "frobenius": list(r.frobenius), "split": list(r.witnesses),
                            "verification_box": r.verification_box},
                   {"pf": _pf_certs(S, r.pf)})


def _pi_of(data):
    if "pi" in data:
        return pi_from(data)
    return K.pi_decompose(semigroup_from(data))


def cmd_pi(args, data):
    action = args.action
    if action == "check":
        if "pi" in data:
            P = pi_from(data)
            return Outcome("ok", {"pi": True, "m": P.a, "reason": "given-as-pi"},
                           {"a_in_T": P.a_witness})
        S = semigroup_from(data)
        chk = K.is_pi_monoid(S)
        mins = S.minimal_generators()
        payload = {"pi": chk.is_pi, "m": chk.m, "reason": chk.reason}
        if not chk:
            return Outcome("no", payload)
        return Outcome("ok", payload, {
            "minimal_generators": mins,
            "closure": [{"i": i, "j": j, "coefficients": w} for (i, j), w in chk.witnesses.items()]})
    if action == "decompose":
        P = _pi_of(data)
        return Outcome("ok", {"a": P.a, "t_generators": list(P.t_gens)}, {"a_in_T": P.a_witness})
    box = _box(args.box)
    P = _pi_of(data)
    _dim_check(box, P.dim, "--box")
    if action == "pf":
        res = K.pi_pseudo_frobenius(P, box)
        return Outcome("ok" if res.complete else "unknown",
                       {"a": P.a, "pf": list(res.elements), "complete": res.complete,
                        "search_box": res.search_box})
    if action == "generators":
        gens, complete = K.pi_minimal_generators(P, box)
        ap = K.pi_apery(P, box)
        return Outcome("ok" if complete else "unknown",
                       {"a": P.a, "minimal_generators": gens, "apery": list(ap.elements),
                        "complete": complete, "search_box": ap.search_box})
    if action == "limit":
        if not args.lam:
            raise InputError("pi limit needs --lambda")
        lam = [parse_vector(t) for t in args.lam.split(";") if t.strip()]
        for x in lam:
            _dim_check(x, P.dim, "--lambda")
        fam = K.direct_limit_family(P, lam, args.nmax)
        m = fam.mpd
        payload = {"a": P.a, "lambda": list(fam.lam), "generators": list(fam.semigroup.gens),
                   "mpd": m.status, "reason": m.reason}
        if m.pf is not None:
            payload.update(pf=list(m.pf.elements), complete=m.pf.complete)
        status = {YES: "ok", NO: "no", UNKNOWN: "unknown"}[m.status]
        return Outcome(status, payload)
    raise InputError(f"unknown pi action {action!r}")


COMMANDS = {
    "info": cmd_info, "gaps": cmd_gaps, "pf": cmd_pf, "frobenius": cmd_frobenius,
    "apery": cmd_apery, "mpd": cmd_mpd, "bound": cmd_bound, "glue": cmd_glue,
    "irreducible": cmd_irreducible, "pi": cmd_pi,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int, default=DEFAULT_NMAX,
                        help="saturation bound (default %(default)s)")
    common.add_argument("--box", help="comma-separated nonnegative search box")
    common.add_argument("--format", choices=["json"], default="json")
    common.add_argument("--timing", action="store_true",
                        help="record wall-clock seconds in the envelope")

    p = argparse.ArgumentParser(prog="affsemi",
                                description="Certified computations for affine semigroups.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, text in [("info", "minimal generators, cone and group index"),
                       ("gaps", "C-semigroup verdict and gap set"),
                       ("pf", "pseudo-Frobenius elements"),
                       ("mpd", "maximal projective dimension verdict"),
                       ("bound", "length bound for PF syzygy degrees"),
                       ("irreducible", "C-irreducibility verdict")]:
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("input")
    sp = sub.add_parser("frobenius", parents=[common], help="Frobenius elements with weights")
    sp.add_argument("input")
    sp.add_argument("--order", choices=["lex", "grlex", "grevlex"])
    sp = sub.add_parser("apery", parents=[common], help="Apéry set")
    sp.add_argument("input")
    sp.add_argument("--base", required=True)
    sp.add_argument("--variant", choices=[F.RESTRICTED, F.CLASSICAL], default=F.RESTRICTED)
    sp = sub.add_parser("glue", parents=[common], help="check a gluing")
    sp.add_argument("input")
    sp.add_argument("input2")
    sp.add_argument("--d", required=True)
    sp.add_argument("--pf1")
    sp.add_argument("--pf2")
    sp = sub.add_parser("pi", parents=[common], help="PI-monoid operations")
    sp.add_argument("action", choices=["check", "decompose", "pf", "generators", "limit"])
    sp.add_argument("input")
    sp.add_argument("--lambda", dest="lam", help="semicolon-separated vectors, e.g. '2,1;1,2'")
    sp = sub.add_parser("verify", help=argparse.SUPPRESS)
    sp.add_argument("envelope")
    sp.add_argument("input")
    sp.add_argument("input2", nargs="?")
    return p


def run(argv=None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        from .verify import verify_envelope
        env = verify_envelope(args.envelope, args.input, args.input2)
        return env, EXIT[env["status"]]
    env = {"command": args.command, "input_digest": None, "status": "error",
           "payload": {}, "certificates": {}, "timing": None}
    if args.command == "pi":
        env["command"] = f"pi {args.action}"
    start = time.perf_counter()
    try:
        if args.nmax < 1:
            raise InputError("--nmax must be positive")
        data = load_input(args.input)
        if args.command == "glue":
            data = (data, load_input(args.input2))
            env["input_digest"] = digest(list(data))
        else:
            env["input_digest"] = digest(data)
        out = COMMANDS[args.command](args, data)
        env.update(status=out.status, payload=out.payload, certificates=out.certificates)
    except StateError as exc:
        verdict = getattr(exc, "verdict", None)
        status = UNKNOWN if verdict is not None and verdict.status == UNKNOWN else "error"
        env.update(status=status, payload={"message": str(exc)})
        if verdict is not None:
            env["payload"].update(_verdict_payload(verdict))
        print(f"affsemi: {exc}", file=sys.stderr)
    except (InputError, PreconditionError) as exc:
        env.update(status="error", payload={"message": str(exc)})
        print(f"affsemi: {exc}", file=sys.stderr)
    if args.timing:
        env["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return jsonable(env), EXIT[env["status"]]


def main(argv=None) -> int:
    env, code = run(argv)
    sys.stdout.write(dumps(env))
    return code


if __name__ == "__main__":
    sys.exit(main())
