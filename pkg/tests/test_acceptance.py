"""The eight acceptance criteria, one test each.

Every test records a PASS/FAIL line; pytest prints them in the terminal
summary, and ``python3 tests/test_acceptance.py`` prints them directly.
"""

import contextlib
import json
import os
import random
import sys
import tempfile
from math import gcd

sys.path.insert(0, os.path.dirname(__file__))

from affsemi.cli import run
from affsemi.constructions import (
    check_gluing, pi_apery, pi_conditions, pi_construct, pi_minimal_generators,
    pi_pseudo_frobenius, pf_of_gluing,
)
from affsemi.frobenius import (
    frobenius_elements, is_pseudo_frobenius, pseudo_frobenius_bounded, pseudo_frobenius_csem,
    selmer_check, syzygy_witness_degrees,
)
from affsemi.gaps import NO, YES, decide_c_semigroup
from affsemi.linalg import lattice_intersect
from affsemi.semigroup import AffineSemigroup

from conftest import CRITERIA, DEGENERATE, FIVE, FIVE_GAPS, GLUE_1, GLUE_2, TEN, TWELVE
from oracles import numerical_sieve


@contextlib.contextmanager
def criterion(n, text):
    try:
        yield
    except BaseException as exc:
        first = str(exc).splitlines()[0] if str(exc) else ""
        line = f"[FAIL] criterion {n}: {text} ({type(exc).__name__}: {first})"
        CRITERIA.append(line)
        print(line)
        raise
    line = f"[PASS] criterion {n}: {text}"
    CRITERIA.append(line)
    print(line)


def _cli(argv, gens):
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "in.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"dim": len(gens[0]), "generators": [list(g) for g in gens]}, fh)
        return run([argv[0], path] + argv[1:])


def test_criterion_1_five_generator():
    with criterion(1, "five-generator example: 12 gaps, PF {(7,2)}, Frobenius (7,2) with weight, C-irreducible"):
        env, code = _cli(["gaps"], FIVE)
        assert code == 0 and env["status"] == "ok"
        assert sorted(map(tuple, env["payload"]["gaps"])) == FIVE_GAPS
        env, code = _cli(["pf"], FIVE)
        assert env["payload"]["pf"] == [[7, 2]] and env["payload"]["complete"]
        env, code = _cli(["frobenius"], FIVE)
        assert env["payload"]["frobenius"] == [[7, 2]]
        w = env["certificates"]["weights"][0]["w"]
        assert all(x > 0 for x in w)
        S = AffineSemigroup(FIVE)
        cert = frobenius_elements(S)[0]
        assert cert.revalidate(FIVE_GAPS) and selmer_check(S, cert)
        env, code = _cli(["irreducible"], FIVE)
        assert env["payload"]["verdict"] == "c-irreducible" and code == 0


def test_criterion_2_degenerate():
    with criterion(2, "degenerate example: not a C-semigroup, no PF in box (50,50)"):
        S = AffineSemigroup(DEGENERATE)
        assert decide_c_semigroup(S).status == NO
        assert pseudo_frobenius_bounded(S, (50, 50)).elements == ()


def test_criterion_3_twelve_generators():
    with criterion(3, "12-generator example: ray certificate says No, (13,4) is PF"):
        S = AffineSemigroup(TWELVE)
        v = decide_c_semigroup(S)
        assert v.status == NO
        assert {r["reason"] for r in v.reasons} == {"ray-gcd"}
        chk = is_pseudo_frobenius(S, (13, 4))
        assert chk.is_pf and len(chk.witnesses) == 12
        for g, u in zip(S.gens, chk.witnesses):
            assert S.combine(u) == (13 + g[0], 4 + g[1])


def test_criterion_4_ten_generators():
    with criterion(4, "10-generator example: PF {(11,0),(12,1)}, syzygy degrees (72,20),(73,21)"):
        S = AffineSemigroup(TEN)
        pf = pseudo_frobenius_bounded(S, (30, 15))
        assert pf.elements == ((11, 0), (12, 1))
        w = syzygy_witness_degrees(S, pf)
        assert w.degrees == ((72, 20), (73, 21)) and w.generator_sum == (61, 20)
        assert w.checked and w.subset_checks == 2 * (2 ** 10 - 2)


def test_criterion_5_gluing():
    with criterion(5, "gluing in N^3: intersection (1,1,0)Z, PF element (2,1,1)"):
        S1, S2 = AffineSemigroup(GLUE_1), AffineSemigroup(GLUE_2)
        assert lattice_intersect(S1.group, S2.group).basis == ((1, 1, 0),)
        cert = check_gluing(S1, S2, (1, 1, 0))
        g = pf_of_gluing(cert, (1, 0, 0), (0, 0, 1))
        assert g == (2, 1, 1) and is_pseudo_frobenius(cert.glued, g)


PI_FIXTURES = [[(2, 2), (3, 3)], [(3,), (5,), (7,)], [(3,), (4,), (5,)], [(2, 4), (3, 6)],
               [(1,)], [(3,), (5,)], FIVE, DEGENERATE, [(2, 1), (3, 1), (2, 2), (3, 2)]]


def test_criterion_6_pi():
    with criterion(6, "PI fixtures: S1 values, S2 axis strips, four PI conditions agree"):
        P1 = pi_construct([(1, 1)], (2, 2))
        assert P1.a == (2, 2)
        assert pi_apery(P1).elements == ((0, 0), (3, 3))
        assert pi_pseudo_frobenius(P1).elements == ((1, 1),)
        assert pi_minimal_generators(P1) == ([(2, 2), (3, 3)], True)
        P2 = pi_construct([(1, 0), (0, 1)], (1, 1))
        for bx, by in [(3, 3), (5, 5), (8, 4), (2, 9)]:
            res = pi_pseudo_frobenius(P2, (bx, by))
            assert set(res.elements) == {(i, 0) for i in range(1, bx)} | {
                (0, j) for j in range(1, by)}
        for gens in PI_FIXTURES:
            assert len(set(pi_conditions(AffineSemigroup(gens)).values())) == 1, gens


def test_criterion_7_property_suites():
    with criterion(7, "property suites (hypothesis, 100 cases each)"):
        import test_frobenius as tf
        import test_semigroup as ts
        ts.test_witness_soundness()
        ts.test_brute_force_equivalence()
        tf.test_f_in_pf_in_h()
        tf.test_apery_base_independence()
        tf.test_selmer_and_revalidation()
        tf.test_apery_decompose_unique()


def test_criterion_8_numerical():
    with criterion(8, "50 random numerical semigroups agree with the sieve"):
        rnd = random.Random(20261015)
        done = 0
        while done < 50:
            gens = sorted(set(rnd.sample(range(2, 30), rnd.randint(2, 5))))
            if gcd(*gens) != 1:
                continue
            _, gap_list, frob, pf = numerical_sieve(gens)
            S = AffineSemigroup([(g,) for g in gens])
            v = decide_c_semigroup(S)
            assert v.status == YES
            assert [h[0] for h in v.gaps] == gap_list
            assert [h[0] for h in pseudo_frobenius_csem(S, v).elements] == pf
            assert [c.f[0] for c in frobenius_elements(S, v)] == [frob]
            done += 1


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    sys.exit(1 if failed else 0)
