"""Acceptance criteria; each prints one PASS/FAIL line."""
import itertools
import random
import time
from math import gcd

import pytest

from knots11.convert import convert_torus, trace_convert
from knots11.dunwoody import DunwoodyParams, ambient_order, homology, is_admissible
from knots11.families import (ConwayEven, TorusKnot, closed_form_candidates, torus_word,
                              twobridge_word)
from knots11.omega import LensSpace, is_kernel, lens_space_of, omega, trivial_knot_word
from knots11.params import ParamKnot, equivalent_under_moves, normalize
from knots11.pi1 import calibration_report, in_E, word_action
from knots11.table import REFERENCE_TABLE
from knots11.words import TA, TB, TC, KernelWord, TwistWord, expand_kernel


def coprime(max_h, k_min=1):
    return [(k, h) for h in range(2, max_h + 1) for k in range(k_min, h) if gcd(k, h) == 1]


def table_reproduction():
    bad = [row for row in REFERENCE_TABLE
           if convert_torus(TorusKnot(row[0], row[1])).astuple() != row[2:]]
    return not bad and len(REFERENCE_TABLE) == 38, f"mismatches: {bad}"


def closed_form_cross_check():
    checked, bad = 0, []
    for k, h in coprime(40, 2):
        got = convert_torus(TorusKnot(k, h))
        for tag, expected in closed_form_candidates(TorusKnot(k, h)):
            checked += 1
            if not equivalent_under_moves(got, expected, 2):
                bad.append((k, h, tag))
    return not bad and checked > 0, f"{checked} formulas, failures: {bad}"


def trefoil_trace():
    got = [s.astuple() for s in trace_convert(TorusKnot(2, 3))]
    want = [(0, 0, 1, 0, 0), (0, 0, 1, 0, 0), (0, 0, 1, 1, -1), (1, 0, 1, 2, 0)]
    return got == want, f"trace {got}"


def t35_intermediate():
    states = trace_convert(TorusKnot(3, 5))
    seen = [s.astuple() for s in states]
    end = states[-1].knot()
    ok = (1, 0, 3, 2, 0) in seen and equivalent_under_moves(end, ParamKnot(1, 4, 1, 5), 1)
    return ok, f"trace {seen}, end {end}"


def _conway_words(max_len):
    for n in range(1, max_len // 2 + 1):
        for params in itertools.product((-4, -2, 2, 4), repeat=2 * n):
            yield twobridge_word(ConwayEven.from_parameters(params))


def omega_calibration():
    bad = []
    for p in range(2, 51):
        for q in range(1, p):
            if gcd(p, q) == 1 and lens_space_of(trivial_knot_word(p, q)) != LensSpace(p, q):
                bad.append(("trivial", p, q))
    s3 = LensSpace(1, 0)
    if lens_space_of(trivial_knot_word(1, 0)) != s3:
        bad.append(("trivial", 1, 0))
    bad += [("torus", k, h) for k, h in coprime(25) if lens_space_of(torus_word(TorusKnot(k, h))[1]) != s3]
    n_two_bridge = 0
    for w in _conway_words(6):
        n_two_bridge += 1
        if lens_space_of(w) != s3:
            bad.append(("two-bridge", str(w)))
    return not bad, f"{n_two_bridge} two-bridge words, failures: {bad[:5]}"


def kernel_property():
    rng = random.Random(20261016)
    bad = 0
    for _ in range(1000):
        size = rng.randint(0, 50)
        w = KernelWord([(rng.choice(("tm", "tl")), rng.choice((-1, 1))) for _ in range(size)])
        bad += omega(expand_kernel(w)) != omega(TwistWord.identity())
    prefixes = sum(not is_kernel(expand_kernel(torus_word(TorusKnot(k, h))[0])) for k, h in coprime(25))
    return bad == 0 and prefixes == 0, f"{bad} random failures, {prefixes} torus prefix failures"


def dunwoody_anchors():
    notes = []
    if homology(DunwoodyParams(1, 1, 1, 3, 2, 1)) != [0, 0, 0]:
        notes.append("D(1,1,1,3,2,1) is not Z^3")
    for p in range(1, 31):
        for q in range(p):
            if gcd(p, q) == 1 and ambient_order(ParamKnot(0, 0, p, q)) != p:
                notes.append(f"K(0,0,{p},{q})")
    for row in REFERENCE_TABLE:
        if ambient_order(ParamKnot(*row[2:])) != 1:
            notes.append(f"table row {row}")
    if ambient_order(ParamKnot(1, 1, 1, 2)) != 0:
        notes.append("K(1,1,1,2)")
    return not notes, f"failures: {notes}"


def non_admissibility():
    cases = [DunwoodyParams.of(a, 0, a, 1, a, 0) for a in range(2, 11)]
    cases += [DunwoodyParams.of(1, 0, c, 1, 2, 0) for c in range(0, 21, 2)]
    admitted = [str(p) for p in cases if is_admissible(p)]
    return not admitted, f"wrongly admissible: {admitted}"


def equivalence_anchors():
    a = equivalent_under_moves(ParamKnot(1, 0, 1, 2), ParamKnot(1, 0, 1, 1), 2)
    b = equivalent_under_moves(normalize(1, 1, 4, 2), ParamKnot(1, 4, 1, 5), 1)
    return a and b, f"trefoil {a}, t(3,5) {b}"


def e_membership():
    facts = in_E(TB) and in_E(TC) and in_E((TB * TA * TB) ** 2) and not in_E(TA)
    rng = random.Random(7)
    mismatches = 0
    for _ in range(100):
        size = rng.randint(0, 20)
        w = TwistWord([(rng.choice(("ta", "tb", "tc")), rng.choice((-1, 1))) for _ in range(size)])
        mismatches += word_action(w).torus_matrix() != omega(w)
    report = calibration_report()
    return facts and mismatches == 0 and not report, f"{mismatches} omega mismatches, {report}"


CRITERIA = [
    (1, "reference table reproduction", table_reproduction, 1.0),
    (2, "closed-form cross-check", closed_form_cross_check, 5.0),
    (3, "t(2,3) hand trace", trefoil_trace, None),
    (4, "t(3,5) intermediate state", t35_intermediate, None),
    (5, "omega calibration", omega_calibration, 2.0),
    (6, "kernel property", kernel_property, None),
    (7, "Dunwoody homology anchors", dunwoody_anchors, 10.0),
    (8, "non-admissible families", non_admissibility, None),
    (9, "equivalence anchors", equivalence_anchors, None),
    (10, "E-membership calibration", e_membership, None),
]


@pytest.mark.parametrize("number,name,check,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, name, check, limit, capsys):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    budget = f" (limit {limit:.0f} s)" if limit else ""
    status = "PASS" if ok and in_time else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:2d} {status}: {name} [{elapsed:.3f} s{budget}]"
              + ("" if status == "PASS" else f" {detail}"))
    assert ok, detail
    assert in_time, f"took {elapsed:.3f} s, limit {limit} s"
