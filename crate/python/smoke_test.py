#!/usr/bin/env python3
"""Smoke test for the modp_lab_py extension module.

Builds are produced by cargo (`cargo build -p modp-lab-python`); this script
locates the resulting shared library, imports it under its Python module name,
and asserts a handful of independently computed values. Run from the
repository root:

    cargo build -p modp-lab-python
    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        REPO_ROOT / "target" / "release" / "libmodp_lab_py.so",
        REPO_ROOT / "target" / "debug" / "libmodp_lab_py.so",
        # Non-Linux naming, for completeness.
        REPO_ROOT / "target" / "release" / "libmodp_lab_py.dylib",
        REPO_ROOT / "target" / "debug" / "libmodp_lab_py.dylib",
    ]
    built = next((path for path in candidates if path.exists()), None)
    if built is None:
        sys.exit(
            "error: no built extension found; run `cargo build -p modp-lab-python` first"
        )
    staging = Path(tempfile.mkdtemp(prefix="modp_lab_py_"))
    shutil.copy2(built, staging / "modp_lab_py.so")
    sys.path.insert(0, str(staging))
    import modp_lab_py

    return modp_lab_py


def main():
    lab = import_module()

    # Tame parameters: p = 5, d = 2 gives e = 24 and s = 6.
    params = lab.TameParams(5, 2)
    assert params.p == 5 and params.d == 2
    assert params.e == 24, params.e
    assert params.s == 6, params.s
    assert params.reduce(-1) == 23

    # Bad primes raise ValueError with a readable message.
    try:
        lab.TameParams(4, 1)
    except ValueError as err:
        assert "odd prime" in str(err), err
    else:
        raise AssertionError("TameParams(4, 1) should raise ValueError")

    # Profile enumeration: the worked example with x = [1, 2], y = [0, 1]
    # has generic-fiber exponent 16, by both computation routes.
    profiles = lab.enumerate_profiles(5, 2, 1, [1, 2])
    assert len(profiles) == 10, len(profiles)
    target = [p for p in profiles if p["x"] == [1, 2] and p["y"] == [0, 1]]
    assert len(target) == 1
    assert target[0]["kappaProfile"] == 16
    assert target[0]["kappaModule"] == 16
    assert all(p["kappaProfile"] == p["kappaModule"] for p in profiles)

    # Residual representations: 2:16,1:3 over p = 5 has inertia exponents
    # {1, 3, 3}, determinant exponent 3, and is not 1-regular.
    rep = lab.ResidualRep.parse(5, "2:16,1:3")
    assert rep.prime == 5 and rep.dimension == 3
    assert rep.exponents() == [1, 3, 3], rep.exponents()
    assert rep.det_inertia_exponent() == 3
    assert rep.has_big_subquotient()
    assert not rep.is_r_regular(1)
    summands = rep.summands()
    assert {"d": 2, "kappa": 16, "digits": [1, 3]} in summands, summands

    # Attainable exponents grow with r.
    assert lab.attainable_exponents(5, 1, 0, [2]) == [2]
    assert lab.attainable_exponents(5, 1, 1, [2]) == [2, 3]

    # The exhaustive screen on a hand-counted instance.
    report = lab.verify_theorem(7, 3, 0, type_exponents=[0, 1, 2])
    assert report["repsChecked"] == 10, report
    assert report["counterexamples"] == []

    # And across all types of size 3 for p = 7.
    full = lab.verify_theorem(7, 3, 0)
    assert full["typesChecked"] == 56, full["typesChecked"]
    assert full["counterexamples"] == []

    # Admissible weights for q = 5, n = 3: exactly the minimal weight.
    assert lab.admissible_weights(5, 3) == [[1, 0, 0]]

    # Regularity of small matrices: a full Jordan block is regular,
    # diag(1, 1, 2) is not.
    j3 = [1, 1, 0, 0, 1, 1, 0, 0, 1]
    assert lab.is_regular_matrix(3, j3)
    assert not lab.is_regular_matrix(7, [1, 0, 0, 0, 1, 0, 0, 0, 2])

    # char poly of J_3(1) over F_5 is (X - 1)^3 = X^3 + 2X^2 + 3X + 4,
    # low degree first.
    assert lab.char_poly(5, j3) == [4, 3, 2, 1]

    # Extension-field entries: multiplication by the generator of F_4 as a
    # 1x1 matrix, using coefficient-list syntax.
    assert lab.char_poly(4, [[0, 1]]) == [2, 1]

    # Monomial induction over F_7 with exponents (1, 2, 4).
    monomial = lab.monomial_verify(7, [1, 2, 4])
    assert monomial["groupOrder"] == 648
    assert monomial["zeta"] == 3
    assert monomial["shiftInvariant"] is False
    assert monomial["report"]["passed"] is True
    check_names = [c["name"] for c in monomial["report"]["checks"]]
    assert "off-diagonal-regular" in check_names, check_names

    # Char-poly annihilation across the 12-element rotation model.
    a4 = lab.annihilation_holds(
        7,
        [[1, 0, 0, 0, 6, 0, 0, 0, 6], [0, 0, 1, 1, 0, 0, 0, 1, 0]],
        [[1], [1]],
    )
    assert a4["pairCount"] == 12
    assert a4["report"]["holds"] is True

    print("smoke test passed:")
    print(json.dumps({"profiles": len(profiles), "typesChecked": full["typesChecked"],
                      "monomialOrder": monomial["groupOrder"]}, indent=2))


if __name__ == "__main__":
    main()
