"""The ten acceptance criteria, one test each, with a one-line verdict per criterion."""

import pytest

from wreath_hecke import suites

CRITERIA = [
    (1, "relation suite", suites.relations_grid, 60),
    (2, "PBW oracle and associativity", suites.pbw_grid, 300),
    (3, "Jucys-Murphy identities", suites.jm_grid, 60),
    (4, "class counting", suites.class_grid, 120),
    (5, "center criterion", suites.center_grid, 120),
    (6, "c scalars", suites.scalars_grid, 30),
    (7, "cyclotomic dimension", suites.cyclo_grid, 180),
    (8, "Morita round trip", suites.morita_suite, 120),
    (9, "branching = crystal", suites.branching_grid, 600),
    (10, "crystal axioms and counts", suites.crystal_grid, 30),
]


@pytest.mark.parametrize("number, name, suite, budget", CRITERIA,
                         ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, name, suite, budget, capsys):
    report = suite()
    points = report.get("points", [])
    failed = [p for p in points if not p["pass"]]
    in_time = report["seconds"] <= budget
    verdict = "PASS" if report["pass"] and in_time else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:2d} {verdict}  {name}: {len(points)} points, "
              f"{len(failed)} failing, {report['seconds']:.1f}s (budget {budget}s)")
    assert report["pass"], failed[:3]
    assert in_time, f"{report['seconds']}s exceeds {budget}s"


def test_branching_covers_required_cases():
    names = {(p["group"], p["p"], p["n_max"]) for p in suites.branching_grid()["points"]}
    assert {("cyclic:2", 3, 3), ("cyclic:1", 2, 4), ("cyclic:1", 3, 4)} <= names


def test_morita_uses_enough_non_simple_modules():
    assert suites.morita_suite(n_max=1, random_modules=10)["non_simple"] >= 20
