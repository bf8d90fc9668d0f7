#!/usr/bin/env python3
"""Smoke test for the linksing_py extension module.

Builds nothing itself: run `cargo build -p linksing-py` first (or pass
--release and build that profile). The script locates the cdylib, copies it
next to itself under the importable name, and exercises the bindings.
"""

import argparse
import json
import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_module(profile: str) -> pathlib.Path:
    built = ROOT / "target" / profile / "liblinksing_py.so"
    if not built.exists():
        sys.exit(f"{built} not found; run `cargo build -p linksing-py` first")
    dest = pathlib.Path(__file__).resolve().parent / "linksing_py.so"
    if not dest.exists() or built.stat().st_mtime > dest.stat().st_mtime:
        shutil.copy2(built, dest)
    return dest


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--profile", default="debug", choices=["debug", "release"])
    args = ap.parse_args()

    locate_module(args.profile)
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
    import linksing_py as lp

    checks = 0

    def ok(cond, what):
        nonlocal checks
        checks += 1
        if not cond:
            sys.exit(f"FAIL: {what}")

    link = lp.Link.from_bp([2, 3, 3, 18])
    ok(link.weights() == ["9", "6", "6", "1"], "BP weight computation")
    ok(link.degree() == "18", "BP degree")
    ok(link.sign() == "positive", "sign")
    ok(link.index() == "4", "index")
    ok(link.smale_name() == "4M_∞", "Smale-Barden name")
    ok(link.b2() == "4", "second Betti number")

    link = lp.Link([2, 22, 17, 34], 68)
    ok(link.smale_name() == "3M_∞ # M_2", "weighted homogeneous name")
    ok(link.torsion() == ["2", "2"], "torsion invariant factors")

    link = lp.Link.from_bp([2, 3, 5, 75])
    ok(link.torsion() == ["2"] * 8, "torsion (Z/2)^8")

    report = json.loads(link.classify_json())
    ok(report["smale_name"] == "4M_2", "report smale_name")
    ok(report["lichnerowicz"] == "obstructed", "report obstruction")
    ok(report["homology"]["routes_agree"] is True, "route agreement")

    link = lp.Link.from_poly("z0^2+z0*z1^3+z1*z2^4+z3^6")
    ok(link.degree() == "24", "inferred degree")

    try:
        lp.Link([1, 2], 3)
        sys.exit("FAIL: short weight vector accepted")
    except ValueError:
        checks += 1

    n = lp.verify_bp(8)
    ok(n == 210, f"verify_bp instance count (got {n})")

    rows = lp.check_table(3, 3)
    ok(len(rows) == 9, "table 3 row count")
    statuses = [s for (_, s, _) in rows]
    ok(statuses.count("FAIL") == 0, "table 3 no failures")
    ok(statuses.count("FLAGGED") == 1, "table 3 borderline flag")

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
