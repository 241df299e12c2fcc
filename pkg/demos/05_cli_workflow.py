#!/usr/bin/env python3
"""The JSON interchange workflow, driven through the command line.

Writes class and resolution-datum files, then pipes them through the CLI the
way an external toolchain would: normalize, convolve, vanishing, realize,
oracle. Uses `python -m motivic` so it works without the console script on
PATH.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from motivic import MuClass, class_to_json, datum_to_json, SNCDatum, Stratum


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "motivic", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout.strip()


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    orb2 = tmp / "orb2.json"
    orb2.write_text(json.dumps(class_to_json(MuClass.orbit(2))))

    raw = tmp / "raw.json"
    raw.write_text(json.dumps({"terms": [
        {"coeff": {"0": 1}, "factors": [{"gm": 2}]},
        {"coeff": {"0": 3}, "factors": [{"orb": 2}, {"orb": 3}]}]}))

    one = MuClass.one()
    datum = tmp / "a3.json"
    datum.write_text(json.dumps(datum_to_json(SNCDatum(
        [("E", 3)], [Stratum({"E"}, one, MuClass.orbit(3), "singular")],
        MuClass.zero(), one))))

    print("normalize a raw class (torus factor and unfused orbits):")
    print("  ", cli("normalize", str(raw), "--pretty")[1])

    print("convolve the orbit pair with itself:")
    print("  ", cli("convolve", str(orb2), str(orb2))[1])

    print("vanishing cycles of the cube datum, then its Euler characteristic:")
    code, out = cli("vanishing", str(datum))
    print("  ", out)
    phi = tmp / "phi.json"
    phi.write_text(out)
    print("   chi_c:", cli("realize", "--chi-c", str(phi))[1])

    print("the finite-field oracle:")
    print("   #fer(2,2)(F_11) =", cli("oracle", "--fer", "2", "2", "--q", "11")[1])

    print("errors are structured and exit codes are meaningful:")
    bad = tmp / "bad.json"
    bad.write_text(json.dumps({"terms": [{"coeff": {"0": 1}, "factors": [{"orb": 0}]}]}))
    code, out = cli("normalize", str(bad))
    print(f"   rc={code}", out)
