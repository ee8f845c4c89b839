"""Smoke test for the compiled module.

Build with `cargo build -p gagola-python --release --features extension-module`,
copy target/release/libgagola.so to gagola.so next to this file (or anywhere
on PYTHONPATH), then run `python3 smoke_test.py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import gagola  # noqa: E402


def main():
    x = gagola.FieldElement.parse("0x5@GF(2^3,0xB)")
    assert str(x) == "0x5@GF(2^3,0xB)"
    assert x.order() == 7
    assert str(x * x.inverse()) == "0x1@GF(2^3,0xB)"
    assert x ** 7 == gagola.FieldElement.parse("0x1@GF(2^3,0xB)")

    q8 = gagola.Group("perm:m=8;gens=(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)")
    assert q8.order == 8 and not q8.is_abelian()
    cert = json.loads(q8.certify()[0])
    assert cert["schema"] == "pairCert/1"
    assert (cert["d"], cert["e"]) == (2, 2)

    heis = gagola.Group("heis:q=3")
    cert = json.loads(heis.certify()[0])
    assert (cert["d"], cert["e"], cert["order"]) == (6, 3, 54)

    table = json.loads(gagola.Group("sl2:q=4").character_table())
    assert sum(d * d for d in table["degrees"]) == 60

    report = json.loads(gagola.run_suite("numtheory"))
    assert report["schema"] == "report/1" and report["status"] == "pass"

    assert gagola.numcond_solvable(1, 3) is False
    assert gagola.zsigmondy(2, 6) is None
    assert gagola.factorize(2**32 + 1) == [(641, 1), (6700417, 1)]

    try:
        gagola.Group("heis:q=six")
    except ValueError:
        pass
    else:
        raise AssertionError("bad spec accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
