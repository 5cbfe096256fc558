#!/usr/bin/env python3
"""The documented brute force behind the negative-control fixture.

A functional that fails to vanish on A^2 should break submultiplicativity of
q(a) = ||a||_1 + |psi(a)|, but not every such psi produces a violating pair:
with psi = {e2: 5} alone, q(e2 e2) = 6 <= 36 = q(e2)^2, and scaling cannot
help because both sides are homogeneous of degree 2.  This script sweeps
psi(e4) over small rationals and the coefficient of the witness a = e2 + c e4
over small integers until q(a^2) > q(a)^2, prints the first hit, and checks
it against the fixture frozen into algnorm.verify.
"""
import sys

from algnorm.verify import (NEGATIVE_CONTROL_PSI, NEGATIVE_CONTROL_WITNESS,
                            find_negative_control)


def main() -> int:
    found = find_negative_control()
    if found is None:
        print("no violating configuration in the search window", file=sys.stderr)
        return 1
    print("first violating configuration:")
    print(f"  psi(e2) = {found['psi_e2'].re}")
    print(f"  psi(e4) = {found['psi_e4'].re}")
    print(f"  witness a = b = e2 + {found['coeff']} e4")
    print(f"  q(a^2)  = {found['q(a^2)']}  >  q(a)^2 = {found['q(a)^2']}")
    frozen_ok = (found["psi_e4"] == NEGATIVE_CONTROL_PSI[4]
                 and NEGATIVE_CONTROL_WITNESS.get(4).re == found["coeff"])
    print(f"matches the frozen fixture: {'yes' if frozen_ok else 'NO'}")
    return 0 if frozen_ok else 1


if __name__ == "__main__":
    sys.exit(main())
