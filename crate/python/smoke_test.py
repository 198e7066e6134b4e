"""Smoke test for the gainv_py extension."""

import json

import gainv_py as g

BETA_1_2 = (
    "x1*z^2 - 2*x2^2*x3^2*y1*z - x1^5*x2*x3*y2*y3"
    " + x1^2*x2^4*x3*y1*y3 + x1^2*x2*x3^4*y1*y2"
)


def main():
    assert g.beta(1, 1) == "x1*z - x2^2*x3^2*y1"
    assert g.beta(1, 2) == BETA_1_2
    assert g.beta_name(2, 3) == "beta2_3"

    names = [n for n, _ in g.generator_set(1)]
    assert names == ["u12", "u13", "u23", "beta1_0", "beta2_0", "beta3_0", "beta1_1", "beta2_1", "beta3_1"], names

    member, cert = g.subduct("x1*z*x2 - x2^3*x3^2*y1", 1)
    assert member and cert.endswith("status = complete\n"), cert
    member, _ = g.subduct("z", 1)
    assert not member

    assert len(g.kernel("roberts", [3, 2, 2])) == 2
    assert len(g.kernel("roberts", [3, 2, 2], ["x1", "x2", "x3", "y1", "y2", "y3"])) == 1
    assert g.kernel("sl2:V[2]", [2, 0]) == ["x0*x2 - 1/4*x1^2"]
    assert len(g.quadratic_invariants(6)) == 4

    v, w = "1,1,1,0,0,0,0", "1,1,1,1,1,1,1"
    assert g.separating_generator(v, w, 1) is None
    assert g.solve_group_element(v, w) == "1"
    assert g.solve_group_element(v, "1,1,1,1,1,1,0") is None
    assert g.separating_generator(v, "1,1,1,0,1,0,0", 1) == "u12"

    reports = json.loads(g.run_checks(["roberts-invariants"]))
    assert all(r["status"] == "pass" for r in reports), reports
    reports = json.loads(g.run_checks(["example1"]))
    assert [r["id"] for r in reports if r["status"] == "fail"] == ["example1-conductor"]

    try:
        g.kernel("nope", [1])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown ring accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
