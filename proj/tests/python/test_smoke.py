"""Smoke tests for the python bindings and the CLI binary."""

import json
import os
import subprocess

import toral


def check(cond, message):
    if not cond:
        raise AssertionError(message)


def test_catalog_and_presets():
    keys = toral.catalog()
    check("sign" in keys and "weil_restriction" in keys, "catalog incomplete")
    sign = toral.preset("sign")
    check(sign.rank == 1 and sign.group_order == 2, "sign preset shape")
    check(toral.invariants(sign).rank == 0, "sign invariants")
    coinv = toral.coinvariants(sign)
    check(coinv.free_rank == 0 and coinv.torsion == ["2"], "sign coinvariants")


def test_cohomology_and_oracles():
    sign = toral.preset("sign")
    h1 = toral.cohomology(sign, 1)
    check(str(h1) == "Z/2", "H^1(Z/2, Z sign) = Z/2")
    check(h1 == toral.cyclic_oracle(sign, 1), "cyclic oracle agreement")
    check(
        toral.brute_force_cohomology(sign, 1, 4) == toral.cohomology(sign, 1, 4),
        "brute force agreement mod 4",
    )
    swap = toral.preset("weil_restriction", 2)
    check(toral.cohomology(swap, 1).is_trivial(), "Shapiro vanishing")
    check(toral.fixed_point_component_group(sign) == h1, "component group identity")


def test_custom_lattice_roundtrip():
    swap = toral.GaloisLattice(
        order=2,
        mult_table=[0, 1, 1, 0],
        identity_index=0,
        action=[[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
    )
    check(toral.invariants(swap).basis == [["1", "1"]], "swap invariants basis")
    try:
        toral.GaloisLattice(
            order=2,
            mult_table=[0, 1, 1, 0],
            identity_index=0,
            action=[[["1", "0"], ["0", "1"]], [["0", "-1"], ["1", "0"]]],
        )
        raise AssertionError("invalid action accepted")
    except toral.ToralError:
        pass


def test_sandwich_and_weil():
    swap = toral.preset("weil_restriction", 2)
    arith = toral.preset_arithmetic(swap, "unramified")
    s = toral.sandwich(swap, arith)
    check(s["inclusions_hold"], "sandwich inclusions")
    check(s["index_xt_over_xgamma"] == "2", "sandwich index 2")
    check(s["index_pr_over_xt"] == "1", "X_*(X_T) = Pr(X)")
    w = toral.weil_suite(swap, arith, modulus=2, denominators=6)
    for key in (
        "zeta_cocycle_identities",
        "z_cocycle_identities",
        "coboundary_detects_zero_only",
        "exp_compatibility",
    ):
        check(w[key], f"weil suite: {key}")


def test_analyze_json():
    doc = json.loads(toral.analyze_json("sign", arith="unramified"))
    check(doc["version"] == 1, "report version")
    check(doc["cohomology"]["X"]["H1"]["torsion"] == ["2"], "H^1 in report")
    check(doc["unramified"]["xt_rank"] == 0, "X_T rank in report")
    check(doc["conventions"]["frobenius_log_q_step"] == "-1", "convention block")


def test_oracle_sweep():
    summary = toral.oracle_sweep(max_group=3, max_mod=2, max_rank=1)
    check(summary["mismatches"] == 0, "oracle sweep mismatch")
    check(summary["performed"] > 0, "oracle sweep ran nothing")


def test_cli():
    cli = os.environ.get("TORAL_CLI")
    if not cli:
        print("TORAL_CLI not set; skipping CLI checks")
        return
    out = subprocess.run([cli, "catalog"], capture_output=True, text=True)
    check(out.returncode == 0, "catalog exit code")
    check("norm_one_cyclic" in out.stdout, "catalog listing")

    out = subprocess.run(
        [cli, "analyze", "sign", "--arith", "unramified", "--json"],
        capture_output=True,
        text=True,
    )
    check(out.returncode == 0, "analyze exit code")
    doc = json.loads(out.stdout)
    check(doc["unramified"]["xt_rank"] == 0, "analyze output")

    out2 = subprocess.run(
        [cli, "analyze", "sign", "--arith", "unramified", "--json"],
        capture_output=True,
        text=True,
    )
    check(out.stdout == out2.stdout, "reports must be byte-stable")

    out = subprocess.run([cli, "analyze", "no_such_preset"], capture_output=True, text=True)
    check(out.returncode == 1, "unknown preset must exit 1")

    out = subprocess.run(
        [cli, "sandwich", "a2_weyl", "--arith", "unramified"],
        capture_output=True,
        text=True,
    )
    check(out.returncode == 1, "non-cyclic unramified data must be rejected")

    out = subprocess.run(
        [cli, "weil", "weil_restriction", "--n", "2", "--mod", "2", "--den", "4"],
        capture_output=True,
        text=True,
    )
    check(out.returncode == 0, "weil suite exit code")

    out = subprocess.run(
        [cli, "oracle", "--max-group", "2", "--max-mod", "2", "--max-rank", "1"],
        capture_output=True,
        text=True,
    )
    check(out.returncode == 0, "oracle exit code")

    out = subprocess.run(
        [
            cli, "oracle", "--max-group", "1", "--max-mod", "2", "--max-rank", "1",
            "--inject-fault",
        ],
        capture_output=True,
        text=True,
    )
    check(out.returncode == 3, "injected fault must exit 3")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
