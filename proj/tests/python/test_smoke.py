"""Smoke tests for the python module."""

import ttmin


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def main():
    and2 = ttmin.TruthTable("0001")
    check(and2.n == 2, "variable count")
    check(len(and2) == 4, "table length")
    check(str(and2) == "0001", "round trip")
    check(ttmin.evaluate(and2, "11"), "AND on 11")
    check(not ttmin.evaluate(and2, "10"), "AND on 10")
    check(ttmin.count_ones(and2) == 1, "count_ones")

    maj3 = ttmin.TruthTable("00010111")
    check(str(ttmin.restrict(maj3, "**1")) == "0111", "restriction")
    reduced, support = ttmin.reduce_to_support(ttmin.TruthTable("0101"))
    check(str(reduced) == "01" and support == [1], "support reduction")

    check(ttmin.anf(ttmin.TruthTable("0111")) == "x1 + x2 + x1*x2", "ANF rendering")

    dt = ttmin.minimize_dt(and2)
    check(dt["size"] == 5, "decision tree size")

    parity3 = ttmin.TruthTable("01101001")
    ldt = ttmin.minimize_ldt(parity3)
    check(ldt["size"] == 3, "parity LDT size")

    srodt = ttmin.minimize_srodt(maj3)
    check(srodt["size"] == 3, "majority SRODT size")

    ldl = ttmin.minimize_ldl(ttmin.TruthTable("0110"))
    check(ldl["size"] == 1, "parity LDL size")
    check(ttmin.minimize_ldl(maj3).get("reject"), "majority LDL reject")

    rof = ttmin.minimize_rof_xor(parity3)
    check(rof["size"] == 1, "parity read-once size")
    check(ttmin.minimize_rof_xor(maj3).get("reject") == "indecomposable", "majority reject")

    uf2 = ttmin.minimize_uf2(maj3)
    check(uf2["size"] == 6, "majority UF2 leaves")

    f2a = ttmin.minimize_f2a(ttmin.TruthTable("1110"))
    check(f2a["size"] == 2, "NAND F2A leaves")

    pi = ttmin.minimize_pi2a(ttmin.TruthTable("0110"))
    check(pi["size"] == 2 and pi["algebraic"] == "x1 + x2", "parity product form")

    order, size = ttmin.obdd_optimal_order(ttmin.TruthTable("01010011"))
    check(size == 3 and order[0] == 3, "multiplexer OBDD order")

    obdd = ttmin.obdd_build(and2, [1, 2])
    check(obdd["size"] == 2, "AND OBDD size")

    mubp = ttmin.mubp_construct(ttmin.TruthTable("01010111"))
    check(mubp["size"] == 3, "chain program size")
    check(ttmin.mubp_construct(ttmin.TruthTable("0110")).get("reject"), "parity chain reject")

    report = ttmin.run_suite("trichotomy")
    check(report["passed"] and report["checked"] == 65536, "trichotomy suite")

    print("smoke tests passed")


if __name__ == "__main__":
    main()
