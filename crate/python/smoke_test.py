"""Smoke test for the pyborel extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
"""

import pyborel


def main():
    assert pyborel.count_ideals("A3", abelian=True) == 8
    assert pyborel.count_ideals("E6", abelian=True) == 64
    assert pyborel.count_ideals("B", rank=3) == 20

    info = pyborel.root_system_info("E8")
    assert info["summary"]["coxeter_number"] == 30
    assert len(info["positive_roots"]) == 120

    row = pyborel.table_i("G2")
    assert row["type2"] == ["w2"] and row["type1"] == [] and row["type3"] == []

    check = pyborel.verify("2.4", "B3")
    assert check["passed"], check

    fiber = pyborel.fiber("A2", "w1+w2")
    assert [p["z"] for p in fiber] == ["-2w1+w2", "-w1-w2", "w1-2w2"]

    k = pyborel.minimal_k_type("A2", "w1+w2", "-w1-w2")
    assert k["minimal_k_type"] == "-w1-w2" and k["cohomological_degree"] == 1

    m = pyborel.k_multiplicity("A2", "w1+w2", "-w1-w2", "-w1-w2", 0)
    assert m["total"] == 1 and m["complete"]

    e6 = pyborel.e6_example(2)
    assert [len(d["family_terms"]) for d in e6["degrees"]] == [1, 2, 5]
    assert [len(d["irreducible"]) for d in e6["degrees"]] == [1, 2, 6]

    try:
        pyborel.count_ideals("Q2")
    except ValueError:
        pass
    else:
        raise AssertionError("bad type accepted")

    print("pyborel smoke test passed")


if __name__ == "__main__":
    main()
