"""Smoke test for the pyketsim extension module.

Build the module first (`maturin develop`, or `cargo build -p ketsim-py` and
put libpyketsim.so on PYTHONPATH as pyketsim.so), then run this file.
"""

import math

import pyketsim as ks


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def main():
    # States and the inner product.
    phi = ks.parse_state("i*(1/sqrt(2))|01> + (1/sqrt(2))|11>")
    psi = ks.QuantumState.parse("i*(1/sqrt(3))|1> + (1/sqrt(3))|2> + (1/sqrt(3))|3>", qubits=2)
    assert phi.n == 2 and len(phi) == 4
    assert close(phi.dot(psi), math.sqrt(2) / math.sqrt(3))
    assert ks.parse_state(ks.format_state(psi, decimal=True), qubits=2).approx_eq(psi, 1e-9)

    # Gates.
    h = ks.Operator.hadamard()
    plus, factor = h.apply(ks.QuantumState.basis("0"))
    assert close(factor, 1.0)
    probs = ks.probabilities(plus)
    assert sorted(probs) == ["0", "1"] and all(close(p, 0.5) for p in probs.values())
    x_simple = ks.Operator([(1, "1", "0")])
    assert not x_simple.is_unitary()
    assert ks.Operator.pauli_x().tensor(x_simple).approx_eq(ks.Operator([(1, "01", "10"), (1, "11", "00")]))
    h3 = ks.Operator.hadamard_n(3)
    assert h3.is_unitary(1e-10)
    assert h3.approx_eq(h.tensor(h).tensor(h))
    assert ks.bitdot(0b101, 0b111) == 0

    # Bell state from H then CNOT.
    bell, _ = ks.Operator.cnot().apply(h.tensor(ks.Operator.identity(1)).apply(ks.QuantumState.basis("00"))[0])
    assert ks.is_product_state(bell)["is_product"] is False
    product = ks.is_product_state(plus.tensor(plus))
    assert product["is_product"] and len(product["factors"]) == 2

    # Measurement.
    first = ks.prefix_distribution(bell, 1)
    assert sorted(first) == ["0", "1"] and all(close(p, 0.5) for p in first.values())
    rec = ks.sample({"0": 0.5, "1": 0.5}, 10_000, seed=3)
    assert rec["shots"] == 10_000 and sum(rec["counts"].values()) == 10_000
    assert rec == ks.sample({"0": 0.5, "1": 0.5}, 10_000, seed=3)

    # Deutsch-Jozsa against the classical baselines.
    for spec, verdict in [("constant:1", "constant"), ("balanced:parity", "balanced"), ("balanced:bit:2", "balanced")]:
        f = ks.BooleanOracle(4, spec)
        r = ks.deutsch_jozsa(f)
        assert r["verdict"] == verdict and r["oracle_applications"] == 1
        assert close(r["p_zero"], 1.0 if verdict == "constant" else 0.0, 1e-10)
        assert ks.classify_classical_deterministic(f)[0] == verdict
    f = ks.BooleanOracle(4, "constant:0")
    assert ks.classify_classical_deterministic(f) == ("constant", 9)
    assert f.queries == 9
    verdict, queries, bound = ks.classify_classical_probabilistic(f, k=10, seed=1)
    assert verdict == "constant" and queries == 10 and close(bound, 2**-10)
    assert ks.BooleanOracle.from_table([False, False, False, True]).kind == "unconstrained"
    assert ks.oracle_operator(ks.BooleanOracle(2, "balanced:parity")).is_unitary()

    try:
        ks.parse_state("|0> + |1>")
    except ks.KetsimError as e:
        assert "normalized" in str(e)
    else:
        raise AssertionError("unnormalized input accepted")

    print("pyketsim smoke test passed")


if __name__ == "__main__":
    main()
