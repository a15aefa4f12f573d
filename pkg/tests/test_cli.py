"""Command-line behavior: exit codes, file outputs, and report stability."""

import numpy as np

from quditkit import basis_state, max_abs, pauli
from quditkit.cli import main
from quditkit.serialize import load_matrix, load_state, load_weyl_coefficients, save_matrix, save_state


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_weyl_pair_files(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "generate", "--set", "weyl-pair", "--dim", "2",
            "--output", str(tmp_path),
        )
        assert code == 0
        assert "wrote:" in out
        assert max_abs(load_matrix(tmp_path / "shift.json") - pauli(1)) == 0
        assert max_abs(load_matrix(tmp_path / "clock.json") - pauli(3)) <= 1e-15

    def test_qft_set(self, tmp_path, capsys):
        code, _, _ = run(
            capsys, "generate", "--set", "qft", "--dim", "2", "--output", str(tmp_path)
        )
        assert code == 0
        got = load_matrix(tmp_path / "qft.json")
        assert max_abs(got - np.array([[1, 1], [1, -1]])) <= 1e-15

    def test_generalized_family_count_and_dim(self, tmp_path, capsys):
        code, out, _ = run(
            capsys, "generate", "--set", "generalized", "--dim", "3",
            "--sites", "2", "--output", str(tmp_path),
        )
        assert code == 0
        files = sorted(tmp_path.glob("generalized-*.json"))
        assert len(files) == 4
        for f in files:
            assert load_matrix(f).shape == (9, 9)

    def test_tau_triple(self, tmp_path, capsys):
        code, _, _ = run(
            capsys, "generate", "--set", "tau", "--dim", "3", "--output", str(tmp_path)
        )
        assert code == 0
        names = sorted(p.name for p in tmp_path.glob("*.json"))
        assert names == ["tau1.json", "tau2.json", "tau3.json"]

    def test_unknown_set(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "generate", "--set", "bogus", "--output", str(tmp_path)
        )
        assert code == 2
        assert "unknown generator set" in err

    def test_qubit_only_set_wrong_order(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "generate", "--set", "biproducts", "--dim", "3",
            "--sites", "2", "--output", str(tmp_path),
        )
        assert code == 2
        assert "l=2 only" in err


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--dim", "2", "--sites", "1")
        assert code == 0
        assert "overall: pass" in out
        assert "identity: U V = zeta V U" in out

    def test_larger_order_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--dim", "7", "--sites", "1")
        assert code == 0

    def test_unattainable_tolerance_reports_failure(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--dim", "2", "--sites", "1", "--tolerance", "1e-20"
        )
        assert code == 1
        assert "overall: FAIL" in out
        assert "residual:" in out

    def test_tabular_format(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--dim", "2", "--sites", "1", "--format", "tabular"
        )
        assert code == 0
        header = out.splitlines()[0]
        assert header.split("\t") == [
            "name", "params", "identity", "residual", "tolerance", "status"
        ]

    def test_byte_stable_reports(self, capsys):
        _, first, _ = run(capsys, "verify", "--dim", "3", "--sites", "1")
        _, second, _ = run(capsys, "verify", "--dim", "3", "--sites", "1")
        assert first == second

    def test_report_written_to_file(self, tmp_path, capsys):
        target = tmp_path / "report.txt"
        code, out, _ = run(
            capsys, "verify", "--dim", "2", "--sites", "1", "--output", str(target)
        )
        assert code == 0
        assert target.read_text() == out

    def test_env_var_tolerance(self, capsys, monkeypatch):
        monkeypatch.setenv("QUDITKIT_TOLERANCE", "1e-20")
        code, out, _ = run(capsys, "verify", "--dim", "2", "--sites", "1")
        assert code == 1
        assert "overall: FAIL" in out


class TestClosure:
    def test_biproducts_fall_short(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--set", "biproducts", "--dim", "2", "--sites", "2"
        )
        assert code == 0
        assert "achieved-dim: 6" in out
        assert "target-dim: 15" in out
        assert "universal: false" in out

    def test_expectation_failure_exit(self, capsys):
        code, _, err = run(
            capsys, "closure", "--set", "biproducts", "--dim", "2", "--sites", "2",
            "--expect-universal",
        )
        assert code == 1
        assert "expectation failed" in err

    def test_augmented_clifford_universal(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--set", "clifford-universal", "--dim", "2",
            "--sites", "2", "--expect-universal",
        )
        assert code == 0
        assert "achieved-dim: 15" in out
        assert "universal: true" in out

    def test_qudit_universal_single_site(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--set", "qudit-universal", "--dim", "3",
            "--sites", "1", "--expect-universal",
        )
        assert code == 0
        assert "achieved-dim: 8" in out

    def test_dimension_cap(self, capsys):
        code, _, err = run(
            capsys, "closure", "--set", "qudit-universal", "--dim", "3",
            "--sites", "2", "--max-dim", "5",
        )
        assert code == 2
        assert "exceeds the cap" in err

    def test_two_site_qudit_set(self, capsys):
        code, out, _ = run(
            capsys, "closure", "--set", "qudit-universal", "--dim", "3",
            "--sites", "2", "--expect-universal",
        )
        assert code == 0
        assert "achieved-dim: 80" in out
        assert "universal: true" in out

    def test_generator_set_from_files(self, tmp_path, capsys):
        code, _, _ = run(
            capsys, "generate", "--set", "qudit-universal", "--dim", "3",
            "--sites", "1", "--output", str(tmp_path),
        )
        assert code == 0
        capsys.readouterr()
        code, out, _ = run(capsys, "closure", "--input", str(tmp_path))
        assert code == 0
        assert "achieved-dim: 8" in out
        assert "universal: true" in out

    def test_set_and_input_are_exclusive(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "closure", "--set", "biproducts", "--input", str(tmp_path)
        )
        assert code == 2
        assert "exactly one" in err

    def test_basis_dump(self, tmp_path, capsys):
        code, _, _ = run(
            capsys, "closure", "--set", "qudit-universal", "--dim", "3",
            "--sites", "1", "--dump-basis", str(tmp_path),
        )
        assert code == 0
        files = sorted(tmp_path.glob("basis-*.json"))
        assert len(files) == 8
        assert load_matrix(files[0]).shape == (3, 3)


class TestDecompose:
    def test_sigma2_single_coefficient(self, tmp_path, capsys):
        source = tmp_path / "m.json"
        save_matrix(source, pauli(2))
        target = tmp_path / "c.json"
        code, out, _ = run(
            capsys, "decompose", "--input", str(source), "--dim", "2",
            "--output", str(target),
        )
        assert code == 0
        assert "reconstruction-residual:" in out
        assert "coefficient: a=1 b=1" in out
        table = load_weyl_coefficients(target)
        assert abs(table[1, 1] - 1j) <= 1e-14
        assert abs(table[0, 0]) <= 1e-14

    def test_identity_decomposition(self, tmp_path, capsys):
        source = tmp_path / "m.json"
        save_matrix(source, np.eye(3))
        code, out, _ = run(capsys, "decompose", "--input", str(source))
        assert code == 0
        assert "coefficient: a=0 b=0 re=1" in out

    def test_dim_mismatch(self, tmp_path, capsys):
        source = tmp_path / "m.json"
        save_matrix(source, np.eye(3))
        code, _, err = run(capsys, "decompose", "--input", str(source), "--dim", "4")
        assert code == 2
        assert "does not match" in err


class TestQft:
    def test_written_file_is_unitary(self, tmp_path, capsys):
        target = tmp_path / "f.json"
        code, _, _ = run(
            capsys, "qft", "--dim", "3", "--normalized", "--output", str(target)
        )
        assert code == 0
        f = load_matrix(target)
        assert max_abs(f @ f.conj().T - np.eye(3)) <= 1e-13

    def test_printed_matrix(self, capsys):
        code, out, _ = run(capsys, "qft", "--dim", "2")
        assert code == 0
        assert "dim: 2" in out
        assert "row 0:" in out


class TestApply:
    def test_single_site_not(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        gate_path = tmp_path / "gate.json"
        out_path = tmp_path / "out.json"
        save_state(state_path, basis_state(2, 2, [0, 0]))
        save_matrix(gate_path, pauli(1))
        code, out, _ = run(
            capsys, "apply", "--input", str(state_path), "--gate", str(gate_path),
            "--sites", "2", "--output", str(out_path),
        )
        assert code == 0
        assert "norm-before: 1" in out
        assert "norm-after: 1" in out
        result = load_state(out_path)
        assert max_abs(result.amplitudes - basis_state(2, 2, [0, 1]).amplitudes) == 0

    def test_named_qft_gate(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        save_state(state_path, basis_state(3, 1, [0]))
        code, out, _ = run(
            capsys, "apply", "--input", str(state_path), "--set", "qft"
        )
        assert code == 0
        assert "amplitude 0: (1, 0)" in out
        assert "amplitude 2: (1, 0)" in out

    def test_normalized_qft_gate(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        out_path = tmp_path / "out.json"
        save_state(state_path, basis_state(3, 1, [0]))
        code, _, _ = run(
            capsys, "apply", "--input", str(state_path), "--set", "qft",
            "--normalized", "--output", str(out_path),
        )
        assert code == 0
        result = load_state(out_path)
        assert max_abs(result.amplitudes - np.ones(3) / np.sqrt(3)) <= 1e-14

    def test_malformed_matrix_file(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        save_state(state_path, basis_state(2, 1, [0]))
        gate_path = tmp_path / "gate.json"
        gate_path.write_text('{"dim": 2, "entries": [[1, 0], [0, 0], [0, 0]]}')
        code, _, err = run(
            capsys, "apply", "--input", str(state_path), "--gate", str(gate_path)
        )
        assert code == 2
        assert "entries" in err

    def test_site_out_of_range(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        gate_path = tmp_path / "gate.json"
        save_state(state_path, basis_state(2, 2, [0, 0]))
        save_matrix(gate_path, pauli(1))
        code, _, err = run(
            capsys, "apply", "--input", str(state_path), "--gate", str(gate_path),
            "--sites", "3",
        )
        assert code == 2
        assert "out of range" in err

    def test_gate_required(self, tmp_path, capsys):
        state_path = tmp_path / "in.json"
        save_state(state_path, basis_state(2, 1, [0]))
        code, _, err = run(capsys, "apply", "--input", str(state_path))
        assert code == 2
        assert "--gate" in err
